#include "bichroma/sequences.hpp"

#include <algorithm>

#include "bichroma/chi_engine.hpp"
#include "bichroma/multigraph.hpp"

namespace bichroma {

namespace {

void validate_params(SeqParams p) {
    if (p.k < 0 || p.l < 0)
        throw input_error("sequence params must be nonnegative");
    if (p.k == 0 && p.l == 0)
        throw input_error("sequence params must not both be zero");
}

} // namespace

std::vector<mpz_class> a_seq(SeqParams p, int n_max) {
    validate_params(p);
    if (n_max < 0)
        throw input_error("a_seq needs N >= 0");
    std::vector<mpz_class> a;
    a.reserve(static_cast<std::size_t>(n_max) + 1);
    a.emplace_back(1);
    if (n_max >= 1)
        a.emplace_back(p.k + p.l);
    for (int n = 2; n <= n_max; ++n)
        a.push_back((p.k + p.l - 1) * a[static_cast<std::size_t>(n - 1)] +
                    p.l * a[static_cast<std::size_t>(n - 2)]);
    return a;
}

std::vector<mpz_class> b_seq(SeqParams p, int n_max) {
    validate_params(p);
    if (n_max < 1)
        throw input_error("b_seq needs N >= 1");
    std::vector<mpz_class> b;
    b.reserve(static_cast<std::size_t>(n_max));
    b.emplace_back(p.l);
    if (n_max >= 2)
        b.push_back(mpz_class(p.k + p.l) * (p.k + p.l) - p.k);
    if (n_max >= 3) {
        auto a = a_seq(p, 3);
        b.push_back(a[3] - b[1] + p.l * a[1]);
    }
    for (int n = 4; n <= n_max; ++n)
        b.push_back((p.k + p.l - 2) * b[static_cast<std::size_t>(n - 2)] +
                    (p.k + 2 * p.l - 1) * b[static_cast<std::size_t>(n - 3)] +
                    p.l * b[static_cast<std::size_t>(n - 4)]);
    return b;
}

std::vector<mpz_class> classic_sequence(ClassicKind kind, int n_max) {
    if (n_max < 0)
        throw input_error("classic_sequence needs N >= 0");
    std::vector<mpz_class> s;
    switch (kind) {
    case ClassicKind::fibonacci:
        s.emplace_back(0);
        if (n_max >= 1)
            s.emplace_back(1);
        for (int n = 2; n <= n_max; ++n)
            s.push_back(s[static_cast<std::size_t>(n - 1)] + s[static_cast<std::size_t>(n - 2)]);
        return s;
    case ClassicKind::lucas:
        if (n_max < 1)
            throw input_error("lucas sequence starts at L_1, needs N >= 1");
        s.emplace_back(1);
        if (n_max >= 2)
            s.emplace_back(3);
        for (int n = 3; n <= n_max; ++n)
            s.push_back(s[static_cast<std::size_t>(n - 2)] + s[static_cast<std::size_t>(n - 3)]);
        return s;
    case ClassicKind::pell:
        s.emplace_back(1);
        if (n_max >= 1)
            s.emplace_back(1);
        for (int n = 2; n <= n_max; ++n)
            s.push_back(2 * s[static_cast<std::size_t>(n - 1)] + s[static_cast<std::size_t>(n - 2)]);
        return s;
    }
    throw input_error("unknown classic sequence kind");
}

HankelResult hankel_det_b(SeqParams p) {
    auto b = b_seq(p, 5);
    auto at = [&](int n) { return b[static_cast<std::size_t>(n - 1)]; };
    // [[b3,b2,b1],[b4,b3,b2],[b5,b4,b3]]
    mpz_class det = at(3) * (at(3) * at(3) - at(4) * at(2)) -
                    at(2) * (at(4) * at(3) - at(5) * at(2)) +
                    at(1) * (at(4) * at(4) - at(5) * at(3));
    mpz_class k(p.k), l(p.l);
    mpz_class kl1 = k + l - 1;
    mpz_class closed = -k * k * (k - 1) * l * (kl1 * kl1 + 4 * l);
    return {det, closed};
}

namespace {

// Exact RREF of the augmented system; returns the candidate coefficients for
// one order-d window system, or nullopt when the equations are inconsistent.
// Free variables default to zero and are nudged to make the trailing
// coefficient nonzero when possible.
std::optional<std::vector<mpq_class>> solve_windows(const std::vector<std::vector<mpq_class>>& rows, int d) {
    std::vector<std::vector<mpq_class>> m = rows;
    const int nrows = static_cast<int>(m.size());
    std::vector<int> pivot_col_of_row;
    int row = 0;
    for (int col = 0; col < d && row < nrows; ++col) {
        int pivot = -1;
        for (int r = row; r < nrows; ++r) {
            if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0)
            continue;
        std::swap(m[static_cast<std::size_t>(row)], m[static_cast<std::size_t>(pivot)]);
        mpq_class inv = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
        for (auto& x : m[static_cast<std::size_t>(row)])
            x /= inv;
        for (int r = 0; r < nrows; ++r) {
            if (r == row)
                continue;
            mpq_class factor = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (factor == 0)
                continue;
            for (int c = col; c <= d; ++c)
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                    factor * m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (int r = row; r < nrows; ++r)
        if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(d)] != 0)
            return std::nullopt; // 0 = nonzero

    std::vector<char> is_pivot(static_cast<std::size_t>(d), 0);
    for (int c : pivot_col_of_row)
        is_pivot[static_cast<std::size_t>(c)] = 1;

    auto assemble = [&](int forced_free_col) {
        std::vector<mpq_class> sol(static_cast<std::size_t>(d), mpq_class(0));
        if (forced_free_col >= 0)
            sol[static_cast<std::size_t>(forced_free_col)] = 1;
        for (int r = static_cast<int>(pivot_col_of_row.size()) - 1; r >= 0; --r) {
            int pc = pivot_col_of_row[static_cast<std::size_t>(r)];
            mpq_class v = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(d)];
            for (int c = 0; c < d; ++c) {
                if (c == pc || is_pivot[static_cast<std::size_t>(c)])
                    continue;
                v -= m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] * sol[static_cast<std::size_t>(c)];
            }
            sol[static_cast<std::size_t>(pc)] = v;
        }
        return sol;
    };

    std::vector<mpq_class> sol = assemble(-1);
    if (sol[static_cast<std::size_t>(d - 1)] == 0) {
        for (int c = 0; c < d; ++c) {
            if (is_pivot[static_cast<std::size_t>(c)])
                continue;
            std::vector<mpq_class> alt = assemble(c);
            if (alt[static_cast<std::size_t>(d - 1)] != 0) {
                sol = std::move(alt);
                break;
            }
        }
    }
    return sol;
}

} // namespace

std::optional<Recurrence> minimal_recurrence(std::span<const mpz_class> values, int max_order) {
    if (max_order < 1)
        throw input_error("minimal_recurrence needs max_order >= 1");
    const int len = static_cast<int>(values.size());
    if (len < 2 * max_order + 2)
        throw input_error("minimal_recurrence needs at least 2*max_order+2 = " +
                          std::to_string(2 * max_order + 2) + " values, got " + std::to_string(len));

    for (int d = 1; d <= max_order; ++d) {
        // Square system from the first d windows: s_j = sum c_i s_{j-i}.
        std::vector<std::vector<mpq_class>> rows;
        for (int j = d; j < 2 * d; ++j) {
            std::vector<mpq_class> row;
            row.reserve(static_cast<std::size_t>(d) + 1);
            for (int i = 1; i <= d; ++i)
                row.emplace_back(values[static_cast<std::size_t>(j - i)]);
            row.emplace_back(values[static_cast<std::size_t>(j)]);
            rows.push_back(std::move(row));
        }
        auto sol = solve_windows(rows, d);
        if (!sol || (*sol)[static_cast<std::size_t>(d - 1)] == 0)
            continue;

        bool fits = true;
        for (int j = d; j < len && fits; ++j) {
            mpq_class acc = 0;
            for (int i = 1; i <= d; ++i)
                acc += (*sol)[static_cast<std::size_t>(i - 1)] * mpq_class(values[static_cast<std::size_t>(j - i)]);
            if (acc != mpq_class(values[static_cast<std::size_t>(j)]))
                fits = false;
        }
        if (fits)
            return Recurrence{d, std::move(*sol)};
    }
    return std::nullopt;
}

const char* identity_name(IdentityId id) {
    switch (id) {
    case IdentityId::T1_1: return "T1.1";
    case IdentityId::T1_2: return "T1.2";
    case IdentityId::T1_3: return "T1.3";
    case IdentityId::T1_4: return "T1.4";
    case IdentityId::T1_5: return "T1.5";
    case IdentityId::P1: return "P1";
    case IdentityId::L3_1: return "L3.1";
    case IdentityId::L3_2: return "L3.2";
    case IdentityId::C1: return "C1";
    case IdentityId::C2: return "C2";
    case IdentityId::C3: return "C3";
    case IdentityId::C4: return "C4";
    case IdentityId::C5: return "C5";
    case IdentityId::FL: return "FL";
    case IdentityId::PELL: return "PELL";
    }
    return "?";
}

namespace {

struct Checker {
    IdentityReport report;

    void check(std::initializer_list<int> indices, const mpz_class& lhs, const mpz_class& rhs) {
        ++report.checked;
        if (lhs != rhs) {
            ++report.failed;
            if (report.pass) {
                report.pass = false;
                report.counterexample = Counterexample{std::vector<int>(indices), lhs, rhs};
            }
        }
    }
};

[[noreturn]] void domain_error(IdentityId id, const std::string& bound) {
    throw input_error(std::string(identity_name(id)) + " requires " + bound);
}

void require_k1(IdentityId id, SeqParams p) {
    if (p.k != 1)
        throw input_error(std::string(identity_name(id)) + " is stated for k = 1, got k = " +
                          std::to_string(p.k));
}

mpz_class zpow(int base, int e) {
    mpz_class r;
    mpz_class b(base);
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

} // namespace

IdentityReport verify_identity(IdentityId id, SeqParams p, int max_index) {
    Checker ck;
    ck.report.id = id;
    const int M = max_index;

    switch (id) {
    case IdentityId::T1_1: {
        require_k1(id, p);
        if (M < 3)
            domain_error(id, "n >= 3 (max index too small)");
        auto a = a_seq(p, M);
        auto b = b_seq(p, M);
        mpz_class l(p.l);
        ck.report.grid = "l=" + std::to_string(p.l) + " 3<=n<=" + std::to_string(M);
        for (int n = 3; n <= M; ++n)
            ck.check({n}, b[static_cast<std::size_t>(n - 1)],
                     l * a[static_cast<std::size_t>(n - 1)] + l * l * a[static_cast<std::size_t>(n - 3)]);
        break;
    }
    case IdentityId::T1_2: {
        require_k1(id, p);
        if (M < 4)
            domain_error(id, "n >= 4 (max index too small)");
        auto a = a_seq(p, M);
        auto b = b_seq(p, M);
        mpz_class l2 = mpz_class(p.l) * p.l;
        ck.report.grid = "l=" + std::to_string(p.l) + " 4<=n<=" + std::to_string(M);
        for (int n = 4; n <= M; ++n)
            ck.check({n}, b[static_cast<std::size_t>(n - 1)],
                     a[static_cast<std::size_t>(n)] - l2 * a[static_cast<std::size_t>(n - 4)]);
        break;
    }
    case IdentityId::T1_3: {
        require_k1(id, p);
        if (M < 3)
            domain_error(id, "r >= 1, s >= 2, r+s <= max (max index too small)");
        auto a = a_seq(p, M);
        mpz_class l(p.l);
        ck.report.grid = "l=" + std::to_string(p.l) + " r>=1 s>=2 r+s<=" + std::to_string(M);
        for (int r = 1; r + 2 <= M; ++r)
            for (int s = 2; r + s <= M; ++s)
                ck.check({r, s}, a[static_cast<std::size_t>(r + s)],
                         l * a[static_cast<std::size_t>(r)] * a[static_cast<std::size_t>(s - 1)] +
                             l * l * a[static_cast<std::size_t>(r - 1)] * a[static_cast<std::size_t>(s - 2)]);
        break;
    }
    case IdentityId::T1_4: {
        require_k1(id, p);
        if (M < 4)
            domain_error(id, "r,s >= 2, r+s <= max (max index too small)");
        auto a = a_seq(p, M);
        mpz_class l2 = mpz_class(p.l) * p.l;
        ck.report.grid = "l=" + std::to_string(p.l) + " r,s>=2 r+s<=" + std::to_string(M);
        for (int r = 2; r + 2 <= M; ++r)
            for (int s = 2; r + s <= M; ++s)
                ck.check({r, s}, a[static_cast<std::size_t>(r + s)],
                         a[static_cast<std::size_t>(r)] * a[static_cast<std::size_t>(s)] -
                             l2 * a[static_cast<std::size_t>(r - 2)] * a[static_cast<std::size_t>(s - 2)]);
        break;
    }
    case IdentityId::T1_5: {
        require_k1(id, p);
        if (M < 7)
            domain_error(id, "r,s,t >= 2, r+s+t+1 <= max (max index too small)");
        auto a = a_seq(p, M);
        auto at = [&](int i) { return a[static_cast<std::size_t>(i)]; };
        mpz_class l1 = p.l, l3 = zpow(p.l, 3), l4 = zpow(p.l, 4);
        ck.report.grid = "l=" + std::to_string(p.l) + " r,s,t>=2 r+s+t+1<=" + std::to_string(M);
        for (int r = 2; r + 5 <= M; ++r)
            for (int s = 2; r + s + 3 <= M; ++s)
                for (int t = 2; r + s + t + 1 <= M; ++t)
                    ck.check({r, s, t}, at(r + s + t + 1),
                             l1 * at(r) * at(s) * at(t) + l3 * at(r - 1) * at(s - 1) * at(t - 1) -
                                 l4 * at(r - 2) * at(s - 2) * at(t - 2));
        break;
    }
    case IdentityId::P1: {
        require_k1(id, p);
        if (M < 6)
            domain_error(id, "r,s >= 2, t >= 1, r+s+t+1 <= max (max index too small)");
        auto a = a_seq(p, M);
        auto at = [&](int i) { return a[static_cast<std::size_t>(i)]; };
        mpz_class l1 = p.l, l3 = zpow(p.l, 3), l4 = zpow(p.l, 4);
        ck.report.grid = "l=" + std::to_string(p.l) + " r,s>=2 t>=1 r+s+t+1<=" + std::to_string(M);
        for (int r = 2; r + 4 <= M; ++r)
            for (int s = 2; r + s + 2 <= M; ++s)
                for (int t = 1; r + s + t + 1 <= M; ++t)
                    ck.check({r, s, t},
                             l1 * at(r + s) * at(t) + l3 * at(r - 1) * at(s - 1) * at(t - 1),
                             at(r + s + t + 1) - l4 * at(r - 2) * at(s - 2) * at(t - 1));
        break;
    }
    case IdentityId::L3_1: {
        if (M < 2)
            domain_error(id, "n >= 2 (max index too small)");
        auto a = a_seq(p, M);
        auto b = b_seq(p, M);
        mpz_class l(p.l);
        ck.report.grid = "k=" + std::to_string(p.k) + " l=" + std::to_string(p.l) + " 2<=n<=" + std::to_string(M);
        for (int n = 2; n <= M; ++n)
            ck.check({n}, b[static_cast<std::size_t>(n - 1)],
                     a[static_cast<std::size_t>(n)] - b[static_cast<std::size_t>(n - 2)] +
                         l * a[static_cast<std::size_t>(n - 2)]);
        break;
    }
    case IdentityId::L3_2: {
        if (M < 4)
            domain_error(id, "n >= 4 (max index too small)");
        auto a = a_seq(p, M);
        auto b = b_seq(p, M);
        auto c = [&](int n) { return b[static_cast<std::size_t>(n - 1)] + b[static_cast<std::size_t>(n - 2)]; };
        ck.report.grid = "k=" + std::to_string(p.k) + " l=" + std::to_string(p.l) + " 4<=n<=" + std::to_string(M);
        for (int n = 4; n <= M; ++n) {
            ck.check({n}, c(n), a[static_cast<std::size_t>(n)] + p.l * a[static_cast<std::size_t>(n - 2)]);
            ck.check({n}, c(n), (p.k + p.l - 1) * c(n - 1) + p.l * c(n - 2));
        }
        break;
    }
    case IdentityId::C1: {
        if (M < 1)
            domain_error(id, "n >= 1 (max index too small)");
        auto f = classic_sequence(ClassicKind::fibonacci, M + 1);
        auto lu = classic_sequence(ClassicKind::lucas, M);
        ck.report.grid = "n<=" + std::to_string(M);
        for (int n = 1; n <= M; ++n)
            ck.check({n}, lu[static_cast<std::size_t>(n - 1)],
                     f[static_cast<std::size_t>(n + 1)] + f[static_cast<std::size_t>(n - 1)]);
        break;
    }
    case IdentityId::C2: {
        if (M < 2)
            domain_error(id, "n >= 2 (max index too small)");
        auto f = classic_sequence(ClassicKind::fibonacci, M + 2);
        auto lu = classic_sequence(ClassicKind::lucas, M);
        ck.report.grid = "n<=" + std::to_string(M);
        for (int n = 2; n <= M; ++n)
            ck.check({n}, lu[static_cast<std::size_t>(n - 1)],
                     f[static_cast<std::size_t>(n + 2)] - f[static_cast<std::size_t>(n - 2)]);
        break;
    }
    case IdentityId::C3: {
        if (M < 1)
            domain_error(id, "s >= 1 (max index too small)");
        auto f = classic_sequence(ClassicKind::fibonacci, 2 * M + 1);
        auto at = [&](int i) { return f[static_cast<std::size_t>(i)]; };
        ck.report.grid = "r<=" + std::to_string(M) + " s<=" + std::to_string(M);
        for (int r = 0; r <= M; ++r)
            for (int s = 1; s <= M; ++s)
                ck.check({r, s}, at(r + s), at(r + 1) * at(s) + at(r) * at(s - 1));
        break;
    }
    case IdentityId::C4: {
        if (M < 1)
            domain_error(id, "r,s >= 1 (max index too small)");
        auto f = classic_sequence(ClassicKind::fibonacci, 2 * M + 1);
        auto at = [&](int i) { return f[static_cast<std::size_t>(i)]; };
        ck.report.grid = "r,s<=" + std::to_string(M);
        for (int r = 1; r <= M; ++r)
            for (int s = 1; s <= M; ++s)
                ck.check({r, s}, at(r + s), at(r + 1) * at(s + 1) - at(r - 1) * at(s - 1));
        break;
    }
    case IdentityId::C5: {
        if (M < 1)
            domain_error(id, "r,s,t >= 1 (max index too small)");
        auto f = classic_sequence(ClassicKind::fibonacci, 3 * M + 1);
        auto at = [&](int i) { return f[static_cast<std::size_t>(i)]; };
        ck.report.grid = "r,s,t<=" + std::to_string(M);
        for (int r = 1; r <= M; ++r)
            for (int s = 1; s <= M; ++s)
                for (int t = 1; t <= M; ++t)
                    ck.check({r, s, t}, at(r + s + t),
                             at(r + 1) * at(s + 1) * at(t + 1) + at(r) * at(s) * at(t) -
                                 at(r - 1) * at(s - 1) * at(t - 1));
        break;
    }
    case IdentityId::FL: {
        if (M < 1)
            domain_error(id, "n >= 1 (max index too small)");
        auto a = a_seq({1, 1}, M);
        auto b = b_seq({1, 1}, M);
        auto f = classic_sequence(ClassicKind::fibonacci, M + 2);
        auto lu = classic_sequence(ClassicKind::lucas, M);
        ck.report.grid = "n<=" + std::to_string(M);
        for (int n = 1; n <= M; ++n) {
            ck.check({n}, a[static_cast<std::size_t>(n)], f[static_cast<std::size_t>(n + 2)]);
            ck.check({n}, b[static_cast<std::size_t>(n - 1)], lu[static_cast<std::size_t>(n - 1)]);
        }
        break;
    }
    case IdentityId::PELL: {
        if (M < 1)
            domain_error(id, "n >= 1 (max index too small)");
        auto a = a_seq({2, 1}, M);
        auto q = classic_sequence(ClassicKind::pell, M + 1);
        ck.report.grid = "n<=" + std::to_string(M);
        for (int n = 1; n <= M; ++n)
            ck.check({n}, a[static_cast<std::size_t>(n)], q[static_cast<std::size_t>(n + 1)]);
        break;
    }
    }
    return ck.report;
}

CrossCheckReport cross_check_graphs(SeqParams p, int max_n) {
    validate_params(p);
    if (max_n < 1)
        throw input_error("cross_check_graphs needs N >= 1");

    CrossCheckReport report;
    report.params = p;
    report.max_n = max_n;

    auto a = a_seq(p, max_n);
    auto b = b_seq(p, max_n);
    ChiEngine engine;
    mpz_class k(p.k), l(p.l);

    for (int n = 1; n <= max_n; ++n) {
        mpz_class got_a = engine.chi(path_graph(n)).eval(k, l);
        ++report.checked;
        if (got_a != a[static_cast<std::size_t>(n)]) {
            report.pass = false;
            report.mismatch = "a";
            report.mismatch_n = n;
            report.expected = a[static_cast<std::size_t>(n)];
            report.got = got_a;
            return report;
        }
        mpz_class got_b = engine.chi(cycle_graph(n)).eval(k, l);
        ++report.checked;
        if (got_b != b[static_cast<std::size_t>(n - 1)]) {
            report.pass = false;
            report.mismatch = "b";
            report.mismatch_n = n;
            report.expected = b[static_cast<std::size_t>(n - 1)];
            report.got = got_b;
            return report;
        }
    }
    return report;
}

} // namespace bichroma
