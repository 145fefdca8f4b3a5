#include "bichroma/bipoly.hpp"

#include <cctype>

namespace bichroma {

void BiPoly::insert(int dx, int dy, const mpz_class& c) {
    if (c == 0)
        return;
    auto [it, fresh] = terms_.emplace(Exponents{dx, dy}, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

BiPoly BiPoly::monomial(int dx, int dy, mpz_class c) {
    if (dx < 0 || dy < 0)
        throw input_error("monomial exponents must be nonnegative");
    BiPoly p;
    p.insert(dx, dy, c);
    return p;
}

BiPoly BiPoly::xy_power(int n) {
    if (n < 0)
        throw input_error("xy_power needs n >= 0, got " + std::to_string(n));
    BiPoly p;
    mpz_class binom;
    for (int i = 0; i <= n; ++i) {
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(i));
        p.insert(i, n - i, binom);
    }
    return p;
}

mpz_class BiPoly::coeff(int dx, int dy) const {
    auto it = terms_.find({dx, dy});
    return it == terms_.end() ? mpz_class(0) : it->second;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_)
        insert(e.first, e.second, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_)
        insert(e.first, e.second, -c);
    return *this;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly r = *this;
    r += o;
    return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
    BiPoly r = *this;
    r -= o;
    return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly r;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_)
            r.insert(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return r;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
    *this = *this * o;
    return *this;
}

BiPoly BiPoly::operator-() const {
    BiPoly r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

BiPoly BiPoly::scaled_y(int d) const {
    if (d < 0)
        throw input_error("scaled_y needs d >= 0, got " + std::to_string(d));
    BiPoly r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(Exponents{e.first, e.second + d}, c);
    return r;
}

namespace {

mpz_class int_pow(const mpz_class& base, int e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

} // namespace

mpz_class BiPoly::eval(const mpz_class& xv, const mpz_class& yv) const {
    mpz_class total = 0;
    for (const auto& [e, c] : terms_)
        total += c * int_pow(xv, e.first) * int_pow(yv, e.second);
    return total;
}

BiPoly BiPoly::eval_x(const mpz_class& xv) const {
    BiPoly r;
    for (const auto& [e, c] : terms_)
        r.insert(0, e.second, c * int_pow(xv, e.first));
    return r;
}

BiPoly BiPoly::eval_y(const mpz_class& yv) const {
    BiPoly r;
    for (const auto& [e, c] : terms_)
        r.insert(e.first, 0, c * int_pow(yv, e.second));
    return r;
}

std::string BiPoly::str() const {
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = c < 0;
        if (first) {
            if (negative)
                out += '-';
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        mpz_class mag = abs(c);
        std::string factors;
        if (e.first > 0) {
            factors += 'x';
            if (e.first > 1)
                factors += '^' + std::to_string(e.first);
        }
        if (e.second > 0) {
            if (!factors.empty())
                factors += '*';
            factors += 'y';
            if (e.second > 1)
                factors += '^' + std::to_string(e.second);
        }
        if (factors.empty()) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += factors;
        } else {
            out += mag.get_str() + "*" + factors;
        }
    }
    return out;
}

namespace {

struct PolyParser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() { return text[pos]; }

    [[noreturn]] void fail(const std::string& msg) {
        throw input_error("polynomial parse error at offset " + std::to_string(pos) + ": " + msg);
    }

    mpz_class parse_integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            fail("expected integer");
        return mpz_class(std::string(text.substr(start, pos - start)), 10);
    }

    int parse_exponent() {
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            mpz_class e = parse_integer();
            if (!e.fits_sint_p())
                fail("exponent too large");
            return static_cast<int>(e.get_si());
        }
        return 1;
    }

    // One term: factors joined by '*', each an integer or x/y with exponent.
    void parse_term(BiPoly& acc, bool negative) {
        mpz_class coeff = negative ? -1 : 1;
        int dx = 0, dy = 0;
        bool expect_factor = true;
        while (expect_factor) {
            skip_ws();
            if (pos >= text.size())
                fail("expected factor");
            char ch = text[pos];
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                coeff *= parse_integer();
            } else if (ch == 'x') {
                ++pos;
                dx += parse_exponent();
            } else if (ch == 'y') {
                ++pos;
                dy += parse_exponent();
            } else {
                fail(std::string("unexpected character '") + ch + "'");
            }
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
            } else {
                expect_factor = false;
            }
        }
        acc += BiPoly::monomial(dx, dy, coeff);
    }

    BiPoly parse_all() {
        BiPoly acc;
        if (eof())
            fail("empty input");
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos;
        } else if (peek() == '+') {
            ++pos;
        }
        parse_term(acc, negative);
        while (!eof()) {
            char op = peek();
            if (op != '+' && op != '-')
                fail(std::string("expected '+' or '-', got '") + op + "'");
            ++pos;
            parse_term(acc, op == '-');
        }
        return acc;
    }
};

} // namespace

BiPoly BiPoly::parse(std::string_view text) {
    PolyParser p{text};
    return p.parse_all();
}

} // namespace bichroma
