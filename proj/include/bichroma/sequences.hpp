#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bichroma/errors.hpp"

namespace bichroma {

// Fixed coloring parameters for the path/cycle sequences; not both zero.
struct SeqParams {
    int k = 0;
    int l = 0;
};

// a_n = chi of the path on n vertices at (k,l), with a_0 = 1 so that the
// recurrence a_n = (k+l-1) a_{n-1} + l a_{n-2} holds from n = 2 on.
// Returns a_0..a_N.
std::vector<mpz_class> a_seq(SeqParams p, int n_max);

// b_n = chi of the cycle on n vertices at (k,l):
//   b_1 = l, b_2 = (k+l)^2 - k, b_3 = a_3 - b_2 + l a_1,
//   b_n = (k+l-2) b_{n-1} + (k+2l-1) b_{n-2} + l b_{n-3}   (n >= 4).
// Returns b_1..b_N.
std::vector<mpz_class> b_seq(SeqParams p, int n_max);

enum class ClassicKind { fibonacci, lucas, pell };

// fibonacci: F_0..F_N with F_0 = 0, F_1 = 1.
// lucas:     L_1..L_N with L_1 = 1, L_2 = 3.
// pell:      Q_0..Q_N with Q_0 = Q_1 = 1, Q_n = 2 Q_{n-1} + Q_{n-2}.
std::vector<mpz_class> classic_sequence(ClassicKind kind, int n_max);

// det of the Hankel matrix [[b3,b2,b1],[b4,b3,b2],[b5,b4,b3]] together with
// the closed form -k^2 (k-1) l ((k+l-1)^2 + 4l). The two agree for every
// admissible (k,l); a nonzero value certifies that no order-2 recurrence
// fits the cycle sequence.
struct HankelResult {
    mpz_class det;
    mpz_class closed_form;
};

HankelResult hankel_det_b(SeqParams p);

// Order-d linear recurrence s_n = sum_i coeffs[i-1] * s_{n-i} with exact
// rational coefficients; coeffs.back() != 0.
struct Recurrence {
    int order = 0;
    std::vector<mpq_class> coeffs;
};

// Least order d <= max_order whose recurrence fits the whole list: the
// square system from the first d windows is solved exactly and the
// candidate verified against every remaining term. Requires
// values.size() >= 2 * max_order + 2.
std::optional<Recurrence> minimal_recurrence(std::span<const mpz_class> values, int max_order);

enum class IdentityId {
    T1_1, // b_n = l a_{n-1} + l^2 a_{n-3}                       (k = 1)
    T1_2, // b_n = a_n - l^2 a_{n-4}                             (k = 1)
    T1_3, // a_{r+s} = l a_r a_{s-1} + l^2 a_{r-1} a_{s-2}       (k = 1)
    T1_4, // a_{r+s} = a_r a_s - l^2 a_{r-2} a_{s-2}             (k = 1)
    T1_5, // a_{r+s+t+1} = l a_r a_s a_t + l^3 a_{r-1} a_{s-1} a_{t-1}
          //               - l^4 a_{r-2} a_{s-2} a_{t-2}         (k = 1)
    P1,   // l a_{r+s} a_t + l^3 a_{r-1} a_{s-1} a_{t-1}
          //   = a_{r+s+t+1} - l^4 a_{r-2} a_{s-2} a_{t-1}       (k = 1)
    L3_1, // b_n = a_n - b_{n-1} + l a_{n-2}                     (any k)
    L3_2, // c_n = b_n + b_{n-1} satisfies the a-recurrence      (any k)
    C1,   // L_n = F_{n+1} + F_{n-1}
    C2,   // L_n = F_{n+2} - F_{n-2}
    C3,   // F_{r+s} = F_{r+1} F_s + F_r F_{s-1}
    C4,   // F_{r+s} = F_{r+1} F_{s+1} - F_{r-1} F_{s-1}
    C5,   // F_{r+s+t} = F_{r+1} F_{s+1} F_{t+1} + F_r F_s F_t - F_{r-1} F_{s-1} F_{t-1}
    FL,   // a_n(1,1) = F_{n+2} and b_n(1,1) = L_n
    PELL, // a_n(2,1) = Q_{n+1}
};

const char* identity_name(IdentityId id);

struct Counterexample {
    std::vector<int> indices;
    mpz_class lhs;
    mpz_class rhs;
};

struct IdentityReport {
    IdentityId id{};
    std::string grid; // human-readable grid description
    bool pass = true;
    long long checked = 0;
    long long failed = 0;
    std::optional<Counterexample> counterexample;
};

// Checks one identity over its full in-domain grid. For the T/P identities
// the bound caps the defining total (n, r+s, or r+s+t+1) and k must be 1;
// for the classical identities C1-C5 and FL/PELL it caps each index and
// the params are fixed internally. Throws input_error when the bound
// leaves the grid empty or k is not admissible.
IdentityReport verify_identity(IdentityId id, SeqParams p, int max_index);

// Ties the closed recurrences back to graph computation: a_n and b_n must
// match chi of the path/cycle evaluated at (k,l) for 1 <= n <= max_n.
struct CrossCheckReport {
    SeqParams params{};
    int max_n = 0;
    bool pass = true;
    long long checked = 0;
    std::string mismatch; // "a" or "b" family of the first mismatch
    int mismatch_n = 0;
    mpz_class expected;
    mpz_class got;
};

CrossCheckReport cross_check_graphs(SeqParams p, int max_n);

} // namespace bichroma
