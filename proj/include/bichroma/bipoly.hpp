#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "bichroma/errors.hpp"

namespace bichroma {

// Bivariate polynomial in x and y over arbitrary-precision integers, stored
// sparsely with no zero coefficients. Term order is graded descending
// (total degree, then x-degree), which is also the canonical text order.
class BiPoly {
public:
    using Exponents = std::pair<int, int>; // (dx, dy)

    struct GradedDesc {
        bool operator()(const Exponents& a, const Exponents& b) const {
            int ta = a.first + a.second, tb = b.first + b.second;
            if (ta != tb)
                return ta > tb;
            return a.first > b.first;
        }
    };

    using TermMap = std::map<Exponents, mpz_class, GradedDesc>;

    BiPoly() = default; // zero
    explicit BiPoly(long c) { insert(0, 0, mpz_class(c)); }
    explicit BiPoly(const mpz_class& c) { insert(0, 0, c); }

    static BiPoly monomial(int dx, int dy, mpz_class c = 1);
    static BiPoly x() { return monomial(1, 0); }
    static BiPoly y() { return monomial(0, 1); }

    // (x+y)^n: the polynomial of the edgeless graph on n vertices.
    static BiPoly xy_power(int n);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    mpz_class coeff(int dx, int dy) const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly& operator*=(const BiPoly& o);
    BiPoly operator-() const;

    // Multiplies by y^d.
    BiPoly scaled_y(int d) const;

    // Exact evaluation at integer points.
    mpz_class eval(const mpz_class& xv, const mpz_class& yv) const;

    // Partial substitutions; the result lives in the remaining variable.
    BiPoly eval_x(const mpz_class& xv) const;
    BiPoly eval_y(const mpz_class& yv) const;

    bool operator==(const BiPoly&) const = default;

    // Canonical text, e.g. "x^2 + 2*x*y + y^2 - x"; "0" for zero.
    std::string str() const;
    static BiPoly parse(std::string_view text);

private:
    void insert(int dx, int dy, const mpz_class& c);

    TermMap terms_;
};

} // namespace bichroma
