#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bichroma/bipoly.hpp"

using namespace bichroma;

namespace {

BiPoly random_poly(std::mt19937& rng) {
    BiPoly p;
    int terms = static_cast<int>(rng() % 6);
    for (int i = 0; i < terms; ++i) {
        int dx = static_cast<int>(rng() % 5);
        int dy = static_cast<int>(rng() % 5);
        long c = static_cast<long>(rng() % 19) - 9;
        p += BiPoly::monomial(dx, dy, mpz_class(c));
    }
    return p;
}

const BiPoly X = BiPoly::x();
const BiPoly Y = BiPoly::y();

} // namespace

TEST_CASE("ring operations on small inputs") {
    CHECK((X + Y) + (-X) == Y);
    CHECK((X + Y) * (X + Y) == BiPoly::parse("x^2 + 2*x*y + y^2"));

    BiPoly chi_p2 = (X + Y) * (X + Y) - X;
    CHECK(chi_p2 == BiPoly::parse("x^2 + 2*x*y + y^2 - x"));
    CHECK(chi_p2.eval(2, 1) == 7);
    CHECK(chi_p2.eval(0, 0) == 0);
}

TEST_CASE("scale_y") {
    CHECK(BiPoly(1).scaled_y(3) == BiPoly::monomial(0, 3));
    CHECK((X + Y).scaled_y(1) == BiPoly::parse("x*y + y^2"));
    CHECK(BiPoly().scaled_y(5) == BiPoly());
}

TEST_CASE("xy_power") {
    CHECK(BiPoly::xy_power(0) == BiPoly(1));
    CHECK(BiPoly::xy_power(1) == X + Y);
    CHECK(BiPoly::xy_power(2) == BiPoly::parse("x^2 + 2*x*y + y^2"));
    BiPoly prod(1);
    for (int i = 0; i < 7; ++i)
        prod *= X + Y;
    CHECK(BiPoly::xy_power(7) == prod);
}

TEST_CASE("eval") {
    CHECK(Y.eval(3, 2) == 2);
    CHECK(BiPoly::monomial(2, 3, 5).eval(2, 10) == 20000);
    // Values grow well beyond 64 bits without losing exactness.
    BiPoly big = BiPoly::xy_power(64);
    mpz_class expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), 7, 64);
    CHECK(big.eval(3, 4) == expected);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(101);
    for (int i = 0; i < 1000; ++i) {
        BiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * BiPoly(1) == a);
        CHECK(a - a == BiPoly());
    }
}

TEST_CASE("no zero coefficients are ever stored") {
    std::mt19937 rng(109);
    for (int i = 0; i < 400; ++i) {
        BiPoly a = random_poly(rng), b = random_poly(rng);
        for (const BiPoly& p : {a + b, a - b, a * b, a - a, a * BiPoly()}) {
            for (const auto& [e, c] : p.terms())
                CHECK(c != 0);
        }
    }
}

TEST_CASE("eval is a ring homomorphism") {
    std::mt19937 rng(103);
    for (int i = 0; i < 300; ++i) {
        BiPoly a = random_poly(rng), b = random_poly(rng);
        for (int k = 0; k <= 5; ++k) {
            for (int l = 0; l <= 5; ++l) {
                CHECK((a * b).eval(k, l) == a.eval(k, l) * b.eval(k, l));
                CHECK((a + b).eval(k, l) == a.eval(k, l) + b.eval(k, l));
            }
        }
    }
}

TEST_CASE("partial evaluation") {
    BiPoly chi_p2 = BiPoly::parse("x^2 + 2*x*y + y^2 - x");
    CHECK(chi_p2.eval_x(1) == BiPoly::parse("y^2 + 2*y"));
    CHECK(chi_p2.eval_y(0) == BiPoly::parse("x^2 - x"));
    CHECK(chi_p2.eval_x(1).eval(99, 1) == chi_p2.eval(1, 1));
}

TEST_CASE("canonical formatting") {
    CHECK(BiPoly::parse("x^2 + 2*x*y + y^2 - x").str() == "x^2 + 2*x*y + y^2 - x");
    CHECK(BiPoly(1).str() == "1");
    CHECK(BiPoly().str() == "0");
    CHECK((-X + Y).str() == "-x + y");
    CHECK(BiPoly::monomial(0, 3).str() == "y^3");
    CHECK(BiPoly::monomial(1, 1, -7).str() == "-7*x*y");
    CHECK((BiPoly(5) - Y).str() == "-y + 5");
}

TEST_CASE("format/parse round-trip") {
    std::mt19937 rng(107);
    for (int i = 0; i < 500; ++i) {
        BiPoly p = random_poly(rng);
        CHECK(BiPoly::parse(p.str()) == p);
    }
}

TEST_CASE("parse accepts whitespace and factor order") {
    CHECK(BiPoly::parse("  - x +  y ") == -X + Y);
    CHECK(BiPoly::parse("y*x") == X * Y);
    CHECK(BiPoly::parse("2*x*2") == BiPoly::monomial(1, 0, 4));
    CHECK(BiPoly::parse("x*x") == BiPoly::monomial(2, 0));
    CHECK(BiPoly::parse("0") == BiPoly());
}

TEST_CASE("constructor guards") {
    CHECK_THROWS_AS(BiPoly::monomial(-1, 0), input_error);
    CHECK_THROWS_AS(BiPoly::monomial(0, -2), input_error);
    CHECK_THROWS_AS(BiPoly::xy_power(-1), input_error);
    CHECK_THROWS_AS((BiPoly::x()).scaled_y(-1), input_error);
}

TEST_CASE("parse rejects malformed terms") {
    CHECK_THROWS_AS(BiPoly::parse(""), input_error);
    CHECK_THROWS_AS(BiPoly::parse("   "), input_error);
    CHECK_THROWS_AS(BiPoly::parse("x^"), input_error);
    CHECK_THROWS_AS(BiPoly::parse("2**x"), input_error);
    CHECK_THROWS_AS(BiPoly::parse("z + 1"), input_error);
    CHECK_THROWS_AS(BiPoly::parse("1 +"), input_error);
    CHECK_THROWS_AS(BiPoly::parse("3 4"), input_error);
}
