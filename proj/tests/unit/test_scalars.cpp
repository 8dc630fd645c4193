#include <complex>
#include <random>

#include "doctest.h"
#include "rspin/scalars.hpp"

using namespace rspin;

namespace {

std::complex<double> numeric(const CycScalar& s) {
    const double pi = std::acos(-1.0);
    std::complex<double> z = std::polar(1.0, 2 * pi / s.order()), p = 1, out = 0;
    for (const auto& c : s.coeffs()) {
        out += c.get_d() * p;
        p *= z;
    }
    return out;
}

CycScalar random_scalar(std::mt19937& rng, int order) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    std::vector<Rational> c(static_cast<std::size_t>(euler_phi(order)));
    for (auto& x : c) x = make_rational(num(rng), den(rng));
    return CycScalar(order, c);
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-7; }

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(to_string(cyclotomic_polynomial(1)) == "x - 1");
    CHECK(to_string(cyclotomic_polynomial(2)) == "x + 1");
    CHECK(to_string(cyclotomic_polynomial(6)) == "x^2 - x + 1");
    CHECK(to_string(cyclotomic_polynomial(12)) == "x^4 - x^2 + 1");
    CHECK(to_string(cyclotomic_polynomial(8)) == "x^4 + 1");
    // Phi_105 is the first with a coefficient of absolute value 2.
    const IntPoly& p105 = cyclotomic_polynomial(105);
    CHECK(p105.size() == 49);
    CHECK(p105[7] == -2);
    CHECK(p105[41] == -2);
}

TEST_CASE("product of Phi_d over d | n is x^n - 1") {
    for (int n = 1; n <= 40; ++n) {
        IntPoly prod{1};
        for (int d = 1; d <= n; ++d) {
            if (n % d) continue;
            const IntPoly& p = cyclotomic_polynomial(d);
            IntPoly out(prod.size() + p.size() - 1, 0);
            for (std::size_t i = 0; i < prod.size(); ++i)
                for (std::size_t j = 0; j < p.size(); ++j) out[i + j] += prod[i] * p[j];
            prod = out;
        }
        IntPoly expect(static_cast<std::size_t>(n) + 1, 0);
        expect[0] = -1;
        expect[static_cast<std::size_t>(n)] = 1;
        CHECK(prod == expect);
        CHECK(euler_phi(n) == static_cast<int>(cyclotomic_polynomial(n).size()) - 1);
    }
}

TEST_CASE("worked product at order 5") {
    CycScalar z = CycScalar::zeta(5);
    CycScalar lhs = (1 + z) * (1 + z.pow(4));
    CHECK(lhs == 2 + z + z.pow(4));
    CHECK(lhs == parse_scalar("2 + z + z^4", 5));
}

TEST_CASE("field axioms against numeric evaluation") {
    std::mt19937 rng(12345);
    for (int order = 1; order <= 12; ++order) {
        for (int trial = 0; trial < 20; ++trial) {
            CycScalar a = random_scalar(rng, order), b = random_scalar(rng, order),
                      c = random_scalar(rng, order);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK(close(numeric(a * b), numeric(a) * numeric(b)));
            CHECK(close(numeric(a + b), numeric(a) + numeric(b)));
            if (!a.is_zero()) {
                CHECK((a * a.inverse()).is_one());
                CHECK(close(numeric(a.inverse()), 1.0 / numeric(a)));
            }
        }
    }
}

TEST_CASE("root of unity sums") {
    for (int r = 1; r <= 12; ++r) {
        for (int m = 0; m <= 2 * r; ++m) {
            CycScalar s(r, Rational(0));
            for (int k = 0; k < r; ++k) s += CycScalar::zeta(r, static_cast<long>(m) * k);
            CHECK(s == CycScalar(m % r == 0 ? r : 0));
        }
        CHECK(CycScalar::zeta(r).pow(r).is_one());
    }
}

TEST_CASE("order mixing") {
    CycScalar z3 = CycScalar::zeta(3), z4 = CycScalar::zeta(4);
    CHECK_THROWS_AS(z3 + z4, OrderMismatch);
    CHECK_THROWS_AS(cyc_mul(z3, z4), OrderMismatch);
    CHECK(z3 * CycScalar(2) == z3 + z3);
    CHECK(z3.embed(6) == CycScalar::zeta(6, 2));
    CHECK(z4.embed(12) == CycScalar::zeta(12, 3));
    CHECK_THROWS_AS(z3.embed(4), OrderMismatch);
    CHECK_THROWS_AS(CycScalar(0).inverse(), DivisionByZero);
    CHECK_THROWS_AS(CycScalar(7, Rational(0)).inverse(), DivisionByZero);
}

TEST_CASE("scalar syntax round trip") {
    std::mt19937 rng(7);
    for (int order : {1, 2, 5, 7, 12}) {
        for (int t = 0; t < 10; ++t) {
            CycScalar a = random_scalar(rng, order);
            CHECK(parse_scalar(a.str(), order) == a);
        }
    }
    CHECK(parse_scalar("-1/2*z", 4) == CycScalar(-1) / 2 * CycScalar::zeta(4));
    CHECK(parse_scalar("1 - 2*z^3", 5).str() == "1 - 2*z^3");
    CHECK(parse_scalar("z^-1", 5) == CycScalar::zeta(5, 4));
    CHECK_THROWS_AS(parse_scalar("1 +", 5), ParseError);
    CHECK_THROWS_AS(parse_scalar("2/0", 5), ParseError);
    CHECK_THROWS_AS(parse_scalar("q", 5), ParseError);
}
