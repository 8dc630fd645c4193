#include <numeric>
#include <random>

#include "doctest.h"
#include "rspin/errors.hpp"
#include "rspin/groebner.hpp"

using namespace rspin;

namespace {

Poly P(const char* s) { return parse_poly(s); }

Poly random_poly(std::mt19937& rng, const std::vector<std::string>& vars, int terms, int deg) {
    std::uniform_int_distribution<int> e(0, deg), c(-3, 3);
    Poly p(vars);
    for (int t = 0; t < terms; ++t) {
        Monomial m(vars.size());
        for (auto& x : m) x = e(rng);
        p.add_term(m, CycScalar(c(rng)));
    }
    return p;
}

// dim k[x]/J by counting, degree by degree, monomials minus the span of
// monomial multiples of the partial derivatives.
std::size_t quotient_dim_by_rank(const Poly& w) {
    const auto q = quasi_homogeneous_weights(w);
    std::vector<Rational> weights;
    Rational top = 0;
    for (const auto& [v, x] : q) {
        weights.push_back(x);
        top += 1 - 2 * x;
    }
    std::vector<Poly> parts;
    for (const auto& v : w.variables()) parts.push_back(w.derivative(v).in_ring(w.variables()));
    long lcm = 1;
    for (const auto& x : weights) lcm = std::lcm(lcm, x.get_den().get_si());
    std::size_t total = 0;
    for (long k = 0; make_rational(k, lcm) <= top + 1; ++k) {
        const Rational t = make_rational(k, lcm);
        const auto mons = monomials_of_degree(weights, t);
        Matrix span(mons.size(), 0);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            const Rational dd = t - (1 - weights[i]);
            for (const auto& m : monomials_of_degree(weights, dd)) {
                Poly g = parts[i] * Poly::monomial(w.variables(), m);
                Matrix col(mons.size(), 1);
                for (std::size_t r = 0; r < mons.size(); ++r) col(r, 0) = g.coeff(mons[r]);
                span = span.cols() ? hstack(span, col) : col;
            }
        }
        total += mons.size() - (span.cols() ? rank(span) : 0);
    }
    return total;
}

}  // namespace

TEST_CASE("parse and print") {
    CHECK(P("x^3 + y^3") == Poly::variable("x").pow(3) + Poly::variable("y").pow(3));
    CHECK(P("2x y - (x - y)^2") == P("-x^2 + 4*x*y - y^2"));
    CHECK(P("1/2*x'") * CycScalar(2) == Poly::variable("x'"));
    CHECK(P("x^2 + x'*x").variables() == std::vector<std::string>{"x", "x'"});
    CHECK(P("x^3 - 2*x*y + 5").str() == "x^3 - 2*x*y + 5");
    CHECK(parse_poly(P("3*x^2*y - y^4 + 7/3").str()) == P("3*x^2*y - y^4 + 7/3"));
    CHECK_THROWS_AS(P("x^"), ParseError);
    CHECK_THROWS_AS(P("x + * y"), ParseError);
    CHECK_THROWS_AS(P("(x + y"), ParseError);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(7);
    for (int t = 0; t < 30; ++t) {
        const Poly a = random_poly(rng, {"x", "y"}, 4, 3);
        const Poly b = random_poly(rng, {"y", "z"}, 4, 3);
        const Poly c = random_poly(rng, {"x", "z"}, 3, 2);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
        CHECK((a * b).derivative("y") == a.derivative("y") * b + a * b.derivative("y"));
    }
}

TEST_CASE("derivatives and difference quotients") {
    CHECK(P("x^3").derivative("x") == P("3x^2"));
    CHECK(difference_quotient(P("x^3"), "x") == P("x'^2 + x'*x + x^2"));
    CHECK(difference_quotient(P("x^2 + y^2"), "y") == P("y' + y"));
    CHECK(difference_quotient(P("x^2 + y^2"), "x") == P("x' + x"));
    // Telescoping: sum_i dq_i * (x'_i - x_i) = W(x') - W(x).
    for (const char* s : {"x^3*y + y^4 - 2x^2 y^2", "x^5", "x^2 y + y^3 z + z^2 x"}) {
        const Poly w = P(s);
        Poly sum;
        std::map<std::string, Poly> prime;
        for (const auto& v : w.variables()) {
            sum += difference_quotient(w, v) * (Poly::variable(primed(v)) - Poly::variable(v));
            prime[v] = Poly::variable(primed(v));
        }
        CHECK(sum == w.substitute(prime) - w);
    }
}

TEST_CASE("Groebner bases") {
    CHECK(groebner({P("x^2")}) == std::vector<Poly>{P("x^2")});
    auto g = groebner({P("3x^2"), P("2y")});
    REQUIRE(g.size() == 2);
    CHECK(g[0] == P("y"));
    CHECK(g[1] == P("x^2"));
    // Every generator reduces to zero, and normal forms are idempotent and
    // multiplicative.
    std::mt19937 rng(3);
    const std::vector<Poly> gens{P("x^2*y - z"), P("y^2 - x*z"), P("x*y*z - 1")};
    const auto gb = groebner(gens);
    for (const auto& p : gens) CHECK(normal_form(p, gb).is_zero());
    for (int t = 0; t < 10; ++t) {
        const Poly a = random_poly(rng, {"x", "y", "z"}, 4, 3);
        const Poly b = random_poly(rng, {"x", "y", "z"}, 4, 3);
        const Poly na = normal_form(a, gb);
        CHECK(normal_form(na, gb) == na);
        CHECK(normal_form(a * b, gb) == normal_form(na * normal_form(b, gb), gb));
        CHECK(normal_form(a - na, gb).is_zero());
    }
    // Input order does not change the reduced basis.
    CHECK(groebner({gens[2], gens[0], gens[1]}) == gb);
}

TEST_CASE("Jacobi algebras") {
    for (int r = 2; r <= 7; ++r) {
        const Poly w = Poly::variable("x").pow(r);
        JacobiAlgebra j = jacobi(w);
        CHECK(j.dim() == static_cast<std::size_t>(r - 1));
        if (r >= 3) CHECK(j.element(static_cast<std::size_t>(r - 2)) == Poly::variable("x").pow(r - 2));
    }
    CHECK(jacobi(P("x^4")).basis_str() == "1, x, x^2");
    CHECK(jacobi(P("x^2")).dim() == 1);
    JacobiAlgebra j = jacobi(P("x^3 + y^3"));
    CHECK(j.dim() == 4);
    CHECK(j.basis_str() == "1, y, x, x*y");
    // x * y = xy, x * x = 0.
    CHECK(j.mult_table[2][1] == j.coordinates(P("x*y")));
    CHECK(j.mult_table[2][2].is_zero());
    for (const char* s : {"x^3 + y^3", "x^4 + y^3", "x^2*y + y^4", "x^3 + y^3 + z^3", "x^5 + y^2", "x^3*y + y^3"})
        CHECK(jacobi(P(s)).dim() == quotient_dim_by_rank(P(s)));
    try {
        jacobi(P("x^3 + x*y^2 - x*y^2 + x^2*y"));
        FAIL("expected an infinite quotient");
    } catch (const InvalidInput& e) {
        CHECK(std::string(e.what()).find("unbounded") != std::string::npos);
    }
}

TEST_CASE("quasi-homogeneous weights") {
    auto q = quasi_homogeneous_weights(P("x^3 + y^5"));
    CHECK(q["x"] == Rational(1, 3));
    CHECK(q["y"] == Rational(1, 5));
    CHECK(quasi_homogeneous_weights(P("x^2*y + y^4"))["x"] == Rational(3, 8));
    CHECK_THROWS_AS(quasi_homogeneous_weights(P("x^3 + x^2")), Unsupported);
    CHECK_THROWS_AS(quasi_homogeneous_weights(P("x*y")), Unsupported);
}
