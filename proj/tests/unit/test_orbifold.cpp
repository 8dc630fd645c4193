#include "doctest.h"
#include "rspin/errors.hpp"
#include "rspin/orbifold.hpp"
#include "rspin/surface_eval.hpp"

#include <set>

using namespace rspin;

namespace {
Poly xr(int r) { return Poly::variable("x").pow(r); }
GroupAction zr(int r) { return GroupAction{r, {{"x", 1}}}; }

bool check(const OrbifoldAlgebra& o, const std::string& name) {
    for (const auto& [n, ok] : o.checks)
        if (n == name) return ok;
    FAIL("no check " << name);
    return false;
}

SuperSpace even(std::size_t n) { return {n, 0}; }
SuperSpace odd(std::size_t n) { return {0, n}; }
}  // namespace

TEST_CASE("orbifold algebra of x^r") {
    for (int r = 2; r <= 6; ++r) {
        CAPTURE(r);
        OrbifoldAlgebra o = orbifold_algebra(xr(r), zr(r));
        const auto m = static_cast<std::size_t>(r - 1);
        CHECK(o.maps.space == SuperSpace{m, m});
        for (const char* c : {"associativity", "unitality", "coassociativity", "counitality", "frobenius"})
            CHECK(check(o, c));
        CHECK_FALSE(check(o, "separability"));
        CHECK(o.gamma_is_automorphism);
        CHECK(o.gamma_order_divides_r);
        CHECK(o.gamma_inverse_is_nakayama);
        CHECK(o.gamma_is_nakayama == (r == 2));
        for (std::size_t i = 0; i < o.basis.size(); ++i) {
            const int g = o.basis[i].first;
            CHECK(o.sectors[static_cast<std::size_t>(g)].classes()[o.basis[i].second].parity == (g == 0 ? 0 : 1));
        }
    }
    OrbifoldAlgebra two = orbifold_algebra(xr(2), zr(2));
    CHECK(two.gamma.matrix()(0, 0) == CycScalar(1));
    CHECK(two.gamma.matrix()(1, 1) == CycScalar(-1));
    CHECK(orbifold_algebra(xr(3), zr(3)).maps.space == SuperSpace{2, 2});
}

TEST_CASE("sector action is a representation") {
    OrbifoldAlgebra o = orbifold_algebra(xr(4), zr(4));
    const SuperMap s1 = sector_action(o, 1);
    CHECK(sector_action(o, 0).is_identity());
    CHECK(compose(s1, s1) == sector_action(o, 2));
    CHECK(power(s1, 4).is_identity());
    for (int a = 0; a < 4; ++a) {
        const SuperMap p = circle_projector(o, a);
        CHECK(compose(p, p) == p);
    }
}

TEST_CASE("circle spaces of x^r") {
    for (int r = 2; r <= 6; ++r) {
        CAPTURE(r);
        CircleSpaces cs = lg_circle_spaces(xr(r), zr(r));
        CHECK(cs.agree);
        CHECK(cs.mismatch.empty());
        CHECK(cs.table[0] == even(static_cast<std::size_t>(r - 1)));
        for (int a = 1; a < r; ++a)
            CHECK(cs.table[static_cast<std::size_t>(a)] == shifted_space(even(1), 1 - a));
        std::size_t total = 0;
        for (const auto& s : cs.images) total += s.dim();
        CHECK(total == static_cast<std::size_t>(2 * (r - 1)));
        CHECK(validate(cs.algebra).ok());
    }
}

TEST_CASE("worked circle-space tables") {
    CircleSpaces five = lg_circle_spaces(xr(5), zr(5));
    CHECK(five.table[0].dim() == 4);
    CHECK(five.table[1] == even(1));
    CHECK(five.table[2] == odd(1));
    CHECK(five.table[3] == even(1));
    CHECK(five.table[4] == odd(1));
    CircleSpaces three = lg_circle_spaces(xr(3), zr(3));
    CHECK(three.table[0].dim() == 2);
    CHECK(three.table[1].dim() == 1);
    CHECK(three.table[2].dim() == 1);
}

TEST_CASE("Nakayama of the LG theory is the model Nakayama restricted") {
    for (int r = 2; r <= 5; ++r) {
        CAPTURE(r);
        OrbifoldAlgebra o = orbifold_algebra(xr(r), zr(r));
        CircleSpaces cs = lg_circle_spaces(o);
        const SuperMap g = nakayama_gamma(o.maps).map;
        for (int a = 0; a < r; ++a) {
            const auto& piece = cs.pieces[static_cast<std::size_t>(a)];
            const SuperMap n = nakayama(cs.algebra, a);
            CHECK(n == compose(piece.projection, compose(g, piece.inclusion)));
            CHECK(power(n, a).is_identity());
            CHECK(power(n, r).is_identity());
        }
    }
}

TEST_CASE("LG torus invariants separate two classes") {
    for (int r = 3; r <= 6; ++r) {
        CAPTURE(r);
        CircleSpaces cs = lg_circle_spaces(xr(r), zr(r));
        std::set<std::string> seen;
        for (const auto& [d, v] : all_torus_invariants(cs.algebra)) {
            CAPTURE(d);
            const CycScalar expect = d == r ? CycScalar(r - 1) : CycScalar(1);
            CHECK((v == expect || v == -expect));
            seen.insert(v.str());
        }
        CHECK(seen.size() == 2);
        for (long a = 0; a < r; ++a)
            for (long b = 0; b < r; ++b)
                seen.insert(evaluate_torus(cs.algebra, RSpinTorus{r, a, b}).str());
        CHECK(seen.size() == 2);
    }
}

TEST_CASE("two-variable Fermat sum") {
    const Poly w = parse_poly("x^3 + y^3");
    CircleSpaces cs = lg_circle_spaces(w, GroupAction{3, {{"x", 1}, {"y", 1}}});
    CHECK(cs.agree);
    CHECK(validate(cs.algebra).ok());
}

TEST_CASE("unsupported orbifold inputs") {
    CHECK_THROWS_AS(orbifold_algebra(parse_poly("x^3 + x*y^2"), GroupAction{3, {{"x", 1}, {"y", 1}}}),
                    Unsupported);
    CHECK_THROWS_AS(orbifold_algebra(xr(3), GroupAction{4, {{"x", 1}}}), InvalidInput);
}
