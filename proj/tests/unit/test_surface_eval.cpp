#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "doctest.h"
#include "rspin/constructors.hpp"
#include "rspin/surface_eval.hpp"

using namespace rspin;

TEST_CASE("torus normal form") {
    CHECK(torus_normal_form({8, 4, 6}) == 2);
    CHECK(torus_normal_form({5, 0, 0}) == 5);
    CHECK(torus_normal_form({6, 2, 3}) == 1);
    CHECK(torus_normal_form({6, -2, 0}) == 2);
    CHECK(divisors(12) == std::vector<int>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("torus invariants only depend on the normal form") {
    std::vector<std::pair<std::string, std::vector<int>>> algebras{
        {"trivial", {1, 2, 3, 4, 5, 6, 7, 8}},
        {"group_algebra_Z2", {1, 2, 3, 5, 8}},
        {"group_algebra_Z3", {1, 3, 4}},
        {"matrix_algebra_2", {1, 2, 3}},
        {"clifford1", {2, 4, 6, 8}},
    };
    for (const auto& [name, rs] : algebras) {
        for (int r : rs) {
            CAPTURE(name);
            CAPTURE(r);
            GradedCenter gc = graded_center_data(builtin(name), r);
            for (int a = 0; a < r; ++a)
                for (int b = 0; b < r; ++b) {
                    const int d = torus_normal_form({r, a, b});
                    CHECK(evaluate_torus(gc.algebra, {r, a, b}) == evaluate_torus(gc.algebra, {r, d, 0}));
                    CHECK(evaluate_torus(gc.algebra, {r, a, b}) == evaluate_torus(gc.algebra, {r, a, b + r}));
                }
            for (const auto& [d, value] : all_torus_invariants(gc.algebra))
                CHECK(value == quantum_dimension(gc.algebra.space(d)));
        }
    }
}

TEST_CASE("worked torus values") {
    LambdaFrobenius t = graded_center(builtin("trivial"), 6);
    for (const auto& [d, v] : all_torus_invariants(t)) CHECK(v == CycScalar(1));
    CHECK(all_torus_invariants(t).size() == 4);

    LambdaFrobenius cl = graded_center(builtin("clifford1"), 2);
    CHECK(evaluate_torus(cl, {2, 0, 0}) == CycScalar(-1));
    CHECK(evaluate_torus(cl, {2, 1, 0}) == CycScalar(1));
    CHECK(evaluate_torus(cl, {2, 0, 1}) == CycScalar(1));
    CHECK(evaluate_torus(cl, {2, 1, 1}) == CycScalar(1));
    auto table = all_torus_invariants(cl);
    REQUIRE(table.size() == 2);
    CHECK(table[0].second != table[1].second);
    CHECK_THROWS_AS(evaluate_torus(cl, {3, 0, 0}), InvalidInput);
}

TEST_CASE("genus one agrees with the torus formula") {
    for (const auto& [name, r] : std::vector<std::pair<std::string, int>>{
             {"clifford1", 2}, {"clifford1", 4}, {"group_algebra_Z3", 3}, {"matrix_algebra_2", 2}}) {
        LambdaFrobenius alg = graded_center(builtin(name), r);
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b)
                CHECK(evaluate_surface(alg, {r, 1, {{a, b}}}) == evaluate_torus(alg, {r, a, b}));
    }
}

TEST_CASE("genus two over the Clifford algebra") {
    LambdaFrobenius cl = graded_center(builtin("clifford1"), 2);
    std::map<std::string, int> counts;
    std::map<int, std::set<std::string>> by_arf;
    for (int m = 0; m < 16; ++m) {
        const int a1 = m & 1, b1 = (m >> 1) & 1, a2 = (m >> 2) & 1, b2 = (m >> 3) & 1;
        CycScalar v = evaluate_surface(cl, {2, 2, {{a1, b1}, {a2, b2}}});
        counts[v.str()]++;
        // Quadratic form with q = 1 on curves of holonomy 0: Arf = sum q(a)q(b).
        const int arf = ((1 - a1) * (1 - b1) + (1 - a2) * (1 - b2)) % 2;
        by_arf[arf].insert(v.str());
        // Handles commute.
        CHECK(v == evaluate_surface(cl, {2, 2, {{a2, b2}, {a1, b1}}}));
    }
    CHECK(counts.size() == 2);
    CHECK(by_arf[0].size() == 1);
    CHECK(by_arf[1].size() == 1);
    std::vector<int> sizes;
    for (const auto& [v, c] : counts) sizes.push_back(c);
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{6, 10});

    LambdaFrobenius t = graded_center(builtin("trivial"), 1);
    CHECK(evaluate_surface(t, {1, 2, {{0, 0}, {0, 0}}}) == CycScalar(1));
    CHECK_THROWS_AS(evaluate_surface(cl, {2, 1, {}}), InvalidInput);
    LambdaFrobenius c4 = graded_center(builtin("clifford1"), 4);
    CHECK_THROWS_AS(evaluate_surface(c4, {4, 2, {{0, 0}, {0, 0}}}), Inadmissible);
}

TEST_CASE("sphere on r = 2") {
    LambdaFrobenius cl = graded_center(builtin("clifford1"), 2);
    CHECK(evaluate_surface(cl, {2, 0, {}}) == compose(cl.eps(), cl.eta()).as_scalar());
}
