#include <random>

#include "doctest.h"
#include "rspin/superlinalg.hpp"

using namespace rspin;

namespace {

SuperMap random_map(std::mt19937& rng, SuperSpace s, SuperSpace t, int parity) {
    std::uniform_int_distribution<int> v(-3, 3);
    Matrix m(t.dim(), s.dim());
    for (std::size_t i = 0; i < t.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j)
            if ((t.parity(i) + s.parity(j) + parity) % 2 == 0) m(i, j) = CycScalar(v(rng));
    return SuperMap(s, t, parity, m);
}

std::vector<SuperSpace> small_spaces() {
    std::vector<SuperSpace> out;
    for (std::size_t e = 0; e <= 2; ++e)
        for (std::size_t o = 0; o <= 2; ++o)
            if (e + o > 0) out.push_back({e, o});
    return out;
}

}  // namespace

TEST_CASE("parity blocks are enforced") {
    Matrix m(2, 2);
    m(0, 1) = CycScalar(1);
    CHECK_THROWS_AS(SuperMap({1, 1}, {1, 1}, 0, m), InvalidInput);
    CHECK_NOTHROW(SuperMap({1, 1}, {1, 1}, 1, m));
    CHECK_THROWS_AS(SuperMap({1, 1}, {2, 1}, 0, m), ShapeMismatch);
}

TEST_CASE("tensor functoriality with Koszul signs") {
    std::mt19937 rng(11);
    auto spaces = small_spaces();
    for (int trial = 0; trial < 60; ++trial) {
        SuperSpace a = spaces[rng() % spaces.size()], b = spaces[rng() % spaces.size()];
        SuperSpace c = spaces[rng() % spaces.size()], d = spaces[rng() % spaces.size()];
        SuperSpace e = spaces[rng() % spaces.size()], f = spaces[rng() % spaces.size()];
        int pf = rng() % 2, pg = rng() % 2, ph = rng() % 2, pk = rng() % 2;
        SuperMap f1 = random_map(rng, a, b, pf), g1 = random_map(rng, c, d, pg);
        SuperMap f2 = random_map(rng, b, e, ph), g2 = random_map(rng, d, f, pk);
        // (f2 (x) g2)(f1 (x) g1) = (-1)^{|g2||f1|} (f2 f1) (x) (g2 g1)
        SuperMap lhs = compose(tensor(f2, g2), tensor(f1, g1));
        SuperMap rhs = tensor(compose(f2, f1), compose(g2, g1));
        if (pk * pf % 2) rhs = CycScalar(-1) * rhs;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("braiding is symmetric and natural") {
    std::mt19937 rng(12);
    for (auto v : small_spaces()) {
        for (auto w : small_spaces()) {
            CHECK(compose(braiding(w, v), braiding(v, w)).is_identity());
            int pf = rng() % 2, pg = rng() % 2;
            SuperMap f = random_map(rng, v, v, pf), g = random_map(rng, w, w, pg);
            SuperMap lhs = compose(braiding(v, w), tensor(f, g));
            SuperMap rhs = compose(tensor(g, f), braiding(v, w));
            if (pf * pg % 2) rhs = CycScalar(-1) * rhs;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("hexagon and pentagon") {
    auto spaces = small_spaces();
    for (auto u : spaces)
        for (auto v : spaces)
            for (auto w : spaces) {
                SuperSpace vw = tensor_space(v, w);
                SuperMap lhs = compose(associator(v, w, u),
                                       compose(braiding(u, vw), associator(u, v, w)));
                SuperMap rhs = compose(tensor(SuperMap::identity(v), braiding(u, w)),
                                       compose(associator(v, u, w),
                                               tensor(braiding(u, v), SuperMap::identity(w))));
                CHECK(lhs == rhs);
            }
    for (auto a : spaces)
        for (auto b : {SuperSpace{1, 1}, SuperSpace{0, 2}})
            for (auto c : {SuperSpace{1, 1}})
                for (auto d : {SuperSpace{2, 1}}) {
                    SuperSpace ab = tensor_space(a, b), bc = tensor_space(b, c),
                               cd = tensor_space(c, d);
                    SuperMap lhs = compose(associator(a, b, cd), associator(ab, c, d));
                    SuperMap rhs = compose(
                        tensor(SuperMap::identity(a), associator(b, c, d)),
                        compose(associator(a, bc, d),
                                tensor(associator(a, b, c), SuperMap::identity(d))));
                    CHECK(lhs == rhs);
                }
}

TEST_CASE("supertrace") {
    std::mt19937 rng(13);
    for (auto v : small_spaces()) {
        CHECK(supertrace(SuperMap::identity(v)) == quantum_dimension(v));
        for (auto w : small_spaces()) {
            for (int p = 0; p < 2; ++p) {
                SuperMap f = random_map(rng, v, w, p), g = random_map(rng, w, v, p);
                // str(gf) = (-1)^{|f||g|} str(fg)
                CycScalar lhs = supertrace(compose(g, f)), rhs = supertrace(compose(f, g));
                CHECK(lhs == (p ? -rhs : rhs));
            }
            SuperMap f = random_map(rng, v, v, 0), g = random_map(rng, w, w, 0);
            CHECK(supertrace(tensor(f, g)) == supertrace(f) * supertrace(g));
        }
    }
    CHECK(quantum_dimension(tensor_space({2, 1}, {1, 2})) == CycScalar(-1));
}

TEST_CASE("graded kernel, image and split idempotents") {
    std::mt19937 rng(14);
    for (auto v : small_spaces()) {
        for (int p = 0; p < 2; ++p) {
            SuperMap f = random_map(rng, v, v, p);
            GradedBasis k = kernel_basis(f), im = image_basis(f);
            CHECK(k.space.dim() + im.space.dim() == v.dim());
            SuperMap kin(k.space, v, 0, k.vectors);
            CHECK(compose(f, kin).matrix().is_zero());
            CHECK_NOTHROW(SuperMap(im.space, v, 0, im.vectors));
        }
    }
    // Projection onto the span of e0 + e1 along e1, in (2|1).
    Matrix m(3, 3);
    m(0, 0) = CycScalar(1);
    m(1, 0) = CycScalar(1);
    m(2, 2) = CycScalar(1);
    SplitIdempotent s = split_idempotent(SuperMap({2, 1}, {2, 1}, 0, m));
    CHECK(s.image == SuperSpace{1, 1});
    CHECK(compose(s.projection, s.inclusion).is_identity());
    CHECK(compose(s.inclusion, s.projection).matrix() == m);
    Matrix bad = Matrix::identity(3);
    bad(0, 0) = CycScalar(2);
    CHECK_THROWS_AS(split_idempotent(SuperMap({2, 1}, {2, 1}, 0, bad)), InvalidInput);
}
