#include "doctest.h"
#include "rspin/errors.hpp"
#include "rspin/hom.hpp"

using namespace rspin;

namespace {
Poly P(const char* s) { return parse_poly(s); }
Poly xr(int r) { return Poly::variable("x").pow(r); }
}  // namespace

TEST_CASE("End of the identity is the Jacobi algebra") {
    for (int r = 2; r <= 5; ++r) {
        CAPTURE(r);
        const MatrixFactorization i = identity_mf(xr(r));
        HomCohomology h = hom_cohomology(i, i);
        CHECK(h.space() == SuperSpace{static_cast<std::size_t>(r - 1), 0});
        for (std::size_t k = 0; k < h.classes().size(); ++k) {
            CHECK(h.classes()[k].degree == make_rational(static_cast<long>(k), r));
            Matrix e = h.reduce(h.classes()[k].representative);
            for (std::size_t m = 0; m < e.rows(); ++m) CHECK(e(m, 0) == CycScalar(m == k ? 1 : 0));
        }
        HomCohomology s = hom_cohomology(i, shift(i));
        CHECK(s.space() == SuperSpace{0, static_cast<std::size_t>(r - 1)});
    }
}

TEST_CASE("twisted sectors are odd lines") {
    for (int r = 3; r <= 5; ++r) {
        GroupAction act{r, {{"x", 1}}};
        const MatrixFactorization i = identity_mf(xr(r));
        for (int g = 1; g < r; ++g) {
            CAPTURE(r);
            CAPTURE(g);
            HomCohomology h = hom_cohomology(i, twisted_identity(xr(r), act, g));
            CHECK(h.space() == SuperSpace{0, 1});
        }
    }
}

TEST_CASE("reduction ignores boundaries and multiplies like Jac") {
    const MatrixFactorization i = identity_mf(xr(4));
    HomCohomology h = hom_cohomology(i, i);
    // x' * id is cohomologous to x * id.
    PolyMatrix xp = Poly::variable("x'") * PolyMatrix::identity(2);
    PolyMatrix x = Poly::variable("x") * PolyMatrix::identity(2);
    CHECK(h.reduce(xp) == h.reduce(x));
    // delta of an odd element is a boundary.
    PolyMatrix z(2, 2);
    z(0, 1) = P("x^2 + x'");
    PolyMatrix b = h.differential(z, 1);
    CHECK(h.reduce(b).is_zero());
    // x^3 = 0 in Jac.
    CHECK(h.reduce(Poly::variable("x").pow(3) * PolyMatrix::identity(2)).is_zero());
    PolyMatrix bad(2, 2);
    bad(0, 1) = P("1");
    CHECK_THROWS_AS(h.reduce(bad), Error);
}

TEST_CASE("composition with the identity preserves Hom dimensions") {
    const MatrixFactorization i = identity_mf(xr(3));
    const MatrixFactorization j = rename(i, {{"x", "x'"}, {"x'", "x''"}});
    const MatrixFactorization ji = mf_tensor(j, i);
    const MatrixFactorization test = rename(i, {{"x'", "x''"}});
    CHECK(hom_cohomology(test, ji).space() == hom_cohomology(i, i).space());
    // Shifting one factor shifts the composite.
    const MatrixFactorization sji = mf_tensor(j, shift(i));
    const SuperSpace a = hom_cohomology(test, sji).space();
    const SuperSpace b = hom_cohomology(test, shift(ji)).space();
    CHECK(a == b);
    CHECK(a == SuperSpace{0, 2});
    CHECK_THROWS_AS(hom_cohomology(ji, test), Unsupported);
    CHECK_THROWS_AS(hom_cohomology(i, test), InvalidInput);
}

TEST_CASE("two variables") {
    const MatrixFactorization i = identity_mf(P("x^3 + y^3"));
    CHECK(hom_cohomology(i, i).space() == SuperSpace{4, 0});
}
