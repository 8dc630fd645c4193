#pragma once

// Frobenius algebras in super vector spaces and the Z_r-graded centre
// construction producing closed Lambda_r-Frobenius algebras.

#include <string>
#include <utility>
#include <vector>

#include "rspin/lambda_frobenius.hpp"

namespace rspin {

/// A Frobenius algebra A with mult: A (x) A -> A, unit: 1 -> A,
/// counit: A -> 1 and comult: A -> A (x) A.
struct FrobeniusMaps {
    SuperSpace space;
    SuperMap mult, unit, counit, comult;
};

/// Named pass/fail results for the Frobenius algebra axioms, including
/// Delta-separability mult o comult = id.
std::vector<std::pair<std::string, bool>> frobenius_checks(const FrobeniusMaps& a);

/// Comultiplication (mult (x) 1) o (1 (x) c) from the copairing c inverse to
/// counit o mult. Throws InvalidInput if the pairing is degenerate.
SuperMap derived_comult(const SuperSpace& space, const SuperMap& mult, const SuperMap& counit);

/// x . y for vectors (columns) in A.
Matrix multiply(const FrobeniusMaps& a, const Matrix& x, const Matrix& y);

/// Delta-separable Frobenius algebra; every axiom is checked on construction.
class FrobeniusAlgebraData {
public:
    /// Throws InvalidInput naming each failed axiom.
    explicit FrobeniusAlgebraData(FrobeniusMaps maps);
    /// Derives comult from mult and counit.
    FrobeniusAlgebraData(SuperSpace space, SuperMap mult, SuperMap unit, SuperMap counit);

    const FrobeniusMaps& maps() const { return maps_; }
    const SuperSpace& space() const { return maps_.space; }
    const SuperMap& mult() const { return maps_.mult; }
    const SuperMap& unit() const { return maps_.unit; }
    const SuperMap& counit() const { return maps_.counit; }
    const SuperMap& comult() const { return maps_.comult; }

private:
    FrobeniusMaps maps_;
};

/// Even invertible map commuting with mult, unit, counit and comult.
struct AlgebraAutomorphism {
    SuperMap map;
};

/// Throws InvalidInput if `f` is not an automorphism of the Frobenius structure.
AlgebraAutomorphism check_automorphism(const FrobeniusMaps& a, const SuperMap& f);

/// The Nakayama automorphism gamma. Its inverse is
/// (1 (x) beta) o (b_{A,A} (x) 1) o (1 (x) c) with beta = counit o mult and
/// c = comult o unit.
AlgebraAutomorphism nakayama_gamma(const FrobeniusMaps& a);
inline AlgebraAutomorphism nakayama_gamma(const FrobeniusAlgebraData& a) {
    return nakayama_gamma(a.maps());
}

/// P_a(x) = sum_i (-1)^{|x||e'_i|} gamma^{1-a}(e'_i) x e_i, where
/// comult(1) = sum_i e'_i (x) e_i.
SuperMap twisted_center_projector(const FrobeniusMaps& a, const SuperMap& gamma, int r, long index);

/// Spaces Im(p_a) with mult, unit, counit and comult of `a` restricted and
/// projected: mu_{x,y} = proj_{x+y-1} o mult o (incl_x (x) incl_y), etc.
LambdaFrobenius lambda_from_pieces(const FrobeniusMaps& a, const std::vector<SplitIdempotent>& pieces);

struct GradedCenter {
    LambdaFrobenius algebra;
    std::vector<SplitIdempotent> pieces;  // C_a inside A, per a
    SuperMap gamma;
};

/// Requires gamma^r = id; throws InvalidInput otherwise or when some P_a is
/// not idempotent.
GradedCenter graded_center_data(const FrobeniusMaps& a, const SuperMap& gamma, int r);
GradedCenter graded_center_data(const FrobeniusAlgebraData& a, int r);
LambdaFrobenius graded_center(const FrobeniusAlgebraData& a, int r);

/// N_a == proj_a o gamma o incl_a for every a.
bool nakayama_is_gamma(const GradedCenter& gc);

/// trivial, group_algebra_Z<n>, clifford1, matrix_algebra_<n>.
FrobeniusAlgebraData builtin(const std::string& name);
std::vector<std::string> builtin_names();

/// Multiplicative order of an even automorphism (searches up to `limit`).
int automorphism_order(const SuperMap& f, int limit = 64);

}  // namespace rspin
