#pragma once

// Orbifold algebras A = (+)_g Hom(I_W, _g I_W) of Fermat potentials under
// diagonal Z_r actions, and the circle spaces of the resulting r-spin theory.

#include <string>
#include <utility>
#include <vector>

#include "rspin/constructors.hpp"
#include "rspin/hom.hpp"

namespace rspin {

/// Throws Unsupported unless W is a sum of pure powers c_i x_i^{d_i} of
/// distinct variables; throws InvalidInput unless act leaves W invariant.
void check_fermat(const Poly& w, const GroupAction& act);

struct OrbifoldAlgebra {
    Poly potential;
    GroupAction action;
    std::vector<HomCohomology> sectors;               // H_g = Hom(I, _g I), g = 0..r-1
    std::vector<std::pair<int, std::size_t>> basis;   // (g, class of H_g) per basis vector
    FrobeniusMaps maps;  // comult derived from counit o mult
    /// Frobenius axioms including separability (mult o comult = id).
    std::vector<std::pair<std::string, bool>> checks;
    SuperMap gamma;                   // sum_g det(g)^{-1} 1_g
    bool gamma_is_automorphism = false;
    bool gamma_is_nakayama = false;   // equals nakayama_gamma(maps)
    bool gamma_inverse_is_nakayama = false;
    bool gamma_order_divides_r = false;
};

/// Product of phi in H_g and psi in H_h is t_h(phi) o psi reduced in H_{g+h},
/// where t_h replaces x'_i by zeta^{-w_i h} x'_i. Unit: the identity class.
/// Counit: 1 on the top-degree class of H_0, 0 elsewhere.
OrbifoldAlgebra orbifold_algebra(const Poly& w, const GroupAction& act);

/// The group acting on A: conjugation of the rescaled morphism
/// (x_i, x'_i -> zeta^{-w_i h} x_i, zeta^{-w_i h} x'_i) by theta_S -> zeta^{h w(S)} theta_S.
SuperMap sector_action(const OrbifoldAlgebra& orb, long h);

/// (1/r) sum_h det(h)^{-(1-a)} sector_action(h).
SuperMap circle_projector(const OrbifoldAlgebra& orb, long a);

/// Per a: images of circle_projector from the fixed-locus character formula
/// chi_g(h) = sum_{m in Jac(W|Fix g)} zeta^{-h wt(m)} prod_{moved i} zeta^{h w_i},
/// with the sector H_g in parity (#moved) mod 2.
std::vector<SuperSpace> character_circle_spaces(const Poly& w, const GroupAction& act);

struct CircleSpaces {
    int r = 1;
    std::size_t variables = 0;
    std::vector<SuperSpace> images;     // Im P_a inside A
    std::vector<SuperSpace> character;  // the same from the character formula
    std::vector<SuperSpace> table;      // images shifted by n(1-a)
    bool agree = false;
    std::string mismatch;
    LambdaFrobenius algebra;            // A's structure restricted to the images
    std::vector<SplitIdempotent> pieces;
};

/// Super space shifted by k (parity swap when k is odd).
SuperSpace shifted_space(const SuperSpace& s, long k);

CircleSpaces lg_circle_spaces(const OrbifoldAlgebra& orb);
CircleSpaces lg_circle_spaces(const Poly& w, const GroupAction& act);

}  // namespace rspin
