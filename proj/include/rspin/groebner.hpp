#pragma once

// Groebner bases (grevlex, Buchberger) and Jacobi algebras of potentials.

#include <map>
#include <string>
#include <vector>

#include "rspin/matrix.hpp"
#include "rspin/poly.hpp"

namespace rspin {

/// Reduced, monic Groebner basis sorted by leading monomial. All generators
/// are brought into one ring first.
std::vector<Poly> groebner(const std::vector<Poly>& gens);

/// Remainder of `p` modulo a Groebner basis.
Poly normal_form(const Poly& p, const std::vector<Poly>& basis);

struct JacobiAlgebra {
    Poly potential;
    std::vector<Poly> groebner_basis;
    std::vector<Monomial> monomial_basis;   // ascending grevlex
    std::vector<std::vector<Matrix>> mult_table;  // [i][j] = coordinates of e_i e_j

    std::size_t dim() const { return monomial_basis.size(); }
    /// Coordinates of the normal form of p in monomial_basis.
    Matrix coordinates(const Poly& p) const;
    Poly element(std::size_t i) const;
    std::string basis_str() const;
};

/// Throws InvalidInput naming a variable with no pure power among the
/// leading monomials when the quotient is infinite-dimensional.
JacobiAlgebra jacobi(const Poly& w);

/// The unique positive rational weights q_i with sum_i q_i m_i = 1 for every
/// monomial of W. Throws Unsupported if W is not quasi-homogeneous in this
/// sense.
std::map<std::string, Rational> quasi_homogeneous_weights(const Poly& w);

}  // namespace rspin
