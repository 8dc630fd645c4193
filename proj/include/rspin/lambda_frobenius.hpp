#pragma once

// Closed Lambda_r-Frobenius algebras in super vector spaces.
//
// Data: spaces C_a (a in Z_r), mu_{a,b}: C_a (x) C_b -> C_{a+b-1},
// eta: 1 -> C_1, delta_{a,b}: C_{a+b+1} -> C_a (x) C_b, eps: C_{-1} -> 1.
// Indices are canonical residues 0..r-1; any integer is accepted and reduced.

#include <string>
#include <vector>

#include "rspin/superlinalg.hpp"

namespace rspin {

inline int mod(long a, int r) {
    long m = a % r;
    return static_cast<int>(m < 0 ? m + r : m);
}

class LambdaFrobenius {
public:
    LambdaFrobenius() = default;
    /// mu and delta are indexed by a * r + b. Throws InvalidInput if any map
    /// has the wrong source/target or is odd.
    LambdaFrobenius(int r, std::vector<SuperSpace> spaces, std::vector<SuperMap> mu, SuperMap eta,
                    std::vector<SuperMap> delta, SuperMap eps);

    int r() const { return r_; }
    const SuperSpace& space(long a) const { return spaces_[static_cast<std::size_t>(mod(a, r_))]; }
    const SuperMap& mu(long a, long b) const { return mu_[slot(a, b)]; }
    const SuperMap& delta(long a, long b) const { return delta_[slot(a, b)]; }
    const SuperMap& eta() const { return eta_; }
    const SuperMap& eps() const { return eps_; }
    const std::vector<SuperSpace>& spaces() const { return spaces_; }

    /// Smallest cyclotomic order containing every structure constant.
    int field_order() const;

    /// Copy with mu_{a,b} replaced (used for negative controls).
    LambdaFrobenius with_mu(long a, long b, SuperMap m) const;

private:
    std::size_t slot(long a, long b) const {
        return static_cast<std::size_t>(mod(a, r_) * r_ + mod(b, r_));
    }
    int r_ = 1;
    std::vector<SuperSpace> spaces_;
    std::vector<SuperMap> mu_;
    SuperMap eta_;
    std::vector<SuperMap> delta_;
    SuperMap eps_;
};

/// eps o mu_{a,-a}: C_a (x) C_{-a} -> 1.
SuperMap pairing(const LambdaFrobenius& alg, long a);
/// delta_{a,-a} o eta: 1 -> C_a (x) C_{-a}.
SuperMap copairing(const LambdaFrobenius& alg, long a);

/// N_a = (p_{-a} (x) 1) o (b_{C_a,C_-a} (x) 1) o (1 (x) Delta_{-a,a} eta),
/// associators implicit. Here p_x = eps o mu_{x,-x}.
SuperMap nakayama(const LambdaFrobenius& alg, long a);
/// N_a^k with k reduced mod r.
SuperMap nakayama_power(const LambdaFrobenius& alg, long a, long k);

struct RelationCheck {
    std::string family;    // associativity, unitality, frobenius, commutativity, twist, deck
    std::string relation;  // e.g. "coassociativity", "frobenius-left"
    std::vector<int> indices;
    bool pass = false;
    Matrix lhs, rhs;
};

struct ValidationReport {
    std::vector<RelationCheck> checks;

    bool ok() const;
    std::vector<const RelationCheck*> failures() const;
    /// Number of checks and failures per family, in family order.
    std::string summary() const;
};

inline const std::vector<std::string>& relation_families() {
    static const std::vector<std::string> f{"associativity", "unitality", "frobenius",
                                            "commutativity", "twist",     "deck"};
    return f;
}

/// Checks every relation for every index tuple. `index_order`, if given, is
/// a permutation of 0..r-1 used for iteration; the report is sorted so the
/// result does not depend on it.
ValidationReport validate(const LambdaFrobenius& alg, const std::vector<int>& index_order = {});

/// mu_{a,b} o (N_a (x) N_b) == N_{a+b-1} o mu_{a,b} for all a, b.
bool nakayama_multiplicative(const LambdaFrobenius& alg);

}  // namespace rspin
