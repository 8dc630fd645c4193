#pragma once

// Matrix factorizations d^2 = (V - W) * id over polynomial rings.

#include <map>
#include <string>
#include <vector>

#include "rspin/poly.hpp"
#include "rspin/superlinalg.hpp"

namespace rspin {

class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static PolyMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Poly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Poly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const;
    PolyMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    PolyMatrix& operator+=(const PolyMatrix& o);
    PolyMatrix& operator-=(const PolyMatrix& o);
    friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
    friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(const Poly& p, const PolyMatrix& m);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

    /// Applies f to every entry.
    template <class F>
    PolyMatrix map(F f) const {
        PolyMatrix out(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = f(data_[k]);
        return out;
    }

    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Poly> data_;
};

/// Z_r acting by x_i -> zeta_r^{w_i} x_i.
struct GroupAction {
    int r = 1;
    std::map<std::string, int> weights;

    /// det(g) = zeta_r^{g * sum_i w_i}.
    CycScalar det(long g) const;
    /// Throws InvalidInput unless every variable of W has a weight and W is invariant.
    void check_invariant(const Poly& w) const;
};

/// Free module of rank (even | odd) with an odd differential; the basis
/// carries rational degrees making d homogeneous of degree 1/2 when the
/// potentials are quasi-homogeneous (empty otherwise).
struct MatrixFactorization {
    Poly source_potential;  // W, in the source variables
    Poly target_potential;  // V, in the target variables
    SuperSpace rank;
    PolyMatrix d;
    std::vector<Rational> degrees;
    std::map<std::string, Rational> weights;

    PolyMatrix d0() const { return d.block(rank.even, 0, rank.odd, rank.even); }
    PolyMatrix d1() const { return d.block(0, rank.even, rank.even, rank.odd); }
    /// Sorted variables of the potentials and of d.
    std::vector<std::string> ring() const;
};

/// Checks shape, oddness and d^2 = (V - W) * id; throws InvalidInput.
MatrixFactorization make_mf(Poly source, Poly target, SuperSpace rank, PolyMatrix d,
                            std::vector<Rational> degrees = {},
                            std::map<std::string, Rational> weights = {});

/// Subsets of {0..n-1} as bit masks: even cardinality first, then odd,
/// increasing mask within each parity. Basis order of identity_mf.
std::vector<unsigned> exterior_basis(std::size_t n);

/// Koszul factorization of W(x') - W(x) on the exterior algebra in theta_i:
/// d = sum_i difference_quotient(W, x_i) theta_i + (x'_i - x_i) theta_i^*.
MatrixFactorization identity_mf(const Poly& w);
/// identity_mf with x'_i replaced by zeta_r^{-w_i g} x'_i.
MatrixFactorization twisted_identity(const Poly& w, const GroupAction& act, long g);

/// X[1]: blocks swapped, d negated.
MatrixFactorization shift(const MatrixFactorization& x);

/// Y (x) X with d = d_Y (x) 1 + 1 (x) d_X (Koszul sign). If X's target
/// potential is Y's source potential the middle variables stay as ring
/// variables; if the two share no variables this is the external product.
MatrixFactorization mf_tensor(const MatrixFactorization& y, const MatrixFactorization& x);

MatrixFactorization rename(const MatrixFactorization& x, const std::map<std::string, std::string>& names);

}  // namespace rspin
