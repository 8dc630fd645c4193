#pragma once

// Z2-graded linear algebra with the Koszul sign rule.
//
// Basis convention: a SuperSpace (m|n) has basis e_0..e_{m-1} even, followed
// by e_m..e_{m+n-1} odd. The tensor product V (x) W uses the basis v_i (x) w_j
// taken in lexicographic (i, j) order and then stably split into its even
// and odd parts; tensor_basis() exposes that permutation.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rspin/matrix.hpp"

namespace rspin {

struct SuperSpace {
    std::size_t even = 0;
    std::size_t odd = 0;

    std::size_t dim() const { return even + odd; }
    int parity(std::size_t i) const { return i >= even ? 1 : 0; }
    std::string str() const;

    friend bool operator==(const SuperSpace&, const SuperSpace&) = default;
};

/// The monoidal unit (1|0).
inline constexpr SuperSpace kUnit{1, 0};

SuperSpace tensor_space(const SuperSpace& v, const SuperSpace& w);

/// Pairs (i, j) in the order they appear in the basis of V (x) W.
std::vector<std::pair<std::size_t, std::size_t>> tensor_basis(const SuperSpace& v,
                                                              const SuperSpace& w);
/// Position of v_i (x) w_j inside V (x) W.
std::vector<std::size_t> tensor_position(const SuperSpace& v, const SuperSpace& w);

/// Parity-homogeneous linear map; `matrix` is target.dim() x source.dim().
class SuperMap {
public:
    SuperMap() = default;
    /// Throws InvalidInput if the matrix has nonzero entries in blocks the
    /// parity forbids, ShapeMismatch on wrong dimensions.
    SuperMap(SuperSpace source, SuperSpace target, int parity, Matrix matrix);

    static SuperMap identity(const SuperSpace& v);
    static SuperMap zero(const SuperSpace& source, const SuperSpace& target, int parity = 0);

    const SuperSpace& source() const { return source_; }
    const SuperSpace& target() const { return target_; }
    int parity() const { return parity_; }
    const Matrix& matrix() const { return matrix_; }

    bool is_identity() const;
    /// 1x1 even map from the unit to the unit, read as a scalar.
    CycScalar as_scalar() const;

    SuperMap& operator+=(const SuperMap& o);
    SuperMap& operator-=(const SuperMap& o);
    friend SuperMap operator+(SuperMap a, const SuperMap& b) { return a += b; }
    friend SuperMap operator-(SuperMap a, const SuperMap& b) { return a -= b; }
    friend SuperMap operator*(const CycScalar& s, SuperMap f);

    friend bool operator==(const SuperMap& a, const SuperMap& b);
    friend bool operator!=(const SuperMap& a, const SuperMap& b) { return !(a == b); }

private:
    SuperSpace source_{}, target_{};
    int parity_ = 0;
    Matrix matrix_;
};

SuperMap compose(const SuperMap& g, const SuperMap& f);
/// f^n for an endomorphism, n >= 0.
SuperMap power(const SuperMap& f, long n);

/// (f (x) g)(v (x) w) = (-1)^{|g||v|} f(v) (x) g(w).
SuperMap tensor(const SuperMap& f, const SuperMap& g);

/// b(v (x) w) = (-1)^{|v||w|} w (x) v.
SuperMap braiding(const SuperSpace& v, const SuperSpace& w);

/// (U (x) V) (x) W -> U (x) (V (x) W); a signless permutation.
SuperMap associator(const SuperSpace& u, const SuperSpace& v, const SuperSpace& w);
/// U (x) (V (x) W) -> (U (x) V) (x) W.
SuperMap associator_inverse(const SuperSpace& u, const SuperSpace& v, const SuperSpace& w);

/// even_dim - odd_dim: the supertrace of the identity.
CycScalar quantum_dimension(const SuperSpace& v);
/// Sum of even diagonal entries minus odd ones (even endomorphisms).
CycScalar supertrace(const SuperMap& f);

/// Columns of `vectors` form a parity-homogeneous basis; the first
/// space.even columns are even vectors, the rest odd.
struct GradedBasis {
    Matrix vectors;
    SuperSpace space;
};

GradedBasis kernel_basis(const SuperMap& f);
GradedBasis image_basis(const SuperMap& f);

struct SplitIdempotent {
    SuperMap inclusion;   // image -> source
    SuperMap projection;  // source -> image
    SuperSpace image;
};

/// Splits an even idempotent: projection o inclusion = id_image and
/// inclusion o projection = p. Throws InvalidInput (with the nonzero
/// residual p o p - p) when p is not idempotent or not even.
SplitIdempotent split_idempotent(const SuperMap& p);

/// Vector of V (x) W built from x in V and y in W (no sign: plain placement).
Matrix tensor_vectors(const SuperSpace& v, const Matrix& x, const SuperSpace& w, const Matrix& y);

}  // namespace rspin
