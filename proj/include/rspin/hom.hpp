#pragma once

// Cohomology of the morphism complex Hom(X, X') between matrix
// factorizations with the same source and target potentials.
//
// The complex is graded by the quasi-homogeneous degree: a morphism
// f * E_{ij} has degree deg f + deg e'_i - deg e_j, and
// delta(z) = d' z - (-1)^{|z|} z d raises it by 1/2. Each graded piece is
// finite-dimensional and handled by exact linear algebra. Degrees are
// scanned upwards from the lowest possible one and the scan stops once the
// total dimension has not changed over a window of width 1 that lies
// beyond every basis-degree difference. The ceiling on the scanned width
// comes from RSPIN_HOM_NMAX (default 6); reaching it raises Inconclusive.

#include <map>
#include <memory>
#include <tuple>
#include <vector>

#include "rspin/mf.hpp"

namespace rspin {

struct HomClass {
    Rational degree;
    int parity = 0;
    PolyMatrix representative;  // rows: target basis, columns: source basis
};

class HomCohomology {
public:
    HomCohomology(MatrixFactorization source, MatrixFactorization target);

    const MatrixFactorization& source() const { return source_; }
    const MatrixFactorization& target() const { return target_; }
    const std::vector<std::string>& ring() const { return ring_; }

    /// Classes ordered even first, then by degree.
    const std::vector<HomClass>& classes() const { return classes_; }
    SuperSpace space() const { return space_; }
    /// Highest degree scanned before the dimension was accepted.
    const Rational& cutoff() const { return cutoff_; }

    /// d' z - (-1)^parity z d.
    PolyMatrix differential(const PolyMatrix& z, int parity) const;

    /// Coordinates (a column over classes()) of the class of a cocycle.
    /// Throws Error if some graded component is not closed.
    Matrix reduce(const PolyMatrix& cocycle) const;

private:
    using Coord = std::tuple<std::size_t, std::size_t, Monomial>;
    using Key = std::pair<Rational, int>;
    struct Coords {
        std::vector<Coord> list;
        std::map<Coord, std::size_t> index;
    };
    struct Piece {
        Matrix reps;        // cocycles spanning a complement of the boundaries
        Matrix solve_basis; // [reps | boundaries]
    };

    const Coords& coords(const Rational& t, int parity) const;
    const Matrix& delta_matrix(const Rational& t, int parity) const;
    const Piece& piece(const Rational& t, int parity) const;
    PolyMatrix to_matrix(const Coords& c, const Matrix& column, std::size_t k) const;

    MatrixFactorization source_, target_;
    std::vector<std::string> ring_;
    std::vector<Rational> weights_;
    PolyMatrix d_, dt_;  // source and target differentials over ring_
    std::vector<HomClass> classes_;
    std::vector<Key> class_keys_;
    std::vector<std::size_t> class_columns_;
    SuperSpace space_;
    Rational cutoff_;

    mutable std::map<Key, Coords> coords_;
    mutable std::map<Key, Matrix> deltas_;
    mutable std::map<Key, Piece> pieces_;
};

HomCohomology hom_cohomology(const MatrixFactorization& x, const MatrixFactorization& x2);

/// Ceiling on the scanned degree width (RSPIN_HOM_NMAX, default 6).
int hom_scan_limit();

}  // namespace rspin
