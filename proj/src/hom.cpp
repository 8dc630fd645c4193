#include "rspin/hom.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "rspin/errors.hpp"

namespace rspin {

int hom_scan_limit() {
    if (const char* env = std::getenv("RSPIN_HOM_NMAX")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    return 6;
}

namespace {

void add_product(Poly& out, const Poly& p, const Monomial& m, const CycScalar& c) {
    for (const auto& [mono, x] : p.terms()) {
        Monomial s = mono;
        for (std::size_t i = 0; i < s.size(); ++i) s[i] += m[i];
        out.add_term(s, x * c);
    }
}

}  // namespace

HomCohomology::HomCohomology(MatrixFactorization source, MatrixFactorization target)
    : source_(std::move(source)), target_(std::move(target)) {
    if (source_.source_potential != target_.source_potential ||
        source_.target_potential != target_.target_potential)
        throw InvalidInput("Hom needs equal potentials: " + source_.source_potential.str() + " -> " +
                           source_.target_potential.str() + " vs " + target_.source_potential.str() +
                           " -> " + target_.target_potential.str());
    const auto outer = merge_variables(source_.source_potential.used_variables(),
                                       source_.target_potential.used_variables());
    for (const auto& v : source_.ring())
        if (!std::binary_search(outer.begin(), outer.end(), v))
            throw Unsupported("the source factorization carries the middle variable " + v);
    if (source_.degrees.empty() || target_.degrees.empty())
        throw Unsupported("Hom cohomology needs quasi-homogeneous factorizations");

    ring_ = merge_variables(merge_variables(source_.ring(), target_.ring()), outer);
    for (const auto& v : ring_) {
        auto a = source_.weights.find(v), b = target_.weights.find(v);
        if (a == source_.weights.end() && b == target_.weights.end())
            throw Unsupported("no weight for variable " + v);
        if (a != source_.weights.end() && b != target_.weights.end() && a->second != b->second)
            throw InvalidInput("conflicting weights for " + v);
        weights_.push_back(a != source_.weights.end() ? a->second : b->second);
    }
    d_ = source_.d.map([&](const Poly& p) { return p.in_ring(ring_); });
    dt_ = target_.d.map([&](const Poly& p) { return p.in_ring(ring_); });

    // Degree lattice and scan range.
    long den = 2;
    for (const auto& q : weights_) den = std::lcm(den, q.get_den().get_si());
    for (const auto& q : source_.degrees) den = std::lcm(den, q.get_den().get_si());
    for (const auto& q : target_.degrees) den = std::lcm(den, q.get_den().get_si());
    Rational lo = target_.degrees[0] - source_.degrees[0], hi = lo;
    for (const auto& a : target_.degrees)
        for (const auto& b : source_.degrees) {
            lo = std::min(lo, Rational(a - b));
            hi = std::max(hi, Rational(a - b));
        }
    const long per_half = den / 2;
    const int limit = hom_scan_limit();
    std::vector<std::size_t> totals;  // cumulative dimension at each half-step checkpoint
    std::size_t total = 0;
    std::vector<Key> found;
    for (long k = 0;; ++k) {
        const Rational t = lo + make_rational(k, den);
        for (int p = 0; p < 2; ++p) {
            const std::size_t h = piece(t, p).reps.cols();
            if (h) found.emplace_back(t, p);
            total += h;
        }
        if (k % per_half != 0) continue;
        totals.push_back(total);
        const std::size_t n = totals.size();
        const Rational window_start = t - 1;
        if (n >= 3 && totals[n - 1] == totals[n - 3] && window_start >= hi) {
            cutoff_ = t;
            break;
        }
        if (t - lo > limit)
            throw Inconclusive("Hom dimension did not stabilize below degree width " +
                               std::to_string(limit) + " (raise RSPIN_HOM_NMAX)");
    }

    // Classes: even first, then by degree.
    std::stable_sort(found.begin(), found.end(), [](const Key& a, const Key& b) {
        return std::tie(a.second, a.first) < std::tie(b.second, b.first);
    });
    for (const auto& key : found) {
        const Piece& pc = piece(key.first, key.second);
        const Coords& c = coords(key.first, key.second);
        for (std::size_t col = 0; col < pc.reps.cols(); ++col) {
            PolyMatrix rep = to_matrix(c, pc.reps, col);
            if (!differential(rep, key.second).is_zero())
                throw Error("Hom representative is not closed");
            classes_.push_back({key.first, key.second, std::move(rep)});
            class_keys_.push_back(key);
            class_columns_.push_back(col);
            (key.second ? space_.odd : space_.even) += 1;
        }
    }
}

const HomCohomology::Coords& HomCohomology::coords(const Rational& t, int parity) const {
    const Key key{t, parity};
    auto it = coords_.find(key);
    if (it != coords_.end()) return it->second;
    Coords c;
    const SuperSpace& s = source_.rank;
    const SuperSpace& u = target_.rank;
    for (std::size_t i = 0; i < u.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j) {
            if ((u.parity(i) + s.parity(j)) % 2 != parity) continue;
            const Rational e = t - target_.degrees[i] + source_.degrees[j];
            for (auto& m : monomials_of_degree(weights_, e)) {
                Coord co{i, j, std::move(m)};
                c.index.emplace(co, c.list.size());
                c.list.push_back(std::move(co));
            }
        }
    return coords_.emplace(key, std::move(c)).first->second;
}

const Matrix& HomCohomology::delta_matrix(const Rational& t, int parity) const {
    const Key key{t, parity};
    auto it = deltas_.find(key);
    if (it != deltas_.end()) return it->second;
    const Coords& from = coords(t, parity);
    const Coords& to = coords(t + Rational(1, 2), 1 - parity);
    Matrix m(to.list.size(), from.list.size());
    const CycScalar sign(parity ? 1 : -1);  // -(-1)^parity
    const std::size_t ns = source_.rank.dim(), nt = target_.rank.dim();
    for (std::size_t col = 0; col < from.list.size(); ++col) {
        const auto& [i, j, mono] = from.list[col];
        auto put = [&](std::size_t r, std::size_t c, const Poly& p, const CycScalar& scale) {
            Poly prod(ring_);
            add_product(prod, p, mono, scale);
            for (const auto& [mm, x] : prod.terms()) {
                auto f = to.index.find(Coord{r, c, mm});
                if (f == to.index.end()) throw Error("differential is not homogeneous of degree 1/2");
                m(f->second, col) += x;
            }
        };
        for (std::size_t k = 0; k < nt; ++k)
            if (!dt_(k, i).is_zero()) put(k, j, dt_(k, i), CycScalar(1));
        for (std::size_t l = 0; l < ns; ++l)
            if (!d_(j, l).is_zero()) put(i, l, d_(j, l), sign);
    }
    return deltas_.emplace(key, std::move(m)).first->second;
}

const HomCohomology::Piece& HomCohomology::piece(const Rational& t, int parity) const {
    const Key key{t, parity};
    auto it = pieces_.find(key);
    if (it != pieces_.end()) return it->second;
    Piece pc;
    const std::size_t n = coords(t, parity).list.size();
    if (n == 0) {
        pc.reps = Matrix(0, 0);
        pc.solve_basis = Matrix(0, 0);
        return pieces_.emplace(key, std::move(pc)).first->second;
    }
    const Matrix z = kernel_basis(delta_matrix(t, parity));
    const Rational below = t - Rational(1, 2);
    Matrix b(n, 0);
    if (!coords(below, 1 - parity).list.empty()) b = image_basis(delta_matrix(below, 1 - parity));
    const Matrix both = b.cols() ? (z.cols() ? hstack(b, z) : b) : z;
    std::vector<std::size_t> keep;
    if (both.cols()) {
        for (std::size_t p : row_reduce(both).pivots)
            if (p >= b.cols()) keep.push_back(p - b.cols());
    }
    pc.reps = Matrix(n, keep.size());
    for (std::size_t k = 0; k < keep.size(); ++k) pc.reps.set_block(0, k, z.block(0, keep[k], n, 1));
    pc.solve_basis = pc.reps.cols() ? (b.cols() ? hstack(pc.reps, b) : pc.reps) : b;
    return pieces_.emplace(key, std::move(pc)).first->second;
}

PolyMatrix HomCohomology::to_matrix(const Coords& c, const Matrix& column, std::size_t k) const {
    PolyMatrix out(target_.rank.dim(), source_.rank.dim());
    for (std::size_t r = 0; r < c.list.size(); ++r) {
        if (column(r, k).is_zero()) continue;
        const auto& [i, j, m] = c.list[r];
        out(i, j) += Poly::monomial(ring_, m, column(r, k));
    }
    return out;
}

PolyMatrix HomCohomology::differential(const PolyMatrix& z, int parity) const {
    PolyMatrix a = dt_ * z, b = z * d_;
    return parity ? a + b : a - b;
}

Matrix HomCohomology::reduce(const PolyMatrix& cocycle) const {
    if (cocycle.rows() != target_.rank.dim() || cocycle.cols() != source_.rank.dim())
        throw ShapeMismatch("cocycle shape does not match Hom(X, X')");
    std::map<Key, std::vector<std::pair<Coord, CycScalar>>> parts;
    for (std::size_t i = 0; i < cocycle.rows(); ++i)
        for (std::size_t j = 0; j < cocycle.cols(); ++j) {
            const Poly p = cocycle(i, j).in_ring(ring_);
            const int parity = (target_.rank.parity(i) + source_.rank.parity(j)) % 2;
            for (const auto& [m, c] : p.terms()) {
                const Rational t = weighted_degree(m, weights_) + target_.degrees[i] - source_.degrees[j];
                parts[{t, parity}].push_back({Coord{i, j, m}, c});
            }
        }
    Matrix out(classes_.size(), 1);
    for (const auto& [key, terms] : parts) {
        const Coords& c = coords(key.first, key.second);
        Matrix v(c.list.size(), 1);
        for (const auto& [co, x] : terms) v(c.index.at(co), 0) = x;
        if (!(delta_matrix(key.first, key.second) * v).is_zero())
            throw Error("reduce: component of degree " + key.first.get_str() + " is not closed");
        const Piece& pc = piece(key.first, key.second);
        if (pc.solve_basis.cols() == 0) throw Error("reduce: closed component in an acyclic piece");
        auto sol = solve(pc.solve_basis, v);
        if (!sol) throw Error("reduce: closed component outside cocycle span");
        bool known = false;
        for (std::size_t k = 0; k < classes_.size(); ++k) {
            if (class_keys_[k] != key) continue;
            known = true;
            out(k, 0) = (*sol)(class_columns_[k], 0);
        }
        if (!known && pc.reps.cols() > 0)
            throw Inconclusive("cohomology found beyond the accepted degree " + key.first.get_str());
    }
    return out;
}

HomCohomology hom_cohomology(const MatrixFactorization& x, const MatrixFactorization& x2) {
    return HomCohomology(x, x2);
}

}  // namespace rspin
