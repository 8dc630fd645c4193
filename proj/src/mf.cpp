#include "rspin/mf.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "rspin/errors.hpp"
#include "rspin/groebner.hpp"

namespace rspin {

PolyMatrix PolyMatrix::identity(std::size_t n) {
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly(1);
    return m;
}

bool PolyMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Poly& p) { return p.is_zero(); });
}

PolyMatrix PolyMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    PolyMatrix out(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("polynomial matrix sum");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("polynomial matrix difference");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw ShapeMismatch("polynomial matrix product");
    PolyMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Poly& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
        }
    return out;
}

PolyMatrix operator*(const Poly& p, const PolyMatrix& m) {
    return m.map([&](const Poly& x) { return p * x; });
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t k = 0; k < a.data_.size(); ++k)
        if (a.data_[k] != b.data_[k]) return false;
    return true;
}

std::string PolyMatrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
        os << "]\n";
    }
    return os.str();
}

CycScalar GroupAction::det(long g) const {
    long s = 0;
    for (const auto& [v, w] : weights) s += w;
    return CycScalar::zeta(r, g * s);
}

void GroupAction::check_invariant(const Poly& w) const {
    if (r < 1) throw InvalidInput("group order must be positive");
    std::map<std::string, CycScalar> scale;
    for (const auto& v : w.used_variables()) {
        auto it = weights.find(v);
        if (it == weights.end()) throw InvalidInput("no action weight for variable " + v);
        scale[v] = CycScalar::zeta(r, it->second);
    }
    if (w.scale_variables(scale) != w) throw InvalidInput(w.str() + " is not invariant under the action");
}

std::vector<std::string> MatrixFactorization::ring() const {
    std::vector<std::string> vs = merge_variables(source_potential.used_variables(),
                                                  target_potential.used_variables());
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j) vs = merge_variables(vs, d(i, j).used_variables());
    return vs;
}

MatrixFactorization make_mf(Poly source, Poly target, SuperSpace rank, PolyMatrix d,
                            std::vector<Rational> degrees, std::map<std::string, Rational> weights) {
    const std::size_t n = rank.dim();
    if (d.rows() != n || d.cols() != n) throw InvalidInput("differential shape does not match rank");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (rank.parity(i) == rank.parity(j) && !d(i, j).is_zero())
                throw InvalidInput("differential is not odd");
    if (!degrees.empty() && degrees.size() != n) throw InvalidInput("one degree per basis vector");
    const Poly gap = target - source;
    const PolyMatrix sq = d * d;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (sq(i, j) != (i == j ? gap : Poly(0)))
                throw InvalidInput("d^2 != (V - W) * id at entry (" + std::to_string(i) + "," +
                                   std::to_string(j) + ")");
    return MatrixFactorization{std::move(source), std::move(target), rank, std::move(d),
                               std::move(degrees), std::move(weights)};
}

std::vector<unsigned> exterior_basis(std::size_t n) {
    std::vector<unsigned> out;
    for (int parity = 0; parity < 2; ++parity)
        for (unsigned s = 0; s < (1u << n); ++s)
            if (std::popcount(s) % 2 == parity) out.push_back(s);
    return out;
}

namespace {

std::map<std::string, Rational> try_weights(const Poly& w) {
    try {
        return quasi_homogeneous_weights(w);
    } catch (const Unsupported&) {
        return {};
    }
}

MatrixFactorization koszul_identity(const Poly& w0, const std::map<std::string, CycScalar>& twist) {
    const Poly w = w0.trimmed();
    const auto& vars = w.variables();
    const std::size_t n = vars.size();
    const auto basis = exterior_basis(n);
    std::vector<std::size_t> where(1u << n);
    for (std::size_t k = 0; k < basis.size(); ++k) where[basis[k]] = k;
    const SuperSpace rank{basis.size() / 2 + (n == 0 ? 1 : 0), n == 0 ? 0 : basis.size() / 2};

    std::vector<Poly> up, down;
    for (const auto& v : vars) {
        up.push_back(difference_quotient(w, v).scale_variables(twist));
        down.push_back((Poly::variable(primed(v)) - Poly::variable(v)).scale_variables(twist));
    }
    PolyMatrix d(basis.size(), basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const unsigned s = basis[k];
        for (std::size_t i = 0; i < n; ++i) {
            const unsigned bit = 1u << i;
            const int sign = std::popcount(s & (bit - 1)) % 2 ? -1 : 1;
            if (s & bit) {
                d(where[s ^ bit], k) += down[i] * CycScalar(sign);
            } else {
                d(where[s | bit], k) += up[i] * CycScalar(sign);
            }
        }
    }
    auto weights = try_weights(w);
    std::vector<Rational> degrees;
    if (!weights.empty()) {
        for (const auto& v : vars) weights[primed(v)] = weights[v];
        for (unsigned s : basis) {
            Rational deg = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (s & (1u << i)) deg += weights[vars[i]] - Rational(1, 2);
            degrees.push_back(deg);
        }
    }
    std::map<std::string, std::string> prime;
    for (const auto& v : vars) prime[v] = primed(v);
    return make_mf(w, w.rename(prime), rank, std::move(d), std::move(degrees), std::move(weights));
}

}  // namespace

MatrixFactorization identity_mf(const Poly& w) { return koszul_identity(w, {}); }

MatrixFactorization twisted_identity(const Poly& w, const GroupAction& act, long g) {
    act.check_invariant(w);
    std::map<std::string, CycScalar> twist;
    for (const auto& v : w.used_variables()) twist[primed(v)] = CycScalar::zeta(act.r, -act.weights.at(v) * g);
    return koszul_identity(w, twist);
}

MatrixFactorization shift(const MatrixFactorization& x) {
    const std::size_t e = x.rank.even, o = x.rank.odd, n = e + o;
    std::vector<std::size_t> perm;
    for (std::size_t i = e; i < n; ++i) perm.push_back(i);
    for (std::size_t i = 0; i < e; ++i) perm.push_back(i);
    PolyMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d(i, j) = -x.d(perm[i], perm[j]);
    std::vector<Rational> degrees;
    for (std::size_t i = 0; i < x.degrees.size(); ++i) degrees.push_back(x.degrees[perm[i]]);
    return make_mf(x.source_potential, x.target_potential, SuperSpace{o, e}, std::move(d),
                   std::move(degrees), x.weights);
}

MatrixFactorization mf_tensor(const MatrixFactorization& y, const MatrixFactorization& x) {
    const auto ry = y.ring(), rx = x.ring();
    std::vector<std::string> shared;
    std::set_intersection(ry.begin(), ry.end(), rx.begin(), rx.end(), std::back_inserter(shared));
    Poly source, target;
    if (x.target_potential == y.source_potential && !x.target_potential.is_zero()) {
        source = x.source_potential;
        target = y.target_potential;
    } else if (shared.empty()) {
        source = x.source_potential + y.source_potential;
        target = x.target_potential + y.target_potential;
    } else {
        throw InvalidInput("cannot compose: target potential " + x.target_potential.str() +
                           " differs from source potential " + y.source_potential.str() +
                           " and the rings share variables");
    }
    const SuperSpace rank = tensor_space(y.rank, x.rank);
    const auto pos = tensor_position(y.rank, x.rank);
    const std::size_t ny = y.rank.dim(), nx = x.rank.dim();
    PolyMatrix d(rank.dim(), rank.dim());
    std::vector<Rational> degrees(rank.dim());
    const bool graded = !y.degrees.empty() && !x.degrees.empty();
    for (std::size_t a = 0; a < ny; ++a)
        for (std::size_t b = 0; b < nx; ++b) {
            const std::size_t col = pos[a * nx + b];
            if (graded) degrees[col] = y.degrees[a] + x.degrees[b];
            for (std::size_t a2 = 0; a2 < ny; ++a2)
                if (!y.d(a2, a).is_zero()) d(pos[a2 * nx + b], col) += y.d(a2, a);
            const CycScalar sign(y.rank.parity(a) ? -1 : 1);
            for (std::size_t b2 = 0; b2 < nx; ++b2)
                if (!x.d(b2, b).is_zero()) d(pos[a * nx + b2], col) += x.d(b2, b) * sign;
        }
    std::map<std::string, Rational> weights;
    if (graded) {
        weights = x.weights;
        for (const auto& [v, q] : y.weights) {
            auto [it, fresh] = weights.emplace(v, q);
            if (!fresh && it->second != q) throw InvalidInput("conflicting weights for " + v);
        }
    }
    return make_mf(source, target, rank, std::move(d), graded ? std::move(degrees) : std::vector<Rational>{},
                   std::move(weights));
}

MatrixFactorization rename(const MatrixFactorization& x, const std::map<std::string, std::string>& names) {
    auto rn = [&](const Poly& p) { return p.rename(names); };
    std::map<std::string, Rational> weights;
    for (const auto& [v, q] : x.weights) {
        auto it = names.find(v);
        weights[it == names.end() ? v : it->second] = q;
    }
    return make_mf(rn(x.source_potential), rn(x.target_potential), x.rank, x.d.map(rn), x.degrees,
                   std::move(weights));
}

}  // namespace rspin
