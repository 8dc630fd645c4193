#include "rspin/superlinalg.hpp"

#include <sstream>

namespace rspin {

std::string SuperSpace::str() const {
    return "(" + std::to_string(even) + "|" + std::to_string(odd) + ")";
}

SuperSpace tensor_space(const SuperSpace& v, const SuperSpace& w) {
    return {v.even * w.even + v.odd * w.odd, v.even * w.odd + v.odd * w.even};
}

std::vector<std::pair<std::size_t, std::size_t>> tensor_basis(const SuperSpace& v,
                                                              const SuperSpace& w) {
    std::vector<std::pair<std::size_t, std::size_t>> even, odd;
    for (std::size_t i = 0; i < v.dim(); ++i)
        for (std::size_t j = 0; j < w.dim(); ++j)
            ((v.parity(i) + w.parity(j)) % 2 == 0 ? even : odd).emplace_back(i, j);
    even.insert(even.end(), odd.begin(), odd.end());
    return even;
}

std::vector<std::size_t> tensor_position(const SuperSpace& v, const SuperSpace& w) {
    std::vector<std::size_t> pos(v.dim() * w.dim());
    auto basis = tensor_basis(v, w);
    for (std::size_t k = 0; k < basis.size(); ++k) pos[basis[k].first * w.dim() + basis[k].second] = k;
    return pos;
}

namespace {

void check_blocks(const SuperSpace& s, const SuperSpace& t, int parity, const Matrix& m) {
    for (std::size_t i = 0; i < t.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j) {
            if ((t.parity(i) + s.parity(j) + parity) % 2 != 0 && !m(i, j).is_zero()) {
                throw InvalidInput("matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                                   ") violates the parity of a " +
                                   (parity ? std::string("odd") : std::string("even")) + " map");
            }
        }
}

int sign(int e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

SuperMap::SuperMap(SuperSpace source, SuperSpace target, int parity, Matrix matrix)
    : source_(source), target_(target), parity_(parity & 1), matrix_(std::move(matrix)) {
    if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim()) {
        throw ShapeMismatch("super map " + source_.str() + " -> " + target_.str() + " given a " +
                            std::to_string(matrix_.rows()) + "x" + std::to_string(matrix_.cols()) +
                            " matrix");
    }
    check_blocks(source_, target_, parity_, matrix_);
}

SuperMap SuperMap::identity(const SuperSpace& v) {
    return SuperMap(v, v, 0, Matrix::identity(v.dim()));
}

SuperMap SuperMap::zero(const SuperSpace& source, const SuperSpace& target, int parity) {
    return SuperMap(source, target, parity, Matrix(target.dim(), source.dim()));
}

bool SuperMap::is_identity() const {
    return source_ == target_ && parity_ == 0 && matrix_ == Matrix::identity(source_.dim());
}

CycScalar SuperMap::as_scalar() const {
    if (!(source_ == kUnit) || !(target_ == kUnit)) {
        throw ShapeMismatch("as_scalar needs a map (1|0) -> (1|0), got " + source_.str() + " -> " +
                            target_.str());
    }
    return matrix_(0, 0);
}

SuperMap& SuperMap::operator+=(const SuperMap& o) {
    if (!(source_ == o.source_) || !(target_ == o.target_)) throw ShapeMismatch("super map sum");
    if (parity_ != o.parity_ && !o.matrix_.is_zero() && !matrix_.is_zero())
        throw InvalidInput("sum of maps of different parity");
    if (matrix_.is_zero()) parity_ = o.parity_;
    matrix_ += o.matrix_;
    return *this;
}

SuperMap& SuperMap::operator-=(const SuperMap& o) {
    SuperMap neg = o;
    neg.matrix_ *= CycScalar(-1);
    return *this += neg;
}

SuperMap operator*(const CycScalar& s, SuperMap f) {
    f.matrix_ *= s;
    return f;
}

bool operator==(const SuperMap& a, const SuperMap& b) {
    if (!(a.source_ == b.source_) || !(a.target_ == b.target_)) return false;
    if (a.matrix_ != b.matrix_) return false;
    // The zero map is homogeneous of both parities.
    return a.parity_ == b.parity_ || a.matrix_.is_zero();
}

SuperMap compose(const SuperMap& g, const SuperMap& f) {
    if (!(f.target() == g.source())) {
        throw ShapeMismatch("compose: target " + f.target().str() + " != source " + g.source().str());
    }
    return SuperMap(f.source(), g.target(), f.parity() + g.parity(), g.matrix() * f.matrix());
}

SuperMap power(const SuperMap& f, long n) {
    if (!(f.source() == f.target())) throw ShapeMismatch("power of a non-endomorphism");
    if (n < 0) throw InvalidInput("power: negative exponent");
    SuperMap out = SuperMap::identity(f.source());
    SuperMap base = f;
    while (n) {
        if (n & 1L) out = compose(base, out);
        n >>= 1;
        if (n) base = compose(base, base);
    }
    return out;
}

SuperMap tensor(const SuperMap& f, const SuperMap& g) {
    const SuperSpace s = tensor_space(f.source(), g.source());
    const SuperSpace t = tensor_space(f.target(), g.target());
    const auto sb = tensor_basis(f.source(), g.source());
    const auto tb = tensor_basis(f.target(), g.target());
    Matrix m(t.dim(), s.dim());
    for (std::size_t c = 0; c < sb.size(); ++c) {
        const auto [i, j] = sb[c];
        const int sg = sign(g.parity() * f.source().parity(i));
        for (std::size_t r = 0; r < tb.size(); ++r) {
            const auto [ip, jp] = tb[r];
            const CycScalar& a = f.matrix()(ip, i);
            if (a.is_zero()) continue;
            const CycScalar& b = g.matrix()(jp, j);
            if (b.is_zero()) continue;
            m(r, c) = sg > 0 ? a * b : -(a * b);
        }
    }
    return SuperMap(s, t, f.parity() + g.parity(), std::move(m));
}

SuperMap braiding(const SuperSpace& v, const SuperSpace& w) {
    const auto sb = tensor_basis(v, w);
    const auto tpos = tensor_position(w, v);
    const SuperSpace s = tensor_space(v, w);
    Matrix m(s.dim(), s.dim());
    for (std::size_t c = 0; c < sb.size(); ++c) {
        const auto [i, j] = sb[c];
        m(tpos[j * v.dim() + i], c) = CycScalar(sign(v.parity(i) * w.parity(j)));
    }
    return SuperMap(s, tensor_space(w, v), 0, std::move(m));
}

SuperMap associator(const SuperSpace& u, const SuperSpace& v, const SuperSpace& w) {
    const SuperSpace uv = tensor_space(u, v);
    const SuperSpace vw = tensor_space(v, w);
    const auto uv_basis = tensor_basis(u, v);
    const auto left = tensor_basis(uv, w);
    const auto vw_pos = tensor_position(v, w);
    const auto right_pos = tensor_position(u, vw);
    const SuperSpace total = tensor_space(uv, w);
    Matrix m(total.dim(), total.dim());
    for (std::size_t c = 0; c < left.size(); ++c) {
        const auto [p, k] = left[c];
        const auto [i, j] = uv_basis[p];
        const std::size_t q = vw_pos[j * w.dim() + k];
        m(right_pos[i * vw.dim() + q], c) = CycScalar(1);
    }
    return SuperMap(total, tensor_space(u, vw), 0, std::move(m));
}

SuperMap associator_inverse(const SuperSpace& u, const SuperSpace& v, const SuperSpace& w) {
    SuperMap a = associator(u, v, w);
    return SuperMap(a.target(), a.source(), 0, a.matrix().transpose());
}

CycScalar quantum_dimension(const SuperSpace& v) {
    return CycScalar(static_cast<long>(v.even) - static_cast<long>(v.odd));
}

CycScalar supertrace(const SuperMap& f) {
    if (!(f.source() == f.target())) throw ShapeMismatch("supertrace of a non-endomorphism");
    CycScalar s;
    if (f.parity() == 1) return s;
    for (std::size_t i = 0; i < f.source().dim(); ++i) {
        if (f.source().parity(i) == 0) {
            s += f.matrix()(i, i);
        } else {
            s -= f.matrix()(i, i);
        }
    }
    return s;
}

namespace {

// Kernel vectors of the columns [c0, c0 + n) of m, embedded in the full space.
Matrix sub_kernel(const Matrix& m, std::size_t c0, std::size_t n) {
    Matrix k = kernel_basis(m.block(0, c0, m.rows(), n));
    Matrix out(m.cols(), k.cols());
    out.set_block(c0, 0, k);
    return out;
}

}  // namespace

GradedBasis kernel_basis(const SuperMap& f) {
    const SuperSpace& s = f.source();
    Matrix ke = sub_kernel(f.matrix(), 0, s.even);
    Matrix ko = sub_kernel(f.matrix(), s.even, s.odd);
    return {hstack(ke, ko), {ke.cols(), ko.cols()}};
}

GradedBasis image_basis(const SuperMap& f) {
    const SuperSpace& s = f.source();
    const Matrix& m = f.matrix();
    Matrix ie = image_basis(m.block(0, 0, m.rows(), s.even));
    Matrix io = image_basis(m.block(0, s.even, m.rows(), s.odd));
    // Even map: even columns land in even vectors. Odd map: swapped.
    if (f.parity() == 0) return {hstack(ie, io), {ie.cols(), io.cols()}};
    return {hstack(io, ie), {io.cols(), ie.cols()}};
}

SplitIdempotent split_idempotent(const SuperMap& p) {
    if (!(p.source() == p.target())) throw ShapeMismatch("split_idempotent: not an endomorphism");
    if (p.parity() != 0 && !p.matrix().is_zero()) throw InvalidInput("split_idempotent: odd map");
    const Matrix residual = p.matrix() * p.matrix() - p.matrix();
    if (!residual.is_zero()) {
        throw InvalidInput("split_idempotent: p o p - p is nonzero: " + residual.str());
    }
    GradedBasis img = image_basis(p);
    auto coords = solve(img.vectors, p.matrix());
    if (!coords) throw Error("split_idempotent: image basis does not span p");
    SuperMap incl(img.space, p.source(), 0, img.vectors);
    SuperMap proj(p.source(), img.space, 0, *coords);
    return {incl, proj, img.space};
}

Matrix tensor_vectors(const SuperSpace& v, const Matrix& x, const SuperSpace& w, const Matrix& y) {
    const auto pos = tensor_position(v, w);
    Matrix out(v.dim() * w.dim(), 1);
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (x(i, 0).is_zero()) continue;
        for (std::size_t j = 0; j < w.dim(); ++j) {
            if (!y(j, 0).is_zero()) out(pos[i * w.dim() + j], 0) = x(i, 0) * y(j, 0);
        }
    }
    return out;
}

}  // namespace rspin
