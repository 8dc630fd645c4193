#include "rspin/constructors.hpp"

#include <regex>

namespace rspin {

namespace {

SuperMap id(const SuperSpace& v) { return SuperMap::identity(v); }

std::string failed_list(const std::vector<std::pair<std::string, bool>>& checks) {
    std::string out;
    for (const auto& [name, ok] : checks) {
        if (!ok) out += (out.empty() ? "" : ", ") + name;
    }
    return out;
}

void expect_shape(const SuperMap& f, const SuperSpace& s, const SuperSpace& t, const char* what) {
    if (!(f.source() == s) || !(f.target() == t)) {
        throw InvalidInput(std::string(what) + " should map " + s.str() + " -> " + t.str());
    }
    if (f.parity() != 0 && !f.matrix().is_zero()) throw InvalidInput(std::string(what) + " is odd");
}

}  // namespace

std::vector<std::pair<std::string, bool>> frobenius_checks(const FrobeniusMaps& a) {
    const SuperSpace& v = a.space;
    const SuperSpace vv = tensor_space(v, v);
    expect_shape(a.mult, vv, v, "mult");
    expect_shape(a.unit, kUnit, v, "unit");
    expect_shape(a.counit, v, kUnit, "counit");
    expect_shape(a.comult, v, vv, "comult");
    const SuperMap& m = a.mult;
    const SuperMap& d = a.comult;
    std::vector<std::pair<std::string, bool>> out;
    out.emplace_back("associativity", compose(m, tensor(m, id(v))) ==
                                          compose(m, compose(tensor(id(v), m), associator(v, v, v))));
    out.emplace_back("unitality", compose(m, tensor(a.unit, id(v))).is_identity() &&
                                      compose(m, tensor(id(v), a.unit)).is_identity());
    out.emplace_back("coassociativity",
                     compose(associator(v, v, v), compose(tensor(d, id(v)), d)) ==
                         compose(tensor(id(v), d), d));
    out.emplace_back("counitality", compose(tensor(a.counit, id(v)), d).is_identity() &&
                                        compose(tensor(id(v), a.counit), d).is_identity());
    const SuperMap dm = compose(d, m);
    out.emplace_back("frobenius",
                     compose(tensor(id(v), m), compose(associator(v, v, v), tensor(d, id(v)))) == dm &&
                         compose(tensor(m, id(v)),
                                 compose(associator_inverse(v, v, v), tensor(id(v), d))) == dm);
    out.emplace_back("separability", compose(m, d).is_identity());
    return out;
}

SuperMap derived_comult(const SuperSpace& space, const SuperMap& mult, const SuperMap& counit) {
    const std::size_t n = space.dim();
    const auto pos = tensor_position(space, space);
    Matrix b(n, n);
    const SuperMap beta = compose(counit, mult);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) b(k, i) = beta.matrix()(0, pos[k * n + i]);
    Matrix c;
    try {
        c = inverse(b);
    } catch (const DivisionByZero&) {
        throw InvalidInput("the pairing counit o mult is degenerate; no copairing exists");
    }
    Matrix cop(n * n, 1);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) cop(pos[k * n + i], 0) = c(k, i);
    SuperMap copairing(kUnit, tensor_space(space, space), 0, cop);
    return compose(tensor(mult, id(space)),
                   compose(associator_inverse(space, space, space), tensor(id(space), copairing)));
}

Matrix multiply(const FrobeniusMaps& a, const Matrix& x, const Matrix& y) {
    return a.mult.matrix() * tensor_vectors(a.space, x, a.space, y);
}

FrobeniusAlgebraData::FrobeniusAlgebraData(FrobeniusMaps maps) : maps_(std::move(maps)) {
    const auto checks = frobenius_checks(maps_);
    const std::string bad = failed_list(checks);
    if (!bad.empty()) throw InvalidInput("Frobenius algebra axioms fail: " + bad);
}

FrobeniusAlgebraData::FrobeniusAlgebraData(SuperSpace space, SuperMap mult, SuperMap unit,
                                           SuperMap counit)
    : FrobeniusAlgebraData(FrobeniusMaps{space, mult, unit, counit,
                                         derived_comult(space, mult, counit)}) {}

AlgebraAutomorphism check_automorphism(const FrobeniusMaps& a, const SuperMap& f) {
    const SuperSpace& v = a.space;
    if (!(f.source() == v) || !(f.target() == v) || (f.parity() != 0 && !f.matrix().is_zero()))
        throw InvalidInput("automorphism must be an even endomorphism of " + v.str());
    if (rank(f.matrix()) != v.dim()) throw InvalidInput("automorphism is not invertible");
    std::vector<std::pair<std::string, bool>> checks{
        {"mult", compose(f, a.mult) == compose(a.mult, tensor(f, f))},
        {"unit", compose(f, a.unit) == a.unit},
        {"counit", compose(a.counit, f) == a.counit},
        {"comult", compose(tensor(f, f), a.comult) == compose(a.comult, f)},
    };
    const std::string bad = failed_list(checks);
    if (!bad.empty()) throw InvalidInput("map does not preserve: " + bad);
    return {f};
}

AlgebraAutomorphism nakayama_gamma(const FrobeniusMaps& a) {
    const SuperSpace& v = a.space;
    const SuperMap beta = compose(a.counit, a.mult);
    const SuperMap c = compose(a.comult, a.unit);
    SuperMap f = tensor(id(v), c);
    f = compose(associator_inverse(v, v, v), f);
    f = compose(tensor(braiding(v, v), id(v)), f);
    f = compose(associator(v, v, v), f);
    f = compose(tensor(id(v), beta), f);
    const Matrix inv = f.matrix();
    if (rank(inv) != v.dim()) throw InvalidInput("Nakayama map is singular; pairing degenerate");
    return check_automorphism(a, SuperMap(v, v, 0, inverse(inv)));
}

int automorphism_order(const SuperMap& f, int limit) {
    SuperMap p = f;
    for (int k = 1; k <= limit; ++k) {
        if (p.is_identity()) return k;
        p = compose(f, p);
    }
    throw Unsupported("automorphism order exceeds " + std::to_string(limit));
}

SuperMap twisted_center_projector(const FrobeniusMaps& a, const SuperMap& gamma, int r, long index) {
    const SuperSpace& v = a.space;
    const std::size_t n = v.dim();
    const SuperMap g = power(gamma, mod(1 - index, r));
    const Matrix d1 = compose(a.comult, a.unit).matrix();
    const auto basis = tensor_basis(v, v);
    Matrix p(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Matrix x(n, 1);
        x(j, 0) = CycScalar(1);
        Matrix col(n, 1);
        for (std::size_t t = 0; t < basis.size(); ++t) {
            const CycScalar& coeff = d1(t, 0);
            if (coeff.is_zero()) continue;
            const auto [k, i] = basis[t];
            Matrix ek(n, 1), ei(n, 1);
            ek(k, 0) = CycScalar(1);
            ei(i, 0) = CycScalar(1);
            Matrix term = multiply(a, multiply(a, g.matrix() * ek, x), ei);
            const bool neg = v.parity(j) * v.parity(k) == 1;
            col += (neg ? -coeff : coeff) * term;
        }
        p.set_block(0, j, col);
    }
    return SuperMap(v, v, 0, p);
}

LambdaFrobenius lambda_from_pieces(const FrobeniusMaps& a, const std::vector<SplitIdempotent>& pieces) {
    const int r = static_cast<int>(pieces.size());
    if (r < 1) throw InvalidInput("need at least one piece");
    auto piece = [&](long k) -> const SplitIdempotent& {
        return pieces[static_cast<std::size_t>(mod(k, r))];
    };
    std::vector<SuperSpace> spaces;
    for (const auto& p : pieces) spaces.push_back(p.image);
    std::vector<SuperMap> mu, delta;
    for (int x = 0; x < r; ++x) {
        for (int y = 0; y < r; ++y) {
            mu.push_back(compose(piece(x + y - 1).projection,
                                 compose(a.mult, tensor(piece(x).inclusion, piece(y).inclusion))));
            delta.push_back(compose(tensor(piece(x).projection, piece(y).projection),
                                    compose(a.comult, piece(x + y + 1).inclusion)));
        }
    }
    SuperMap eta = compose(piece(1).projection, a.unit);
    SuperMap eps = compose(a.counit, piece(-1).inclusion);
    return LambdaFrobenius(r, spaces, std::move(mu), eta, std::move(delta), eps);
}

GradedCenter graded_center_data(const FrobeniusMaps& a, const SuperMap& gamma, int r) {
    if (r < 1) throw InvalidInput("r must be positive");
    if (!power(gamma, r).is_identity()) {
        throw InvalidInput("gamma^" + std::to_string(r) + " is not the identity");
    }
    GradedCenter gc;
    gc.gamma = gamma;
    for (int k = 0; k < r; ++k) {
        SuperMap p = twisted_center_projector(a, gamma, r, k);
        try {
            gc.pieces.push_back(split_idempotent(p));
        } catch (const InvalidInput& e) {
            throw InvalidInput("twisted centre projector P_" + std::to_string(k) +
                               " is not idempotent: " + e.what());
        }
    }
    gc.algebra = lambda_from_pieces(a, gc.pieces);
    return gc;
}

GradedCenter graded_center_data(const FrobeniusAlgebraData& a, int r) {
    return graded_center_data(a.maps(), nakayama_gamma(a).map, r);
}

LambdaFrobenius graded_center(const FrobeniusAlgebraData& a, int r) {
    return graded_center_data(a, r).algebra;
}

bool nakayama_is_gamma(const GradedCenter& gc) {
    const LambdaFrobenius& alg = gc.algebra;
    for (int k = 0; k < alg.r(); ++k) {
        const SplitIdempotent& p = gc.pieces[static_cast<std::size_t>(k)];
        SuperMap restricted = compose(p.projection, compose(gc.gamma, p.inclusion));
        if (nakayama(alg, k) != restricted) return false;
    }
    return true;
}

namespace {

SuperMap vector_map(const SuperSpace& s, const SuperSpace& t, const Matrix& m) {
    return SuperMap(s, t, 0, m);
}

// Multiplication from a rule giving, for basis indices (i, j), the product
// as a coefficient and a target index (or none).
template <class Rule>
SuperMap mult_from(const SuperSpace& v, Rule rule) {
    const std::size_t n = v.dim();
    const auto pos = tensor_position(v, v);
    Matrix m(n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto [coeff, k] = rule(i, j);
            if (!coeff.is_zero()) m(k, pos[i * n + j]) += coeff;
        }
    return SuperMap(tensor_space(v, v), v, 0, m);
}

Matrix basis_row(std::size_t n, std::size_t k, const CycScalar& value) {
    Matrix m(1, n);
    m(0, k) = value;
    return m;
}

FrobeniusAlgebraData group_algebra(int n) {
    if (n < 1) throw InvalidInput("group algebra needs n >= 1");
    const SuperSpace v{static_cast<std::size_t>(n), 0};
    SuperMap mult = mult_from(v, [n](std::size_t i, std::size_t j) {
        return std::pair<CycScalar, std::size_t>(CycScalar(1), (i + j) % static_cast<std::size_t>(n));
    });
    Matrix unit(v.dim(), 1);
    unit(0, 0) = CycScalar(1);
    return FrobeniusAlgebraData(v, mult, vector_map(kUnit, v, unit),
                                vector_map(v, kUnit, basis_row(v.dim(), 0, CycScalar(n))));
}

FrobeniusAlgebraData matrix_algebra(int n) {
    if (n < 1) throw InvalidInput("matrix algebra needs n >= 1");
    const auto un = static_cast<std::size_t>(n);
    const SuperSpace v{un * un, 0};
    // Basis E_{pq} at index p * n + q.
    SuperMap mult = mult_from(v, [un](std::size_t i, std::size_t j) {
        const std::size_t p = i / un, q = i % un, s = j / un, t = j % un;
        return std::pair<CycScalar, std::size_t>(CycScalar(q == s ? 1 : 0), p * un + t);
    });
    Matrix unit(v.dim(), 1), counit(1, v.dim());
    for (std::size_t p = 0; p < un; ++p) {
        unit(p * un + p, 0) = CycScalar(1);
        counit(0, p * un + p) = CycScalar(n);
    }
    return FrobeniusAlgebraData(v, mult, vector_map(kUnit, v, unit), vector_map(v, kUnit, counit));
}

FrobeniusAlgebraData clifford1() {
    const SuperSpace v{1, 1};
    SuperMap mult = mult_from(v, [](std::size_t i, std::size_t j) {
        return std::pair<CycScalar, std::size_t>(CycScalar(1), (i + j) % 2);
    });
    Matrix unit(2, 1);
    unit(0, 0) = CycScalar(1);
    return FrobeniusAlgebraData(v, mult, vector_map(kUnit, v, unit),
                                vector_map(v, kUnit, basis_row(2, 0, CycScalar(2))));
}

}  // namespace

FrobeniusAlgebraData builtin(const std::string& name) {
    static const std::regex group(R"(group_algebra_Z(\d+))"), mat(R"(matrix_algebra_(\d+))");
    std::smatch m;
    if (name == "trivial") return group_algebra(1);
    if (name == "clifford1") return clifford1();
    if (std::regex_match(name, m, group)) return group_algebra(std::stoi(m[1]));
    if (std::regex_match(name, m, mat)) return matrix_algebra(std::stoi(m[1]));
    throw InvalidInput("unknown builtin '" + name + "'; known: trivial, group_algebra_Z<n>, " +
                       "clifford1, matrix_algebra_<n>");
}

std::vector<std::string> builtin_names() {
    return {"trivial", "group_algebra_Z2", "group_algebra_Z3", "clifford1", "matrix_algebra_2"};
}

}  // namespace rspin
