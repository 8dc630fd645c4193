#include "rspin/io.hpp"

#include <fstream>
#include <optional>

namespace rspin {

namespace {

struct Writer {
    int order;

    Json scalar(const CycScalar& s) const { return s.embed(order).str(); }

    Json column(const Matrix& m, std::size_t c) const {
        Json out = Json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(scalar(m(i, c)));
        return out;
    }

    Json row(const Matrix& m) const {
        Json out = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(scalar(m(0, j)));
        return out;
    }

    // T[i][j] = f(e_i (x) e_j) for f: U (x) V -> W.
    Json product(const SuperMap& f, const SuperSpace& u, const SuperSpace& v) const {
        const auto pos = tensor_position(u, v);
        Json t = Json::array();
        for (std::size_t i = 0; i < u.dim(); ++i) {
            Json row = Json::array();
            for (std::size_t j = 0; j < v.dim(); ++j) row.push_back(column(f.matrix(), pos[i * v.dim() + j]));
            t.push_back(row);
        }
        return t;
    }

    // T[k][i][j] = coefficient of e_i (x) e_j in f(e_k), f: W -> U (x) V.
    Json coproduct(const SuperMap& f, const SuperSpace& u, const SuperSpace& v) const {
        const auto pos = tensor_position(u, v);
        Json t = Json::array();
        for (std::size_t k = 0; k < f.source().dim(); ++k) {
            Json block = Json::array();
            for (std::size_t i = 0; i < u.dim(); ++i) {
                Json row = Json::array();
                for (std::size_t j = 0; j < v.dim(); ++j)
                    row.push_back(scalar(f.matrix()(pos[i * v.dim() + j], k)));
                block.push_back(row);
            }
            t.push_back(block);
        }
        return t;
    }
};

Json space_json(const SuperSpace& s) { return Json::array({s.even, s.odd}); }

struct Reader {
    int order;

    [[noreturn]] static void bad(const std::string& what) { throw ParseError(what); }

    const Json& field(const Json& j, const char* key) const {
        if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
        return j.at(key);
    }

    CycScalar scalar(const Json& j) const {
        if (j.is_string()) return parse_scalar(j.get<std::string>(), order);
        if (j.is_number_integer()) return CycScalar(order, Rational(j.get<long>()));
        bad("scalar must be a string or an integer, got " + j.dump());
    }

    SuperSpace space(const Json& j) const {
        if (!j.is_array() || j.size() != 2 || !j[0].is_number_unsigned() || !j[1].is_number_unsigned())
            bad("space must be [even, odd], got " + j.dump());
        return {j[0].get<std::size_t>(), j[1].get<std::size_t>()};
    }

    void expect_size(const Json& j, std::size_t n, const std::string& what) const {
        if (!j.is_array() || j.size() != n)
            bad(what + ": expected an array of length " + std::to_string(n) + ", got " + j.dump());
    }

    Matrix column(const Json& j, std::size_t n, const std::string& what) const {
        expect_size(j, n, what);
        Matrix m(n, 1);
        for (std::size_t i = 0; i < n; ++i) m(i, 0) = scalar(j[i]);
        return m;
    }

    SuperMap vector_in(const Json& j, const SuperSpace& s, const std::string& what) const {
        return SuperMap(kUnit, s, 0, column(j, s.dim(), what));
    }

    SuperMap covector_on(const Json& j, const SuperSpace& s, const std::string& what) const {
        return SuperMap(s, kUnit, 0, column(j, s.dim(), what).transpose());
    }

    SuperMap product(const Json& t, const SuperSpace& u, const SuperSpace& v, const SuperSpace& w,
                     const std::string& what) const {
        const auto pos = tensor_position(u, v);
        Matrix m(w.dim(), u.dim() * v.dim());
        expect_size(t, u.dim(), what);
        for (std::size_t i = 0; i < u.dim(); ++i) {
            expect_size(t[i], v.dim(), what);
            for (std::size_t j = 0; j < v.dim(); ++j)
                m.set_block(0, pos[i * v.dim() + j], column(t[i][j], w.dim(), what));
        }
        return SuperMap(tensor_space(u, v), w, 0, m);
    }

    SuperMap coproduct(const Json& t, const SuperSpace& w, const SuperSpace& u, const SuperSpace& v,
                       const std::string& what) const {
        const auto pos = tensor_position(u, v);
        Matrix m(u.dim() * v.dim(), w.dim());
        expect_size(t, w.dim(), what);
        for (std::size_t k = 0; k < w.dim(); ++k) {
            expect_size(t[k], u.dim(), what);
            for (std::size_t i = 0; i < u.dim(); ++i) {
                expect_size(t[k][i], v.dim(), what);
                for (std::size_t j = 0; j < v.dim(); ++j) m(pos[i * v.dim() + j], k) = scalar(t[k][i][j]);
            }
        }
        return SuperMap(w, tensor_space(u, v), 0, m);
    }
};

int read_order(const Json& j) {
    if (!j.contains("field_order")) return 1;
    const Json& o = j.at("field_order");
    if (!o.is_number_integer() || o.get<long>() < 1) throw ParseError("field_order must be a positive integer");
    return static_cast<int>(o.get<long>());
}

int maps_order(const FrobeniusMaps& a) {
    int o = field_order(a.mult.matrix());
    o = field_order(a.unit.matrix(), o);
    o = field_order(a.counit.matrix(), o);
    return field_order(a.comult.matrix(), o);
}

}  // namespace

Json scalar_json(const CycScalar& s) { return s.str(); }

Json to_json(const FrobeniusMaps& a) {
    const Writer w{maps_order(a)};
    Json j;
    j["kind"] = "frobenius_algebra";
    j["field_order"] = w.order;
    j["space"] = space_json(a.space);
    j["mult"] = w.product(a.mult, a.space, a.space);
    j["unit"] = w.column(a.unit.matrix(), 0);
    j["counit"] = w.row(a.counit.matrix());
    j["comult"] = w.coproduct(a.comult, a.space, a.space);
    return j;
}

Json to_json(const LambdaFrobenius& alg) {
    const Writer w{alg.field_order()};
    const int r = alg.r();
    Json j;
    j["kind"] = "lambda_frobenius";
    j["r"] = r;
    j["field_order"] = w.order;
    Json spaces = Json::array();
    for (const auto& s : alg.spaces()) spaces.push_back(space_json(s));
    j["spaces"] = spaces;
    Json mu = Json::array(), delta = Json::array();
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) {
            mu.push_back({{"a", a}, {"b", b}, {"constants", w.product(alg.mu(a, b), alg.space(a), alg.space(b))}});
            delta.push_back(
                {{"a", a}, {"b", b}, {"constants", w.coproduct(alg.delta(a, b), alg.space(a), alg.space(b))}});
        }
    j["mu"] = mu;
    j["eta"] = w.column(alg.eta().matrix(), 0);
    j["delta"] = delta;
    j["eps"] = w.row(alg.eps().matrix());
    return j;
}

FrobeniusAlgebraData frobenius_from_json(const Json& j) {
    const Reader rd{read_order(j)};
    const SuperSpace v = rd.space(rd.field(j, "space"));
    SuperMap mult = rd.product(rd.field(j, "mult"), v, v, v, "mult");
    SuperMap unit = rd.vector_in(rd.field(j, "unit"), v, "unit");
    SuperMap counit = rd.covector_on(rd.field(j, "counit"), v, "counit");
    if (!j.contains("comult")) return FrobeniusAlgebraData(v, mult, unit, counit);
    SuperMap comult = rd.coproduct(j.at("comult"), v, v, v, "comult");
    return FrobeniusAlgebraData(FrobeniusMaps{v, mult, unit, counit, comult});
}

LambdaFrobenius lambda_from_json(const Json& j) {
    const Reader rd{read_order(j)};
    const Json& rj = rd.field(j, "r");
    if (!rj.is_number_integer() || rj.get<long>() < 1) throw ParseError("r must be a positive integer");
    const int r = static_cast<int>(rj.get<long>());
    const Json& sj = rd.field(j, "spaces");
    rd.expect_size(sj, static_cast<std::size_t>(r), "spaces");
    std::vector<SuperSpace> spaces;
    for (const auto& s : sj) spaces.push_back(rd.space(s));
    auto sp = [&](long a) { return spaces[static_cast<std::size_t>(mod(a, r))]; };
    const auto n = static_cast<std::size_t>(r);
    std::vector<std::optional<SuperMap>> mu(n * n), delta(n * n);
    auto entry_index = [&](const Json& e, const char* what) {
        const Json& a = rd.field(e, "a");
        const Json& b = rd.field(e, "b");
        if (!a.is_number_integer() || !b.is_number_integer()) throw ParseError(std::string(what) + ": bad index");
        return std::pair<long, long>(a.get<long>(), b.get<long>());
    };
    for (const auto& e : rd.field(j, "mu")) {
        auto [a, b] = entry_index(e, "mu");
        mu[static_cast<std::size_t>(mod(a, r) * r + mod(b, r))] =
            rd.product(rd.field(e, "constants"), sp(a), sp(b), sp(a + b - 1),
                       "mu(" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    for (const auto& e : rd.field(j, "delta")) {
        auto [a, b] = entry_index(e, "delta");
        delta[static_cast<std::size_t>(mod(a, r) * r + mod(b, r))] =
            rd.coproduct(rd.field(e, "constants"), sp(a + b + 1), sp(a), sp(b),
                         "delta(" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    std::vector<SuperMap> mus, deltas;
    for (std::size_t k = 0; k < n * n; ++k) {
        const std::string ix = "(" + std::to_string(k / n) + "," + std::to_string(k % n) + ")";
        if (!mu[k]) throw ParseError("missing mu" + ix);
        if (!delta[k]) throw ParseError("missing delta" + ix);
        mus.push_back(*mu[k]);
        deltas.push_back(*delta[k]);
    }
    SuperMap eta = rd.vector_in(rd.field(j, "eta"), sp(1), "eta");
    SuperMap eps = rd.covector_on(rd.field(j, "eps"), sp(-1), "eps");
    return LambdaFrobenius(r, spaces, std::move(mus), eta, std::move(deltas), eps);
}

AlgebraFile load_algebra(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        throw ParseError("algebra file needs a string field 'kind'");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "frobenius_algebra") return frobenius_from_json(j);
    if (kind == "lambda_frobenius") return lambda_from_json(j);
    throw ParseError("unknown kind '" + kind + "'; expected frobenius_algebra or lambda_frobenius");
}

AlgebraFile load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return load_algebra(j);
}

}  // namespace rspin
