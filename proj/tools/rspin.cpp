// Command-line front end: validation, Nakayama data, torus and surface
// invariants, and the Landau-Ginzburg computations.

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rspin/errors.hpp"
#include "rspin/io.hpp"
#include "rspin/landau_ginzburg.hpp"
#include "rspin/surface_eval.hpp"

using namespace rspin;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string builtin_name, file;
    int r = 0;
    bool json = false;
    // torus
    bool all_divisors = false;
    std::vector<long> torus_ab;
    // surface
    int genus = -1;
    std::string holonomies;
    bool enumerate = false;
    // LG
    std::string poly, group, weights;
    long twist = 0;
    bool shift = false;
};

// Output collected for both the text and the JSON form.
struct Report {
    std::string command;
    Json inputs = Json::object();
    Json results = Json::object();
    std::ostringstream text;
    int status = kOk;
};

Json convention_flags() {
    return {{"nakayama", "mirrored-crossing"},
            {"torus_sign", "+"},
            {"lg_values", "up-to-sign"},
            {"sector_label", "g twists x' by zeta^(-w g)"}};
}

Json space_json(const SuperSpace& s) { return Json::array({s.even, s.odd}); }

Json matrix_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        out.push_back(row);
    }
    return out;
}

// |v| when v is rational, v otherwise.
std::string unsigned_str(const CycScalar& v) {
    if (v.is_rational() && v.to_rational() < 0) return (-v).str();
    return v.str();
}

// ---- algebra inputs ----

struct LoadedAlgebra {
    std::optional<FrobeniusAlgebraData> frobenius;
    std::optional<GradedCenter> center;
    std::optional<LambdaFrobenius> lambda;
    const LambdaFrobenius& algebra() const { return center ? center->algebra : *lambda; }
};

int default_r(const FrobeniusAlgebraData& a) { return automorphism_order(nakayama_gamma(a).map); }

LoadedAlgebra load(const Options& o, Report& rep) {
    if (o.builtin_name.empty() == o.file.empty()) throw UsageError("give exactly one of --builtin or --file");
    LoadedAlgebra out;
    if (!o.builtin_name.empty()) {
        rep.inputs["builtin"] = o.builtin_name;
        try {
            out.frobenius = builtin(o.builtin_name);
        } catch (const InvalidInput& e) {
            throw UsageError(e.what());
        }
    } else {
        rep.inputs["file"] = o.file;
        AlgebraFile f = load_algebra_file(o.file);
        if (auto* l = std::get_if<LambdaFrobenius>(&f)) {
            if (o.r != 0 && o.r != l->r())
                throw UsageError("-r " + std::to_string(o.r) + " conflicts with r = " + std::to_string(l->r()) +
                                 " in " + o.file);
            out.lambda = *l;
        } else {
            out.frobenius = std::get<FrobeniusAlgebraData>(f);
        }
    }
    if (out.frobenius) {
        const int r = o.r != 0 ? o.r : default_r(*out.frobenius);
        out.center = graded_center_data(*out.frobenius, r);
    }
    rep.inputs["r"] = out.algebra().r();
    return out;
}

void put_spaces(const LambdaFrobenius& alg, Report& rep) {
    Json spaces = Json::array();
    rep.text << "circle spaces:";
    for (int a = 0; a < alg.r(); ++a) {
        spaces.push_back(space_json(alg.space(a)));
        rep.text << " C" << a << "=" << alg.space(a).str();
    }
    rep.text << "\n";
    rep.results["spaces"] = spaces;
}

std::string indices_str(const std::vector<int>& ix) {
    std::string s = "(";
    for (std::size_t i = 0; i < ix.size(); ++i) s += (i ? "," : "") + std::to_string(ix[i]);
    return s + ")";
}

void run_check(const Options& o, Report& rep) {
    const LoadedAlgebra la = load(o, rep);
    const LambdaFrobenius& alg = la.algebra();
    put_spaces(alg, rep);
    const ValidationReport vr = validate(alg);
    rep.text << vr.summary();
    Json families = Json::object();
    for (const auto& fam : relation_families()) {
        std::size_t n = 0, bad = 0;
        for (const auto& c : vr.checks)
            if (c.family == fam) ++n, bad += c.pass ? 0 : 1;
        families[fam] = {{"checked", n}, {"failed", bad}};
    }
    Json failures = Json::array();
    for (const auto* c : vr.failures()) {
        failures.push_back({{"family", c->family}, {"relation", c->relation}, {"indices", c->indices}});
        rep.text << "FAILED " << c->relation << " " << indices_str(c->indices) << "\n";
    }
    rep.results["families"] = families;
    rep.results["failures"] = failures;
    rep.results["ok"] = vr.ok();
    rep.text << (vr.ok() ? "all relations hold\n" : "validation failed\n");
    if (!vr.ok()) rep.status = kFailed;
}

void run_nakayama(const Options& o, Report& rep) {
    const LoadedAlgebra la = load(o, rep);
    const LambdaFrobenius& alg = la.algebra();
    const int r = alg.r();
    put_spaces(alg, rep);
    Json per = Json::array();
    bool ok = true;
    for (int a = 0; a < r; ++a) {
        const SuperMap n = nakayama(alg, a);
        const bool twist = power(n, a).is_identity();
        const bool deck = power(n, r).is_identity();
        ok = ok && twist && deck;
        Json e = {{"a", a}, {"matrix", matrix_json(n.matrix())}, {"twist", twist}, {"deck", deck}};
        rep.text << "N" << a << " = " << n.matrix().str() << "  N^a=id: " << (twist ? "yes" : "no")
                 << "  N^r=id: " << (deck ? "yes" : "no") << "\n";
        per.push_back(e);
    }
    rep.results["nakayama"] = per;
    if (la.center) {
        const bool match = nakayama_is_gamma(*la.center);
        ok = ok && match;
        rep.results["gamma"] = matrix_json(la.center->gamma.matrix());
        rep.results["matches_gamma"] = match;
        rep.text << "gamma = " << la.center->gamma.matrix().str() << "\n"
                 << "N_a = gamma restricted: " << (match ? "yes" : "no") << "\n";
    }
    rep.results["ok"] = ok;
    if (!ok) rep.status = kFailed;
}

void require_valid(const LambdaFrobenius& alg) {
    const ValidationReport vr = validate(alg);
    if (!vr.ok()) {
        const auto* c = vr.failures().front();
        throw InvalidInput("algebra fails " + c->relation + " " + indices_str(c->indices));
    }
}

void run_torus(const Options& o, Report& rep) {
    const LoadedAlgebra la = load(o, rep);
    const LambdaFrobenius& alg = la.algebra();
    require_valid(alg);
    const int r = alg.r();
    Json rows = Json::array();
    if (o.all_divisors) {
        if (!o.torus_ab.empty()) throw UsageError("--all-divisors takes no holonomies");
        rep.inputs["all_divisors"] = true;
        rep.text << "d\tT(d,0)\tqdim C_d\n";
        for (const auto& [d, v] : all_torus_invariants(alg)) {
            const CycScalar q = quantum_dimension(alg.space(d));
            rows.push_back({{"d", d}, {"value", v.str()}, {"quantum_dimension", q.str()}});
            rep.text << d << "\t" << v << "\t" << q << "\n";
        }
    } else {
        if (o.torus_ab.size() != 2) throw UsageError("torus needs holonomies A B or --all-divisors");
        const RSpinTorus t{r, o.torus_ab[0], o.torus_ab[1]};
        rep.inputs["a"] = t.a;
        rep.inputs["b"] = t.b;
        const CycScalar v = evaluate_torus(alg, t);
        const int d = torus_normal_form(t);
        rows.push_back({{"a", t.a}, {"b", t.b}, {"normal_form", d}, {"value", v.str()}});
        rep.text << "T(" << t.a << "," << t.b << ") ~ T(" << d << ",0) = " << v << "\n";
    }
    rep.results["tori"] = rows;
}

// "a1,b1;a2,b2" or "a1,b1 a2,b2".
std::vector<std::pair<long, long>> parse_holonomies(const std::string& s) {
    std::string spaced = s;
    std::replace(spaced.begin(), spaced.end(), ';', ' ');
    std::vector<std::pair<long, long>> out;
    std::istringstream ss(spaced);
    std::string item;
    while (ss >> item) {
        long a = 0, b = 0;
        char comma = 0;
        std::istringstream is(item);
        if (!(is >> a >> comma >> b) || comma != ',' || !(is >> std::ws).eof())
            throw UsageError("holonomies must look like \"a1,b1;a2,b2\", got \"" + s + "\"");
        out.emplace_back(a, b);
    }
    return out;
}

void run_surface(const Options& o, Report& rep) {
    const LoadedAlgebra la = load(o, rep);
    const LambdaFrobenius& alg = la.algebra();
    require_valid(alg);
    const int r = alg.r();
    if (o.genus < 0) throw UsageError("surface needs --genus");
    rep.inputs["genus"] = o.genus;
    if (o.enumerate) {
        if (!o.holonomies.empty()) throw UsageError("--enumerate takes no --holonomies");
        rep.inputs["enumerate"] = true;
        std::vector<std::pair<long, long>> h(static_cast<std::size_t>(o.genus), {0, 0});
        std::map<std::string, std::size_t> counts;
        Json rows = Json::array();
        while (true) {
            const CycScalar v = evaluate_surface(alg, RSpinClosedSurface{r, o.genus, h});
            ++counts[v.str()];
            Json hj = Json::array();
            for (const auto& [a, b] : h) hj.push_back({a, b});
            rows.push_back({{"holonomies", hj}, {"value", v.str()}});
            std::size_t k = 0;
            for (; k < h.size(); ++k) {
                if (++h[k].second < r) break;
                h[k].second = 0;
                if (++h[k].first < r) break;
                h[k].first = 0;
            }
            if (k == h.size()) break;
        }
        Json cj = Json::object();
        rep.text << "value\tcount\n";
        for (const auto& [v, c] : counts) {
            cj[v] = c;
            rep.text << v << "\t" << c << "\n";
        }
        rep.results["surfaces"] = rows;
        rep.results["value_counts"] = cj;
        return;
    }
    const auto h = parse_holonomies(o.holonomies);
    Json hj = Json::array();
    for (const auto& [a, b] : h) hj.push_back({a, b});
    rep.inputs["holonomies"] = hj;
    const CycScalar v = evaluate_surface(alg, RSpinClosedSurface{r, o.genus, h});
    rep.results["value"] = v.str();
    rep.text << "Z = " << v << "\n";
}

// ---- LG inputs ----

Poly load_poly(const Options& o, Report& rep) {
    if (o.poly.empty()) throw UsageError("missing polynomial");
    Poly w;
    try {
        w = parse_poly(o.poly);
    } catch (const ParseError& e) {
        throw UsageError(e.what());
    }
    rep.inputs["potential"] = w.str();
    return w;
}

GroupAction load_action(const Options& o, const Poly& w, Report& rep) {
    if (o.group.size() < 2 || o.group[0] != 'Z') throw UsageError("--group must look like Z5");
    int r = 0;
    try {
        std::size_t used = 0;
        r = std::stoi(o.group.substr(1), &used);
        if (used + 1 != o.group.size() || r < 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw UsageError("--group must look like Z5, got " + o.group);
    }
    if (o.r != 0 && o.r != r) throw UsageError("-r conflicts with --group");
    const auto& vars = w.variables();
    std::vector<int> wts;
    if (o.weights.empty()) {
        wts.assign(vars.size(), 1);
    } else {
        std::stringstream ss(o.weights);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                wts.push_back(std::stoi(item));
            } catch (const std::exception&) {
                throw UsageError("--weights must be integers, got " + o.weights);
            }
        }
    }
    if (wts.size() != vars.size())
        throw UsageError("--weights needs one entry per variable (" + std::to_string(vars.size()) + ")");
    GroupAction act{r, {}};
    Json wj = Json::object();
    for (std::size_t i = 0; i < vars.size(); ++i) {
        act.weights[vars[i]] = mod(wts[i], r);
        wj[vars[i]] = act.weights[vars[i]];
    }
    rep.inputs["group"] = "Z" + std::to_string(r);
    rep.inputs["weights"] = wj;
    return act;
}

void run_lg_jacobi(const Options& o, Report& rep) {
    const Poly w = load_poly(o, rep);
    const JacobiAlgebra j = jacobi(w);
    Json gb = Json::array();
    for (const auto& g : j.groebner_basis) gb.push_back(g.str());
    Json basis = Json::array();
    for (std::size_t i = 0; i < j.monomial_basis.size(); ++i)
        basis.push_back(Poly::monomial(j.potential.variables(), j.monomial_basis[i]).str());
    rep.results["dim"] = j.monomial_basis.size();
    rep.results["basis"] = basis;
    rep.results["groebner_basis"] = gb;
    rep.text << "dim " << j.monomial_basis.size() << ", basis: " << j.basis_str() << "\n";
}

std::string class_str(const HomClass& c) {
    std::ostringstream os;
    os << (c.parity ? "odd" : "even") << " degree " << c.degree;
    return os.str();
}

void run_lg_hom(const Options& o, Report& rep) {
    const Poly w = load_poly(o, rep);
    MatrixFactorization target = identity_mf(w);
    if (o.twist != 0) {
        const GroupAction act = load_action(o, w, rep);
        rep.inputs["twist"] = o.twist;
        target = twisted_identity(w, act, o.twist);
    } else if (!o.group.empty()) {
        load_action(o, w, rep);
    }
    if (o.shift) target = shift(target);
    rep.inputs["shift"] = o.shift;
    const HomCohomology h = hom_cohomology(identity_mf(w), target);
    Json classes = Json::array();
    for (const auto& c : h.classes()) {
        std::ostringstream deg;
        deg << c.degree;
        classes.push_back({{"parity", c.parity}, {"degree", deg.str()}});
    }
    rep.results["dims"] = space_json(h.space());
    rep.results["classes"] = classes;
    rep.text << "Hom = " << h.space().str() << "\n";
    for (const auto& c : h.classes()) rep.text << "  " << class_str(c) << "\n";
}

void run_lg_orbifold(const Options& o, Report& rep) {
    const Poly w = load_poly(o, rep);
    const GroupAction act = load_action(o, w, rep);
    const OrbifoldAlgebra orb = orbifold_algebra(w, act);
    Json sectors = Json::array();
    rep.text << "A = " << orb.maps.space.str() << "\n";
    for (std::size_t g = 0; g < orb.sectors.size(); ++g) {
        sectors.push_back(space_json(orb.sectors[g].space()));
        rep.text << "  H" << g << " = " << orb.sectors[g].space().str() << "\n";
    }
    Json checks = Json::object();
    for (const auto& [n, ok] : orb.checks) {
        checks[n] = ok;
        rep.text << n << ": " << (ok ? "yes" : "no") << "\n";
    }
    const SuperMap naka = nakayama_gamma(orb.maps).map;
    rep.results["space"] = space_json(orb.maps.space);
    rep.results["sectors"] = sectors;
    rep.results["checks"] = checks;
    rep.results["gamma"] = matrix_json(orb.gamma.matrix());
    rep.results["nakayama"] = matrix_json(naka.matrix());
    rep.results["gamma_is_automorphism"] = orb.gamma_is_automorphism;
    rep.results["gamma_order_divides_r"] = orb.gamma_order_divides_r;
    rep.results["gamma_is_nakayama"] = orb.gamma_is_nakayama;
    rep.results["gamma_inverse_is_nakayama"] = orb.gamma_inverse_is_nakayama;
    rep.text << "gamma = " << orb.gamma.matrix().str() << "\n"
             << "Nakayama = " << naka.matrix().str() << "\n"
             << "gamma automorphism: " << (orb.gamma_is_automorphism ? "yes" : "no")
             << ", gamma^r = id: " << (orb.gamma_order_divides_r ? "yes" : "no")
             << ", Nakayama = gamma: " << (orb.gamma_is_nakayama ? "yes" : "no")
             << ", Nakayama = gamma^-1: " << (orb.gamma_inverse_is_nakayama ? "yes" : "no") << "\n";
}

void run_lg_circle_spaces(const Options& o, Report& rep) {
    const Poly w = load_poly(o, rep);
    const GroupAction act = load_action(o, w, rep);
    const CircleSpaces cs = lg_circle_spaces(w, act);
    Json rows = Json::array();
    rep.text << "a\tC_a\tshifted\tcharacter\n";
    for (int a = 0; a < cs.r; ++a) {
        const auto k = static_cast<std::size_t>(a);
        rows.push_back({{"a", a},
                        {"image", space_json(cs.images[k])},
                        {"table", space_json(cs.table[k])},
                        {"character", space_json(cs.character[k])}});
        rep.text << a << "\t" << cs.images[k].str() << "\t" << cs.table[k].str() << "\t"
                 << cs.character[k].str() << "\n";
    }
    rep.results["circle_spaces"] = rows;
    rep.results["routes_agree"] = cs.agree;
    if (!cs.agree) {
        rep.text << cs.mismatch;
        rep.results["mismatch"] = cs.mismatch;
        rep.status = kFailed;
    }
    const ValidationReport vr = validate(cs.algebra);
    rep.results["valid"] = vr.ok();
    rep.text << (vr.ok() ? "all relations hold\n" : "validation failed\n");
    if (!vr.ok()) {
        for (const auto* c : vr.failures()) rep.text << "FAILED " << c->relation << " " << indices_str(c->indices) << "\n";
        rep.status = kFailed;
        return;
    }
    Json tori = Json::array();
    rep.text << "d\t|T(d,0)|\n";
    for (const auto& [d, v] : all_torus_invariants(cs.algebra)) {
        tori.push_back({{"d", d}, {"value", v.str()}, {"up_to_sign", unsigned_str(v)}});
        rep.text << d << "\t" << unsigned_str(v) << "\n";
    }
    rep.results["tori"] = tori;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"r-spin TQFT invariants from Frobenius algebra data and Landau-Ginzburg models"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "Machine-readable output");

    auto algebra_opts = [&](CLI::App* sub) {
        sub->add_option("--builtin", o.builtin_name, "trivial, group_algebra_Z<n>, clifford1, matrix_algebra_<n>");
        sub->add_option("--file", o.file, "JSON algebra file");
        sub->add_option("-r", o.r, "r (default: order of the Nakayama automorphism)")->check(CLI::PositiveNumber);
        sub->add_flag("--json", o.json, "Machine-readable output");
    };
    auto lg_opts = [&](CLI::App* sub, bool needs_group) {
        sub->add_option("potential", o.poly, "Polynomial, e.g. \"x^3 + y^3\"")->required();
        auto* g = sub->add_option("--group", o.group, "Cyclic group, e.g. Z5");
        if (needs_group) g->required();
        sub->add_option("--weights", o.weights, "Comma-separated weights in sorted variable order (default all 1)");
        sub->add_option("-r", o.r, "Must agree with --group")->check(CLI::PositiveNumber);
        sub->add_flag("--json", o.json, "Machine-readable output");
    };

    std::map<std::string, void (*)(const Options&, Report&)> handlers{
        {"check", run_check},       {"nakayama", run_nakayama},       {"torus", run_torus},
        {"surface", run_surface},   {"lg-jacobi", run_lg_jacobi},     {"lg-hom", run_lg_hom},
        {"lg-orbifold", run_lg_orbifold}, {"lg-circle-spaces", run_lg_circle_spaces}};

    algebra_opts(app.add_subcommand("check", "Validate every closed Lambda_r-Frobenius relation"));
    algebra_opts(app.add_subcommand("nakayama", "Nakayama automorphisms N_a and their twist/deck checks"));
    auto* torus = app.add_subcommand("torus", "Torus invariants T(a,b)");
    algebra_opts(torus);
    torus->add_flag("--all-divisors", o.all_divisors, "T(d,0) for every divisor d of r");
    torus->add_option("holonomies", o.torus_ab, "A B")->expected(0, 2);
    auto* surface = app.add_subcommand("surface", "Closed surface invariants");
    algebra_opts(surface);
    surface->add_option("--genus", o.genus, "Genus")->check(CLI::NonNegativeNumber);
    surface->add_option("--holonomies", o.holonomies, "\"a1,b1;a2,b2\" or \"a1,b1 a2,b2\"");
    surface->add_flag("--enumerate", o.enumerate, "Evaluate every holonomy assignment");
    auto* jac = app.add_subcommand("lg-jacobi", "Jacobi algebra of a potential");
    jac->add_option("potential", o.poly, "Polynomial")->required();
    jac->add_flag("--json", o.json, "Machine-readable output");
    auto* hom = app.add_subcommand("lg-hom", "Hom(I_W, target) with target the (twisted, shifted) identity");
    lg_opts(hom, false);
    hom->add_option("--twist", o.twist, "Group element g for the target _g(I_W)");
    hom->add_flag("--shift", o.shift, "Shift the target by one");
    lg_opts(app.add_subcommand("lg-orbifold", "Orbifold algebra (+)_g Hom(I_W, _g I_W)"), true);
    lg_opts(app.add_subcommand("lg-circle-spaces", "Circle spaces and torus invariants of the LG theory"), true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    Report rep;
    rep.command = app.get_subcommands().front()->get_name();
    try {
        if (rep.command == "lg-hom" && o.twist != 0 && o.group.empty())
            throw UsageError("--twist needs --group");
        handlers.at(rep.command)(o, rep);
    } catch (const UsageError& e) {
        std::cerr << "rspin: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "rspin: " << e.what() << "\n";
        return kUsage;
    } catch (const Inconclusive& e) {
        std::cerr << "rspin: inconclusive: " << e.what() << "\n";
        return kFailed;
    } catch (const Error& e) {
        std::cerr << "rspin: " << e.what() << "\n";
        return kFailed;
    }

    if (o.json) {
        Json out;
        out["command"] = rep.command;
        out["inputs"] = rep.inputs;
        out["results"] = rep.results;
        out["convention_flags"] = convention_flags();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << rep.text.str();
    }
    return rep.status;
}
