// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rspin/constructors.hpp"
#include "rspin/landau_ginzburg.hpp"
#include "rspin/surface_eval.hpp"

using namespace rspin;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream why;
    void require(bool ok, const std::string& what) {
        if (!ok && pass) why << what;
        pass = pass && ok;
    }
};

struct Case {
    std::string name;
    int r;
};

// Builtins with every r in 1..8 for which gamma^r = id.
std::vector<Case> builtin_cases(const std::vector<std::string>& names, int max_r) {
    std::vector<Case> out;
    for (const auto& n : names) {
        const int order = automorphism_order(nakayama_gamma(builtin(n)).map);
        for (int r = 1; r <= max_r; ++r)
            if (r % order == 0) out.push_back({n, r});
    }
    return out;
}

std::string label(const Case& c) { return c.name + " r=" + std::to_string(c.r); }

Poly xr(int r) { return Poly::variable("x").pow(r); }
GroupAction zr(int r) { return GroupAction{r, {{"x", 1}}}; }

void axioms(Outcome& o) {
    for (const Case& c : builtin_cases({"trivial", "group_algebra_Z2", "group_algebra_Z3", "clifford1"}, 6)) {
        const ValidationReport rep = validate(graded_center(builtin(c.name), c.r));
        std::set<std::string> families;
        for (const auto& ch : rep.checks) families.insert(ch.family);
        o.require(families.size() == relation_families().size(), label(c) + ": missing relation family");
        o.require(rep.ok(), label(c) + ": " + rep.summary());
    }
    const LambdaFrobenius good = graded_center(builtin("group_algebra_Z2"), 2);
    Matrix m = good.mu(0, 0).matrix();
    m(0, 0) = m(0, 0) + CycScalar(1);
    const LambdaFrobenius bad =
        good.with_mu(0, 0, SuperMap(good.mu(0, 0).source(), good.mu(0, 0).target(), 0, m));
    o.require(!validate(bad).ok(), "mutated multiplication still validates");
}

void torus_normal_form_check(Outcome& o) {
    for (const Case& c :
         builtin_cases({"trivial", "group_algebra_Z2", "group_algebra_Z3", "clifford1", "matrix_algebra_2"}, 8)) {
        const LambdaFrobenius alg = graded_center(builtin(c.name), c.r);
        if (!validate(alg).ok()) continue;
        for (long a = 0; a < c.r; ++a)
            for (long b = 0; b < c.r; ++b) {
                const RSpinTorus t{c.r, a, b};
                const CycScalar v = evaluate_torus(alg, t);
                const CycScalar w = evaluate_torus(alg, RSpinTorus{c.r, torus_normal_form(t), 0});
                o.require(v == w, label(c) + ": T(" + std::to_string(a) + "," + std::to_string(b) + ")");
            }
    }
}

void quantum_dimensions(Outcome& o) {
    for (const Case& c :
         builtin_cases({"trivial", "group_algebra_Z2", "group_algebra_Z3", "clifford1", "matrix_algebra_2"}, 8)) {
        const LambdaFrobenius alg = graded_center(builtin(c.name), c.r);
        for (const auto& [d, v] : all_torus_invariants(alg))
            o.require(v == quantum_dimension(alg.space(d)), label(c) + ": d=" + std::to_string(d));
    }
}

void lg_example(Outcome& o) {
    for (int r = 3; r <= 5; ++r) {
        const std::string at = "r=" + std::to_string(r) + ": ";
        const CircleSpaces cs = lg_circle_spaces(xr(r), zr(r));
        o.require(cs.agree, at + "routes disagree " + cs.mismatch);
        o.require(cs.table[0] == SuperSpace{static_cast<std::size_t>(r - 1), 0}, at + "C0");
        for (int a = 1; a < r; ++a)
            o.require(cs.table[static_cast<std::size_t>(a)] == shifted_space(SuperSpace{1, 0}, 1 - a),
                      at + "C" + std::to_string(a));
        o.require(validate(cs.algebra).ok(), at + "LG algebra fails validation");
        for (const auto& [d, v] : all_torus_invariants(cs.algebra)) {
            const CycScalar expect = d == r ? CycScalar(r - 1) : CycScalar(1);
            o.require(v == expect || v == -expect, at + "|T(" + std::to_string(d) + ",0)| = " + v.str());
        }
        std::set<std::string> values;
        for (long a = 0; a < r; ++a)
            for (long b = 0; b < r; ++b) values.insert(evaluate_torus(cs.algebra, RSpinTorus{r, a, b}).str());
        o.require(values.size() == 2, at + std::to_string(values.size()) + " torus classes");
    }
}

void lg_hom(Outcome& o) {
    for (int r = 3; r <= 5; ++r) {
        const std::string at = "r=" + std::to_string(r) + ": ";
        const auto m = static_cast<std::size_t>(r - 1);
        const MatrixFactorization id = identity_mf(xr(r));
        o.require(hom_cohomology(id, id).space() == SuperSpace{m, 0}, at + "End");
        o.require(hom_cohomology(id, shift(id)).space() == SuperSpace{0, m}, at + "Hom(I, I[1])");
        for (int g = 1; g < r; ++g)
            o.require(hom_cohomology(id, twisted_identity(xr(r), zr(r), g)).space() == SuperSpace{0, 1},
                      at + "twisted g=" + std::to_string(g));
    }
}

void nakayama_coherence(Outcome& o) {
    auto powers = [&](const LambdaFrobenius& alg, const std::string& what) {
        for (int a = 0; a < alg.r(); ++a) {
            const SuperMap n = nakayama(alg, a);
            o.require(power(n, a).is_identity(), what + ": N_a^a, a=" + std::to_string(a));
            o.require(power(n, alg.r()).is_identity(), what + ": N_a^r, a=" + std::to_string(a));
        }
    };
    for (const Case& c :
         builtin_cases({"trivial", "group_algebra_Z2", "group_algebra_Z3", "clifford1", "matrix_algebra_2"}, 6)) {
        const GradedCenter gc = graded_center_data(builtin(c.name), c.r);
        powers(gc.algebra, label(c));
        o.require(nakayama_is_gamma(gc), label(c) + ": N_a differs from gamma");
    }
    for (int r = 2; r <= 5; ++r) powers(lg_circle_spaces(xr(r), zr(r)).algebra, "LG r=" + std::to_string(r));
}

void genus_two(Outcome& o) {
    const LambdaFrobenius alg = graded_center(builtin("clifford1"), 2);
    std::set<std::string> values;
    for (int k = 0; k < 16; ++k) {
        const RSpinClosedSurface s{2, 2, {{k & 1, (k >> 1) & 1}, {(k >> 2) & 1, (k >> 3) & 1}}};
        values.insert(evaluate_surface(alg, s).str());
    }
    o.require(values.size() == 2, std::to_string(values.size()) + " genus-2 values");
    for (long a = 0; a < 2; ++a)
        for (long b = 0; b < 2; ++b)
            o.require(evaluate_surface(alg, RSpinClosedSurface{2, 1, {{a, b}}}) ==
                          evaluate_torus(alg, RSpinTorus{2, a, b}),
                      "genus 1 differs from torus");
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        std::string name;
        double budget_s;
        std::function<void(Outcome&)> run;
    };
    const std::vector<Criterion> criteria{
        {1, "axiom suite", 10, axioms},
        {2, "torus normal form", 30, torus_normal_form_check},
        {3, "torus value is quantum dimension", 30, quantum_dimensions},
        {4, "LG x^r circle spaces and torus values", 120, lg_example},
        {5, "LG Hom dimensions", 60, lg_hom},
        {6, "Nakayama coherence", 10, nakayama_coherence},
        {7, "genus-2 Clifford surfaces", 10, genus_two},
    };
    bool all = true;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        o.require(s <= c.budget_s, "over time budget");
        all = all && o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << c.id << " " << c.name << " (" << s << " s)";
        if (!o.pass) std::cout << ": " << o.why.str();
        std::cout << "\n";
    }
    return all ? 0 : 1;
}
