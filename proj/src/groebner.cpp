#include "rspin/groebner.hpp"

#include <algorithm>
#include <set>

#include "rspin/errors.hpp"

namespace rspin {

namespace {

bool divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
    return m;
}

Monomial quotient(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] - b[i];
    return m;
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) return false;
    return true;
}

Poly shifted(const Poly& p, const Monomial& m, const CycScalar& c) {
    return p * Poly::monomial(p.variables(), m, c);
}

Poly monic(Poly p) {
    if (p.is_zero()) return p;
    return p * p.leading_coeff().inverse();
}

Poly spoly(const Poly& f, const Poly& g) {
    const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
    return shifted(f, quotient(l, f.leading_monomial()), f.leading_coeff().inverse()) -
           shifted(g, quotient(l, g.leading_monomial()), g.leading_coeff().inverse());
}

}  // namespace

Poly normal_form(const Poly& p, const std::vector<Poly>& basis) {
    Poly rem(p.variables()), f = p;
    for (const auto& g : basis) {
        rem = rem.in_ring(merge_variables(rem.variables(), g.variables()));
    }
    f = f.in_ring(rem.variables());
    std::vector<Poly> gs;
    for (const auto& g : basis) gs.push_back(g.in_ring(rem.variables()));
    while (!f.is_zero()) {
        const Monomial lm = f.leading_monomial();
        const CycScalar lc = f.leading_coeff();
        bool reduced = false;
        for (const auto& g : gs) {
            if (divides(g.leading_monomial(), lm)) {
                f -= shifted(g, quotient(lm, g.leading_monomial()), lc / g.leading_coeff());
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.add_term(lm, lc);
            f.add_term(lm, -lc);
        }
    }
    return rem;
}

std::vector<Poly> groebner(const std::vector<Poly>& gens) {
    std::vector<std::string> ring;
    for (const auto& g : gens) ring = merge_variables(ring, g.variables());
    std::vector<Poly> g;
    for (const auto& p : gens)
        if (!p.is_zero()) g.push_back(monic(p.in_ring(ring)));
    if (g.empty()) return {};

    // Pairs (i, j), i < j, processed in order of the grevlex-smallest lcm.
    std::set<std::pair<std::size_t, std::size_t>> pending;
    for (std::size_t j = 0; j < g.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) pending.emplace(i, j);
    auto is_pending = [&](std::size_t a, std::size_t b) {
        return pending.count({std::min(a, b), std::max(a, b)}) > 0;
    };
    while (!pending.empty()) {
        auto best = pending.begin();
        Monomial best_l = lcm(g[best->first].leading_monomial(), g[best->second].leading_monomial());
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            Monomial l = lcm(g[it->first].leading_monomial(), g[it->second].leading_monomial());
            if (grevlex_less(l, best_l)) {
                best = it;
                best_l = l;
            }
        }
        const auto [i, j] = *best;
        pending.erase(best);
        const Monomial& li = g[i].leading_monomial();
        const Monomial& lj = g[j].leading_monomial();
        if (coprime(li, lj)) continue;
        bool chain = false;
        for (std::size_t k = 0; k < g.size() && !chain; ++k) {
            if (k == i || k == j) continue;
            chain = divides(g[k].leading_monomial(), best_l) && !is_pending(i, k) && !is_pending(j, k);
        }
        if (chain) continue;
        Poly h = normal_form(spoly(g[i], g[j]), g);
        if (h.is_zero()) continue;
        g.push_back(monic(h));
        for (std::size_t k = 0; k + 1 < g.size(); ++k) pending.emplace(k, g.size() - 1);
    }

    // Minimal, then reduced.
    std::vector<Poly> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t k = 0; k < g.size() && !redundant; ++k) {
            if (k == i) continue;
            const bool div = divides(g[k].leading_monomial(), g[i].leading_monomial());
            const bool same = g[k].leading_monomial() == g[i].leading_monomial();
            redundant = div && (!same || k < i);
        }
        if (!redundant) minimal.push_back(g[i]);
    }
    std::vector<Poly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        for (std::size_t k = 0; k < minimal.size(); ++k)
            if (k != i) others.push_back(minimal[k]);
        Poly tail = minimal[i];
        const Monomial lm = tail.leading_monomial();
        tail.add_term(lm, -tail.leading_coeff());
        Poly r = normal_form(tail, others);
        r.add_term(lm, 1);
        reduced.push_back(r);
    }
    std::sort(reduced.begin(), reduced.end(), [](const Poly& a, const Poly& b) {
        return grevlex_less(a.leading_monomial(), b.leading_monomial());
    });
    return reduced;
}

Matrix JacobiAlgebra::coordinates(const Poly& p) const {
    const Poly nf = normal_form(p.in_ring(merge_variables(p.variables(), potential.variables())),
                                groebner_basis);
    Matrix out(dim(), 1);
    const Poly aligned = nf.in_ring(potential.variables());
    for (const auto& [m, c] : aligned.terms()) {
        auto it = std::find(monomial_basis.begin(), monomial_basis.end(), m);
        if (it == monomial_basis.end()) throw Error("normal form left the staircase");
        out(static_cast<std::size_t>(it - monomial_basis.begin()), 0) = c;
    }
    return out;
}

Poly JacobiAlgebra::element(std::size_t i) const {
    return Poly::monomial(potential.variables(), monomial_basis.at(i));
}

std::string JacobiAlgebra::basis_str() const {
    std::string out;
    for (std::size_t i = 0; i < dim(); ++i) out += (i ? ", " : "") + element(i).str();
    return out;
}

JacobiAlgebra jacobi(const Poly& w) {
    JacobiAlgebra j;
    j.potential = w.trimmed();
    const auto& vars = j.potential.variables();
    if (vars.empty()) throw InvalidInput("potential has no variables");
    std::vector<Poly> gens;
    for (const auto& v : vars) gens.push_back(j.potential.derivative(v));
    j.groebner_basis = groebner(gens);
    for (auto& g : j.groebner_basis) g = g.in_ring(vars);
    if (!j.groebner_basis.empty() && j.groebner_basis.front().is_constant()) {
        j.groebner_basis = {Poly(1).in_ring(vars)};
        return j;  // zero algebra: W has no critical point
    }
    // Staircase bounds from pure powers among the leading monomials.
    std::vector<int> bound(vars.size(), -1);
    for (const auto& g : j.groebner_basis) {
        const Monomial& lm = g.leading_monomial();
        std::size_t nonzero = 0, at = 0;
        for (std::size_t i = 0; i < lm.size(); ++i)
            if (lm[i] != 0) ++nonzero, at = i;
        if (nonzero == 1 && (bound[at] < 0 || lm[at] < bound[at])) bound[at] = lm[at];
    }
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (bound[i] < 0)
            throw InvalidInput("Jacobi algebra of " + w.str() + " is infinite-dimensional: " + vars[i] +
                               " is unbounded");
    Monomial cur(vars.size(), 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == vars.size()) {
            for (const auto& g : j.groebner_basis)
                if (divides(g.leading_monomial(), cur)) return;
            j.monomial_basis.push_back(cur);
            return;
        }
        for (int e = 0; e < bound[i]; ++e) {
            cur[i] = e;
            self(self, i + 1);
        }
        cur[i] = 0;
    };
    rec(rec, 0);
    std::sort(j.monomial_basis.begin(), j.monomial_basis.end(), grevlex_less);
    j.mult_table.assign(j.dim(), std::vector<Matrix>(j.dim()));
    for (std::size_t a = 0; a < j.dim(); ++a)
        for (std::size_t b = 0; b < j.dim(); ++b)
            j.mult_table[a][b] = j.coordinates(j.element(a) * j.element(b));
    return j;
}

std::map<std::string, Rational> quasi_homogeneous_weights(const Poly& w) {
    const Poly p = w.trimmed();
    const auto& vars = p.variables();
    if (vars.empty()) throw Unsupported("constant potential has no weights");
    Matrix a(p.terms().size(), vars.size()), b(p.terms().size(), 1);
    std::size_t row = 0;
    for (const auto& [m, c] : p.terms()) {
        for (std::size_t i = 0; i < vars.size(); ++i) a(row, i) = CycScalar(m[i]);
        b(row, 0) = CycScalar(1);
        ++row;
    }
    auto x = solve(a, b);
    if (!x || rank(a) != vars.size())
        throw Unsupported(w.str() + " is not quasi-homogeneous with unique weights");
    std::map<std::string, Rational> out;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        const Rational q = (*x)(i, 0).to_rational();
        if (q <= 0) throw Unsupported(w.str() + " has a non-positive weight for " + vars[i]);
        out[vars[i]] = q;
    }
    return out;
}

}  // namespace rspin
