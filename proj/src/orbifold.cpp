#include "rspin/orbifold.hpp"

#include <bit>
#include <sstream>

#include "rspin/errors.hpp"
#include "rspin/groebner.hpp"

namespace rspin {

void check_fermat(const Poly& w, const GroupAction& act) {
    const Poly p = w.trimmed();
    if (p.terms().size() != p.variables().size() || p.variables().empty())
        throw Unsupported(w.str() + " is not a Fermat sum of pure powers");
    std::vector<bool> seen(p.variables().size(), false);
    for (const auto& [m, c] : p.terms()) {
        std::size_t nonzero = 0, at = 0;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0) ++nonzero, at = i;
        if (nonzero != 1 || m[at] < 2 || seen[at])
            throw Unsupported(w.str() + " is not a Fermat sum of pure powers");
        seen[at] = true;
    }
    act.check_invariant(p);
}

namespace {

CycScalar xi(const GroupAction& act, long k) { return CycScalar::zeta(act.r, k); }

// zeta^{h w(S)} for each exterior basis vector S.
std::vector<long> subset_weights(const Poly& w, const GroupAction& act) {
    const auto& vars = w.variables();
    std::vector<long> out;
    for (unsigned s : exterior_basis(vars.size())) {
        long t = 0;
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (s & (1u << i)) t += act.weights.at(vars[i]);
        out.push_back(t);
    }
    return out;
}

}  // namespace

OrbifoldAlgebra orbifold_algebra(const Poly& w0, const GroupAction& act) {
    check_fermat(w0, act);
    OrbifoldAlgebra orb;
    orb.potential = w0.trimmed();
    orb.action = act;
    const int r = act.r;
    const Poly& w = orb.potential;
    const MatrixFactorization unit_mf = identity_mf(w);
    for (int g = 0; g < r; ++g) orb.sectors.emplace_back(unit_mf, twisted_identity(w, act, g));

    // Basis: even classes of all sectors, then odd ones.
    std::vector<std::vector<std::size_t>> index(static_cast<std::size_t>(r));
    SuperSpace space;
    for (int parity = 0; parity < 2; ++parity)
        for (int g = 0; g < r; ++g) {
            const auto& cls = orb.sectors[static_cast<std::size_t>(g)].classes();
            index[static_cast<std::size_t>(g)].resize(cls.size());
            for (std::size_t k = 0; k < cls.size(); ++k) {
                if (cls[k].parity != parity) continue;
                index[static_cast<std::size_t>(g)][k] = orb.basis.size();
                orb.basis.emplace_back(g, k);
                (parity ? space.odd : space.even) += 1;
            }
        }
    const std::size_t n = space.dim();
    auto embed = [&](int g, const Matrix& coords) {
        Matrix v(n, 1);
        for (std::size_t k = 0; k < coords.rows(); ++k)
            v(index[static_cast<std::size_t>(g)][k], 0) = coords(k, 0);
        return v;
    };

    // Multiplication.
    const auto pos = tensor_position(space, space);
    Matrix mult(n, n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto [g, k] = orb.basis[i];
        for (std::size_t j = 0; j < n; ++j) {
            const auto [h, l] = orb.basis[j];
            std::map<std::string, CycScalar> twist;
            for (const auto& v : w.variables()) twist[primed(v)] = xi(act, -act.weights.at(v) * h);
            const PolyMatrix phi = orb.sectors[static_cast<std::size_t>(g)].classes()[k].representative.map(
                [&](const Poly& p) { return p.scale_variables(twist); });
            const PolyMatrix prod = phi * orb.sectors[static_cast<std::size_t>(h)].classes()[l].representative;
            const int gh = mod(g + h, r);
            mult.set_block(0, pos[i * n + j], embed(gh, orb.sectors[static_cast<std::size_t>(gh)].reduce(prod)));
        }
    }

    // Unit and counit.
    const HomCohomology& h0 = orb.sectors[0];
    Matrix unit = embed(0, h0.reduce(PolyMatrix::identity(unit_mf.rank.dim())));
    if (h0.classes().empty()) throw Unsupported("Jacobi algebra is zero");
    std::size_t top = 0;
    for (std::size_t k = 1; k < h0.classes().size(); ++k)
        if (h0.classes()[k].degree > h0.classes()[top].degree) top = k;
    for (std::size_t k = 0; k < h0.classes().size(); ++k)
        if (k != top && h0.classes()[k].degree == h0.classes()[top].degree)
            throw Unsupported("top degree of End(I_W) is not one-dimensional");
    Matrix counit(1, n);
    counit(0, index[0][top]) = CycScalar(1);

    orb.maps.space = space;
    orb.maps.mult = SuperMap(tensor_space(space, space), space, 0, mult);
    orb.maps.unit = SuperMap(kUnit, space, 0, unit);
    orb.maps.counit = SuperMap(space, kUnit, 0, counit);
    orb.maps.comult = derived_comult(space, orb.maps.mult, orb.maps.counit);
    orb.checks = frobenius_checks(orb.maps);

    Matrix gamma(n, n);
    for (std::size_t i = 0; i < n; ++i) gamma(i, i) = act.det(orb.basis[i].first).inverse();
    orb.gamma = SuperMap(space, space, 0, gamma);
    try {
        check_automorphism(orb.maps, orb.gamma);
        orb.gamma_is_automorphism = true;
    } catch (const InvalidInput&) {
        orb.gamma_is_automorphism = false;
    }
    try {
        const SuperMap naka = nakayama_gamma(orb.maps).map;
        orb.gamma_is_nakayama = naka == orb.gamma;
        orb.gamma_inverse_is_nakayama = compose(naka, orb.gamma).is_identity();
    } catch (const InvalidInput&) {
        orb.gamma_is_nakayama = false;
    }
    orb.gamma_order_divides_r = power(orb.gamma, r).is_identity();
    return orb;
}

SuperMap sector_action(const OrbifoldAlgebra& orb, long h) {
    const GroupAction& act = orb.action;
    const Poly& w = orb.potential;
    const std::size_t n = orb.maps.space.dim();
    std::map<std::string, CycScalar> scale;
    for (const auto& v : w.variables()) {
        scale[v] = xi(act, -act.weights.at(v) * h);
        scale[primed(v)] = scale[v];
    }
    const auto sw = subset_weights(w, act);
    std::vector<std::vector<std::size_t>> index(orb.sectors.size());
    for (std::size_t i = 0; i < n; ++i) {
        auto& row = index[static_cast<std::size_t>(orb.basis[i].first)];
        row.resize(std::max(row.size(), orb.basis[i].second + 1));
        row[orb.basis[i].second] = i;
    }
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto [g, k] = orb.basis[i];
        const HomCohomology& hg = orb.sectors[static_cast<std::size_t>(g)];
        const PolyMatrix& rep = hg.classes()[k].representative;
        PolyMatrix moved(rep.rows(), rep.cols());
        for (std::size_t a = 0; a < rep.rows(); ++a)
            for (std::size_t b = 0; b < rep.cols(); ++b)
                moved(a, b) = rep(a, b).scale_variables(scale) * xi(act, h * (sw[b] - sw[a]));
        const Matrix c = hg.reduce(moved);
        for (std::size_t t = 0; t < c.rows(); ++t) m(index[static_cast<std::size_t>(g)][t], i) = c(t, 0);
    }
    return SuperMap(orb.maps.space, orb.maps.space, 0, m);
}

SuperMap circle_projector(const OrbifoldAlgebra& orb, long a) {
    const int r = orb.action.r;
    const SuperSpace& v = orb.maps.space;
    SuperMap p = SuperMap::zero(v, v, 0);
    for (int h = 0; h < r; ++h) {
        p = p + orb.action.det(h).pow(-(1 - a)) * sector_action(orb, h);
    }
    return CycScalar(make_rational(1, r)) * p;
}

std::vector<SuperSpace> character_circle_spaces(const Poly& w0, const GroupAction& act) {
    check_fermat(w0, act);
    const Poly w = w0.trimmed();
    const int r = act.r;
    std::vector<SuperSpace> out(static_cast<std::size_t>(r));
    for (int g = 0; g < r; ++g) {
        std::map<std::string, Poly> kill;
        std::vector<std::string> fixed;
        long moved_weight = 0;
        int moved = 0;
        for (const auto& v : w.variables()) {
            if (mod(static_cast<long>(act.weights.at(v)) * g, r) == 0) {
                fixed.push_back(v);
            } else {
                kill[v] = Poly(0);
                moved_weight += act.weights.at(v);
                ++moved;
            }
        }
        // Group weights of the Jacobi basis on the fixed locus.
        std::vector<long> wts;
        if (fixed.empty()) {
            wts.push_back(0);
        } else {
            const JacobiAlgebra j = jacobi(w.substitute(kill));
            const auto& jv = j.potential.variables();
            for (const auto& m : j.monomial_basis) {
                long t = 0;
                for (std::size_t i = 0; i < m.size(); ++i) t += m[i] * act.weights.at(jv[i]);
                wts.push_back(t);
            }
        }
        for (int a = 0; a < r; ++a) {
            CycScalar tr = 0;
            for (int h = 0; h < r; ++h) {
                CycScalar chi = 0;
                for (long t : wts) chi += xi(act, -h * t + h * moved_weight);
                tr += act.det(h).pow(-(1 - a)) * chi;
            }
            tr *= CycScalar(make_rational(1, r));
            const Rational d = tr.to_rational();
            if (d.get_den() != 1 || d < 0) throw Error("character trace is not a dimension");
            const auto dim = static_cast<std::size_t>(d.get_num().get_ui());
            (moved % 2 ? out[static_cast<std::size_t>(a)].odd : out[static_cast<std::size_t>(a)].even) += dim;
        }
    }
    return out;
}

SuperSpace shifted_space(const SuperSpace& s, long k) {
    return mod(k, 2) ? SuperSpace{s.odd, s.even} : s;
}

CircleSpaces lg_circle_spaces(const OrbifoldAlgebra& orb) {
    CircleSpaces cs;
    cs.r = orb.action.r;
    cs.variables = orb.potential.variables().size();
    std::vector<SplitIdempotent> pieces;
    for (int a = 0; a < cs.r; ++a) {
        pieces.push_back(split_idempotent(circle_projector(orb, a)));
        cs.images.push_back(pieces.back().image);
        cs.table.push_back(shifted_space(cs.images.back(), static_cast<long>(cs.variables) * (1 - a)));
    }
    cs.character = character_circle_spaces(orb.potential, orb.action);
    std::ostringstream os;
    for (int a = 0; a < cs.r; ++a) {
        const auto k = static_cast<std::size_t>(a);
        if (!(cs.images[k] == cs.character[k]))
            os << "a=" << a << ": projector " << cs.images[k].str() << " vs character "
               << cs.character[k].str() << "\n";
    }
    cs.mismatch = os.str();
    cs.agree = cs.mismatch.empty();
    cs.algebra = lambda_from_pieces(orb.maps, pieces);
    cs.pieces = std::move(pieces);
    return cs;
}

CircleSpaces lg_circle_spaces(const Poly& w, const GroupAction& act) {
    return lg_circle_spaces(orbifold_algebra(w, act));
}

}  // namespace rspin
