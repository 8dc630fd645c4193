#include "rspin/surface_eval.hpp"

#include <numeric>

namespace rspin {

namespace {

void check_r(const LambdaFrobenius& alg, int r) {
    if (alg.r() != r) {
        throw InvalidInput("algebra has r = " + std::to_string(alg.r()) + " but the surface has r = " +
                           std::to_string(r));
    }
}

}  // namespace

int torus_normal_form(const RSpinTorus& t) {
    if (t.r < 1) throw InvalidInput("r must be positive");
    return std::gcd(std::gcd(mod(t.a, t.r), mod(t.b, t.r)), t.r);
}

SuperMap handle_operator(const LambdaFrobenius& alg, long c, long a, long b) {
    const long split = c + a - 1;
    SuperMap f = alg.delta(-a, split);
    f = compose(tensor(nakayama_power(alg, -a, 1 - b), SuperMap::identity(alg.space(split))), f);
    return compose(alg.mu(-a, split), f);
}

CycScalar evaluate_torus(const LambdaFrobenius& alg, const RSpinTorus& t) {
    check_r(alg, t.r);
    return compose(alg.eps(), compose(handle_operator(alg, 1, t.a, t.b), alg.eta())).as_scalar();
}

CycScalar evaluate_surface(const LambdaFrobenius& alg, const RSpinClosedSurface& s) {
    check_r(alg, s.r);
    if (s.genus < 0 || static_cast<std::size_t>(s.genus) != s.handles.size()) {
        throw InvalidInput("genus " + std::to_string(s.genus) + " needs exactly that many holonomy pairs");
    }
    if ((2L * s.genus - 2) % s.r != 0) {
        throw Inadmissible("a genus-" + std::to_string(s.genus) + " surface has no " +
                           std::to_string(s.r) + "-spin structure (r must divide 2g - 2)");
    }
    SuperMap v = alg.eta();
    long c = 1;
    for (const auto& [a, b] : s.handles) {
        v = compose(handle_operator(alg, c, a, b), v);
        c -= 2;
    }
    return compose(alg.eps(), v).as_scalar();
}

std::vector<int> divisors(int r) {
    std::vector<int> out;
    for (int d = 1; d <= r; ++d)
        if (r % d == 0) out.push_back(d);
    return out;
}

std::vector<std::pair<int, CycScalar>> all_torus_invariants(const LambdaFrobenius& alg) {
    std::vector<std::pair<int, CycScalar>> out;
    for (int d : divisors(alg.r())) out.emplace_back(d, evaluate_torus(alg, {alg.r(), d, 0}));
    return out;
}

}  // namespace rspin
