#include "rspin/lambda_frobenius.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

namespace rspin {

namespace {

void expect(const SuperMap& f, const SuperSpace& s, const SuperSpace& t, const std::string& what) {
    if (!(f.source() == s) || !(f.target() == t)) {
        throw InvalidInput(what + " should map " + s.str() + " -> " + t.str() + ", got " +
                           f.source().str() + " -> " + f.target().str());
    }
    if (f.parity() != 0 && !f.matrix().is_zero()) throw InvalidInput(what + " is not even");
}

std::string idx(long a, long b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

LambdaFrobenius::LambdaFrobenius(int r, std::vector<SuperSpace> spaces, std::vector<SuperMap> mu,
                                 SuperMap eta, std::vector<SuperMap> delta, SuperMap eps)
    : r_(r), spaces_(std::move(spaces)), mu_(std::move(mu)), eta_(std::move(eta)),
      delta_(std::move(delta)), eps_(std::move(eps)) {
    if (r_ < 1) throw InvalidInput("r must be positive");
    const auto n = static_cast<std::size_t>(r_);
    if (spaces_.size() != n) throw InvalidInput("expected " + std::to_string(r_) + " spaces");
    if (mu_.size() != n * n || delta_.size() != n * n) {
        throw InvalidInput("expected r*r multiplication and comultiplication maps");
    }
    for (int a = 0; a < r_; ++a) {
        for (int b = 0; b < r_; ++b) {
            expect(this->mu(a, b), tensor_space(space(a), space(b)), space(a + b - 1),
                   "mu" + idx(a, b));
            expect(this->delta(a, b), space(a + b + 1), tensor_space(space(a), space(b)),
                   "delta" + idx(a, b));
        }
    }
    expect(eta_, kUnit, space(1), "eta");
    expect(eps_, space(-1), kUnit, "eps");
}

int LambdaFrobenius::field_order() const {
    int o = rspin::field_order(eta_.matrix(), 1);
    o = rspin::field_order(eps_.matrix(), o);
    for (const auto& m : mu_) o = rspin::field_order(m.matrix(), o);
    for (const auto& d : delta_) o = rspin::field_order(d.matrix(), o);
    return o;
}

LambdaFrobenius LambdaFrobenius::with_mu(long a, long b, SuperMap m) const {
    LambdaFrobenius out = *this;
    expect(m, mu(a, b).source(), mu(a, b).target(), "mu" + idx(a, b));
    out.mu_[slot(a, b)] = std::move(m);
    return out;
}

SuperMap pairing(const LambdaFrobenius& alg, long a) { return compose(alg.eps(), alg.mu(a, -a)); }

SuperMap copairing(const LambdaFrobenius& alg, long a) {
    return compose(alg.delta(a, -a), alg.eta());
}

SuperMap nakayama(const LambdaFrobenius& alg, long a) {
    const SuperSpace& ca = alg.space(a);
    const SuperSpace& cm = alg.space(-a);
    SuperMap f = tensor(SuperMap::identity(ca), compose(alg.delta(-a, a), alg.eta()));
    f = compose(associator_inverse(ca, cm, ca), f);
    f = compose(tensor(braiding(ca, cm), SuperMap::identity(ca)), f);
    f = compose(tensor(pairing(alg, -a), SuperMap::identity(ca)), f);
    return SuperMap(ca, ca, 0, f.matrix());
}

SuperMap nakayama_power(const LambdaFrobenius& alg, long a, long k) {
    return power(nakayama(alg, a), mod(k, alg.r()));
}

bool ValidationReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

std::vector<const RelationCheck*> ValidationReport::failures() const {
    std::vector<const RelationCheck*> out;
    for (const auto& c : checks)
        if (!c.pass) out.push_back(&c);
    return out;
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    for (const auto& fam : relation_families()) {
        std::size_t n = 0, bad = 0;
        for (const auto& c : checks) {
            if (c.family != fam) continue;
            ++n;
            bad += c.pass ? 0 : 1;
        }
        os << fam << ": " << (n - bad) << "/" << n << " pass\n";
    }
    return os.str();
}

namespace {

class Validator {
public:
    Validator(const LambdaFrobenius& alg, std::vector<int> order) : alg_(alg), order_(order) {
        for (int a = 0; a < alg.r(); ++a) naka_.push_back(nakayama(alg, a));
    }

    ValidationReport run() {
        for (int a : order_)
            for (int b : order_) {
                for (int c : order_) {
                    associativity(a, b, c);
                    frobenius(a, b, c);
                }
                commutativity(a, b);
                twist_pairing(a, b);
            }
        for (int a : order_) {
            unitality(a);
            const SuperMap& n = naka_[static_cast<std::size_t>(a)];
            add("twist", "twist-power", {a}, power(n, a), SuperMap::identity(alg_.space(a)));
            add("deck", "deck", {a}, power(n, alg_.r()), SuperMap::identity(alg_.space(a)));
        }
        std::sort(report_.checks.begin(), report_.checks.end(), [](const auto& x, const auto& y) {
            return std::tie(x.family, x.relation, x.indices) < std::tie(y.family, y.relation, y.indices);
        });
        return std::move(report_);
    }

private:
    const SuperSpace& sp(long a) const { return alg_.space(a); }
    SuperMap id(long a) const { return SuperMap::identity(sp(a)); }
    SuperMap npow(long a, long k) const {
        return power(naka_[static_cast<std::size_t>(mod(a, alg_.r()))], mod(k, alg_.r()));
    }

    void add(const std::string& fam, const std::string& rel, std::vector<int> ix, const SuperMap& l,
             const SuperMap& r) {
        RelationCheck c{fam, rel, std::move(ix), l == r, l.matrix(), r.matrix()};
        report_.checks.push_back(std::move(c));
    }

    void associativity(int a, int b, int c) {
        SuperMap l = compose(alg_.mu(a + b - 1, c), tensor(alg_.mu(a, b), id(c)));
        SuperMap r = compose(alg_.mu(a, b + c - 1),
                             compose(tensor(id(a), alg_.mu(b, c)), associator(sp(a), sp(b), sp(c))));
        add("associativity", "associativity", {a, b, c}, l, r);

        SuperMap dl = compose(tensor(alg_.delta(a, b), id(c)), alg_.delta(a + b + 1, c));
        SuperMap dr = compose(associator_inverse(sp(a), sp(b), sp(c)),
                              compose(tensor(id(a), alg_.delta(b, c)), alg_.delta(a, b + c + 1)));
        add("associativity", "coassociativity", {a, b, c}, dl, dr);
    }

    void unitality(int a) {
        add("unitality", "unit-left", {a}, compose(alg_.mu(1, a), tensor(alg_.eta(), id(a))), id(a));
        add("unitality", "unit-right", {a}, compose(alg_.mu(a, 1), tensor(id(a), alg_.eta())), id(a));
        add("unitality", "counit-left", {a}, compose(tensor(alg_.eps(), id(a)), alg_.delta(-1, a)),
            id(a));
        add("unitality", "counit-right", {a}, compose(tensor(id(a), alg_.eps()), alg_.delta(a, -1)),
            id(a));
    }

    // Inputs C_a (x) C_b, outputs C_x (x) C_y with y = a + b - 2 - x.
    void frobenius(int a, int b, int x) {
        const long y = a + b - 2 - x;
        SuperMap m = compose(alg_.delta(x, y), alg_.mu(a, b));
        SuperMap l = compose(
            tensor(id(x), alg_.mu(a - x - 1, b)),
            compose(associator(sp(x), sp(a - x - 1), sp(b)), tensor(alg_.delta(x, a - x - 1), id(b))));
        SuperMap r = compose(tensor(alg_.mu(a, b - y - 1), id(y)),
                             compose(associator_inverse(sp(a), sp(b - y - 1), sp(y)),
                                     tensor(id(a), alg_.delta(b - y - 1, y))));
        add("frobenius", "frobenius-left", {a, b, x}, l, m);
        add("frobenius", "frobenius-right", {a, b, x}, r, m);
    }

    // Maps C_b (x) C_a -> C_{a+b-1}.
    void commutativity(int a, int b) {
        SuperMap mid = compose(alg_.mu(a, b), braiding(sp(b), sp(a)));
        SuperMap l = compose(alg_.mu(b, a), tensor(npow(b, 1 - a), id(a)));
        SuperMap r = compose(alg_.mu(b, a), tensor(id(b), npow(a, b - 1)));
        add("commutativity", "commutativity-left", {a, b}, l, mid);
        add("commutativity", "commutativity-right", {a, b}, r, mid);
    }

    // mu_{a,-a} (N_a^b (x) 1) delta_{a,-a} eta, a vector in C_{-1}.
    SuperMap twisted_loop(long a, long b) const {
        return compose(alg_.mu(a, -a),
                       compose(tensor(npow(a, b), id(-a)), copairing(alg_, a)));
    }

    void twist_pairing(int a, int b) {
        add("twist", "twist-loop", {a, b}, twisted_loop(a, b), twisted_loop(a + b - 1, b));
    }

    const LambdaFrobenius& alg_;
    std::vector<int> order_;
    std::vector<SuperMap> naka_;
    ValidationReport report_;
};

}  // namespace

ValidationReport validate(const LambdaFrobenius& alg, const std::vector<int>& index_order) {
    std::vector<int> order = index_order;
    if (order.empty()) {
        order.resize(static_cast<std::size_t>(alg.r()));
        std::iota(order.begin(), order.end(), 0);
    }
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted.size() != static_cast<std::size_t>(alg.r()) || sorted[i] != static_cast<int>(i))
            throw InvalidInput("index_order must be a permutation of 0..r-1");
    }
    return Validator(alg, order).run();
}

bool nakayama_multiplicative(const LambdaFrobenius& alg) {
    for (int a = 0; a < alg.r(); ++a)
        for (int b = 0; b < alg.r(); ++b) {
            SuperMap l = compose(alg.mu(a, b), tensor(nakayama(alg, a), nakayama(alg, b)));
            SuperMap r = compose(nakayama(alg, a + b - 1), alg.mu(a, b));
            if (l != r) return false;
        }
    return true;
}

}  // namespace rspin
