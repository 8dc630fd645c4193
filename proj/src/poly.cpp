#include "rspin/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

#include "rspin/errors.hpp"

namespace rspin {

bool grevlex_less(const Monomial& a, const Monomial& b) {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    for (std::size_t k = a.size(); k-- > 0;) {
        if (a[k] != b[k]) return a[k] > b[k];
    }
    return false;
}

Poly::Poly(std::vector<std::string> variables) : vars_(std::move(variables)) {
    std::sort(vars_.begin(), vars_.end());
    vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
}

Poly::Poly(const CycScalar& c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

Poly::Poly(long c) : Poly(CycScalar(c)) {}

Poly Poly::variable(const std::string& name) {
    return monomial({name}, Monomial{1});
}

Poly Poly::monomial(std::vector<std::string> variables, Monomial m, const CycScalar& c) {
    Poly p(std::move(variables));
    if (m.size() != p.vars_.size()) throw ShapeMismatch("monomial length does not match variables");
    p.add_term(m, c);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

int Poly::index_of(const std::string& name) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
    if (it == vars_.end() || *it != name) return -1;
    return static_cast<int>(it - vars_.begin());
}

const Monomial& Poly::leading_monomial() const {
    if (terms_.empty()) throw InvalidInput("zero polynomial has no leading term");
    return terms_.begin()->first;
}

const CycScalar& Poly::leading_coeff() const {
    if (terms_.empty()) throw InvalidInput("zero polynomial has no leading term");
    return terms_.begin()->second;
}

CycScalar Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? CycScalar(0) : it->second;
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, std::accumulate(m.begin(), m.end(), 0));
    return d;
}

std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b) {
    std::vector<std::string> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Poly Poly::in_ring(const std::vector<std::string>& variables) const {
    if (variables == vars_) return *this;
    Poly out(variables);
    std::vector<std::size_t> where;
    for (const auto& v : vars_) {
        const int k = out.index_of(v);
        if (k < 0) {
            bool used = false;
            const std::size_t i = where.size();
            for (const auto& [m, c] : terms_) used = used || m[i] != 0;
            if (used) throw InvalidInput("variable " + v + " missing from target ring");
            where.push_back(variables.size());
            continue;
        }
        where.push_back(static_cast<std::size_t>(k));
    }
    for (const auto& [m, c] : terms_) {
        Monomial n(out.vars_.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0) n[where[i]] = m[i];
        out.terms_.emplace(std::move(n), c);
    }
    return out;
}

std::vector<std::string> Poly::used_variables() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        for (const auto& [m, c] : terms_) {
            if (m[i] != 0) {
                out.push_back(vars_[i]);
                break;
            }
        }
    }
    return out;
}

Poly Poly::trimmed() const { return in_ring(used_variables()); }

void Poly::add_term(const Monomial& m, const CycScalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void Poly::align_with(Poly& o) {
    if (vars_ == o.vars_) return;
    const auto vs = merge_variables(vars_, o.vars_);
    *this = in_ring(vs);
    o = o.in_ring(vs);
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    Poly b = o;
    align_with(b);
    for (const auto& [m, c] : b.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly& Poly::operator*=(const Poly& o) {
    Poly b = o;
    align_with(b);
    Poly out(vars_);
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : b.terms_) {
            Monomial m(m1.size());
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = m1[i] + m2[i];
            out.add_term(m, c1 * c2);
        }
    }
    return *this = std::move(out);
}

Poly& Poly::operator*=(const CycScalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, x] : terms_) x *= c;
    return *this;
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
    Poly x = a, y = b;
    x.align_with(y);
    return x.terms_ == y.terms_;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw InvalidInput("negative polynomial power");
    Poly out = Poly(1).in_ring(vars_), base = *this;
    while (e > 0) {
        if (e & 1) out *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return out;
}

Poly Poly::derivative(const std::string& var) const {
    Poly out(vars_);
    const int k = index_of(var);
    if (k < 0) return out;
    for (const auto& [m, c] : terms_) {
        if (m[k] == 0) continue;
        Monomial n = m;
        --n[k];
        out.add_term(n, c * CycScalar(m[k]));
    }
    return out;
}

Poly Poly::substitute(const std::map<std::string, Poly>& repl) const {
    std::vector<std::string> vs;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (!repl.count(vars_[i])) vs.push_back(vars_[i]);
    for (const auto& [v, p] : repl) vs = merge_variables(vs, p.vars_);
    // Powers of each replacement, computed on demand.
    std::vector<std::vector<Poly>> powers(vars_.size());
    auto power_of = [&](std::size_t i, int e) -> const Poly& {
        auto& cache = powers[i];
        if (cache.empty()) {
            auto it = repl.find(vars_[i]);
            Monomial one(vs.size(), 0);
            cache.push_back(monomial(vs, one));
            cache.push_back(it != repl.end() ? it->second.in_ring(vs) : variable(vars_[i]).in_ring(vs));
        }
        while (cache.size() <= static_cast<std::size_t>(e)) cache.push_back(cache.back() * cache[1]);
        return cache[static_cast<std::size_t>(e)];
    };
    Poly out(vs);
    for (const auto& [m, c] : terms_) {
        Poly t = Poly(c).in_ring(vs);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0) t *= power_of(i, m[i]);
        out += t;
    }
    return out;
}

Poly Poly::scale_variables(const std::map<std::string, CycScalar>& scale) const {
    std::vector<std::pair<std::size_t, CycScalar>> idx;
    for (const auto& [v, s] : scale) {
        const int k = index_of(v);
        if (k >= 0) idx.emplace_back(static_cast<std::size_t>(k), s);
    }
    Poly out = *this;
    for (auto& [m, c] : out.terms_)
        for (const auto& [k, s] : idx)
            if (m[k] != 0) c *= s.pow(m[k]);
    return out;
}

Poly Poly::rename(const std::map<std::string, std::string>& names) const {
    std::vector<std::string> vs;
    for (const auto& v : vars_) {
        auto it = names.find(v);
        vs.push_back(it == names.end() ? v : it->second);
    }
    std::vector<std::string> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidInput("renaming merges two variables");
    Poly out(sorted);
    std::vector<std::size_t> where;
    for (const auto& v : vs) where.push_back(static_cast<std::size_t>(out.index_of(v)));
    for (const auto& [m, c] : terms_) {
        Monomial n(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) n[where[i]] = m[i];
        out.terms_.emplace(std::move(n), c);
    }
    return out;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        std::string coeff;
        bool negative = false;
        if (c.is_rational()) {
            Rational q = c.to_rational();
            negative = q < 0;
            if (negative) q = -q;
            if (q != 1 || mono.empty()) coeff = q.get_str();
        } else {
            coeff = "(" + c.str() + ")";
        }
        if (first) {
            os << (negative ? "-" : "");
        } else {
            os << (negative ? " - " : " + ");
        }
        os << coeff << (!coeff.empty() && !mono.empty() ? "*" : "") << mono;
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view s) : s_(s) {}

    Poly parse() {
        Poly p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("polynomial '" + std::string(s_) + "' at " + std::to_string(pos_) + ": " +
                         what);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool starts_factor() {
        skip();
        if (pos_ >= s_.size()) return false;
        const char c = s_[pos_];
        return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
    }

    Poly expr() {
        Poly p;
        bool negate = false;
        if (peek('-') || peek('+')) negate = s_[pos_++] == '-';
        p = term();
        if (negate) p = -p;
        while (peek('+') || peek('-')) {
            const bool minus = s_[pos_++] == '-';
            Poly t = term();
            p = minus ? p - t : p + t;
        }
        return p;
    }

    Poly term() {
        Poly p = power();
        while (true) {
            if (peek('*')) {
                ++pos_;
                p *= power();
            } else if (starts_factor()) {
                p *= power();
            } else {
                return p;
            }
        }
    }

    Poly power() {
        Poly b = base();
        if (!peek('^')) return b;
        ++pos_;
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a non-negative integer exponent");
        return b.pow(std::stoi(std::string(s_.substr(start, pos_ - start))));
    }

    Poly base() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string num(s_.substr(start, pos_ - start));
            if (pos_ < s_.size() && s_[pos_] == '/') {
                const std::size_t d0 = ++pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
                if (d0 == pos_) fail("expected a denominator");
                return Poly(CycScalar(make_rational(Integer(num), Integer(std::string(s_.substr(d0, pos_ - d0))))));
            }
            return Poly(CycScalar(Rational(Integer(num))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                        s_[pos_] == '_' || s_[pos_] == '\''))
                ++pos_;
            return Poly::variable(std::string(s_.substr(start, pos_ - start)));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

Poly difference_quotient(const Poly& w, const std::string& var) {
    const int i = w.index_of(var);
    if (i < 0) throw InvalidInput("variable " + var + " not in the potential");
    std::map<std::string, Poly> left, right;
    for (std::size_t j = 0; j < w.variables().size(); ++j) {
        const std::string& v = w.variables()[j];
        if (static_cast<int>(j) >= i) left[v] = Poly::variable(primed(v));
        if (static_cast<int>(j) > i) right[v] = Poly::variable(primed(v));
    }
    std::vector<std::string> ring = w.variables();
    for (const auto& v : w.variables()) ring = merge_variables(ring, {primed(v)});
    const Poly num = (w.substitute(left) - w.substitute(right)).in_ring(ring);

    // Synthetic division by (u - x) in u = var', coefficients in the rest.
    Poly probe(ring);
    const int u = probe.index_of(primed(var));
    const Poly x = Poly::variable(var).in_ring(ring);
    std::map<int, Poly> by_power;
    for (const auto& [m, c] : num.terms()) {
        Monomial rest = m;
        rest[static_cast<std::size_t>(u)] = 0;
        auto [it, fresh] = by_power.try_emplace(m[static_cast<std::size_t>(u)], ring);
        it->second.add_term(rest, c);
    }
    if (by_power.empty()) return Poly(ring);
    const int top = by_power.rbegin()->first;
    std::vector<Poly> q(static_cast<std::size_t>(std::max(top, 1)), Poly(ring));
    Poly carry(ring);
    for (int k = top; k >= 1; --k) {
        auto it = by_power.find(k);
        carry = (it == by_power.end() ? Poly(ring) : it->second) + x * carry;
        q[static_cast<std::size_t>(k - 1)] = carry;
    }
    auto c0 = by_power.find(0);
    const Poly remainder = (c0 == by_power.end() ? Poly(ring) : c0->second) + x * carry;
    if (!remainder.is_zero()) throw Error("difference quotient division left a remainder");
    Poly out(ring);
    const Poly uvar = Poly::variable(primed(var)).in_ring(ring);
    Poly upow = Poly(1).in_ring(ring);
    for (int k = 0; k < top; ++k) {
        out += q[static_cast<std::size_t>(k)] * upow;
        upow *= uvar;
    }
    return out;
}

Rational weighted_degree(const Monomial& m, const std::vector<Rational>& weights) {
    Rational d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += weights[i] * m[i];
    return d;
}

std::vector<Monomial> monomials_of_degree(const std::vector<Rational>& weights, const Rational& d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    Monomial cur(weights.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, Rational left) -> void {
        if (i == weights.size()) {
            if (left == 0) out.push_back(cur);
            return;
        }
        if (weights[i] <= 0) throw InvalidInput("monomial enumeration needs positive weights");
        if (i + 1 == weights.size()) {
            Rational e = left / weights[i];
            if (e.get_den() == 1) {
                cur[i] = static_cast<int>(e.get_num().get_si());
                out.push_back(cur);
                cur[i] = 0;
            }
            return;
        }
        for (int e = 0; weights[i] * e <= left; ++e) {
            cur[i] = e;
            self(self, i + 1, left - weights[i] * e);
        }
        cur[i] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grevlex_less(b, a); });
    return out;
}

}  // namespace rspin
