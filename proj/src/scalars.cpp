#include "rspin/scalars.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace rspin {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

// x^r - 1 divided exactly by a monic integer polynomial.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
    const std::size_t n = den.size() - 1;
    if (num.size() < den.size()) return {};
    IntPoly q(num.size() - n, 0);
    for (std::size_t k = num.size(); k-- > n;) {
        Integer t = num[k];
        q[k - n] = t;
        if (t == 0) continue;
        for (std::size_t i = 0; i <= n; ++i) num[k - n + i] -= t * den[i];
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (num[i] != 0) throw Error("cyclotomic division left a remainder");
    }
    return q;
}

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

RatPoly poly_sub(RatPoly a, const RatPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

// Quotient and remainder of a by b (b nonzero).
std::pair<RatPoly, RatPoly> poly_divmod(RatPoly a, const RatPoly& b) {
    trim(a);
    RatPoly q;
    if (a.size() < b.size()) return {q, a};
    q.assign(a.size() - b.size() + 1, 0);
    const Rational lead = b.back();
    const std::size_t shift = b.size() - 1;
    for (std::size_t k = a.size(); k-- > shift;) {
        if (a[k] == 0) continue;
        Rational t = a[k] / lead;
        q[k - shift] = t;
        for (std::size_t i = 0; i < b.size(); ++i) a[k - shift + i] -= t * b[i];
    }
    trim(a);
    trim(q);
    return {q, a};
}

}  // namespace

const IntPoly& cyclotomic_polynomial(int r) {
    if (r < 1) throw InvalidInput("cyclotomic_polynomial needs r >= 1");
    static std::mutex mu;
    static std::map<int, IntPoly> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(r);
        if (it != cache.end()) return it->second;
    }
    IntPoly p(static_cast<std::size_t>(r) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(r)] = 1;
    for (int d = 1; d < r; ++d) {
        if (r % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
    }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(r, std::move(p)).first->second;
}

int euler_phi(int r) {
    return static_cast<int>(cyclotomic_polynomial(r).size()) - 1;
}

std::string to_string(const IntPoly& p, std::string_view var) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = p.size(); k-- > 0;) {
        const Integer& c = p[k];
        if (c == 0) continue;
        Integer mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0 || mag != 1) {
            os << mag.get_str();
            if (k > 0) os << "*";
        }
        if (k > 0) os << var;
        if (k > 1) os << "^" << k;
    }
    if (first) os << "0";
    return os.str();
}

CycScalar::CycScalar() : order_(1), coeffs_(1, 0) {}

CycScalar::CycScalar(long v) : order_(1), coeffs_(1, Rational(v)) {}

CycScalar::CycScalar(const Rational& q) : order_(1), coeffs_(1, q) {}

CycScalar::CycScalar(int order, const Rational& q) : order_(order) {
    if (order < 1) throw InvalidInput("cyclotomic order must be >= 1");
    coeffs_.assign(static_cast<std::size_t>(euler_phi(order)), 0);
    coeffs_[0] = q;
}

CycScalar::CycScalar(int order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    if (order < 1) throw InvalidInput("cyclotomic order must be >= 1");
    reduce();
}

CycScalar CycScalar::zeta(int order, long k) {
    long e = ((k % order) + order) % order;
    std::vector<Rational> c(static_cast<std::size_t>(e) + 1, 0);
    c[static_cast<std::size_t>(e)] = 1;
    return CycScalar(order, std::move(c));
}

void CycScalar::reduce() {
    const IntPoly& phi = cyclotomic_polynomial(order_);
    const std::size_t n = phi.size() - 1;
    for (std::size_t k = coeffs_.size(); k-- > n;) {
        Rational t = coeffs_[k];
        if (t == 0) continue;
        for (std::size_t i = 0; i < n; ++i) {
            if (phi[i] != 0) coeffs_[k - n + i] -= t * phi[i];
        }
        coeffs_[k] = 0;
    }
    coeffs_.resize(n, 0);
}

bool CycScalar::is_zero() const {
    for (const auto& c : coeffs_) {
        if (c != 0) return false;
    }
    return true;
}

bool CycScalar::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) return false;
    }
    return true;
}

bool CycScalar::is_one() const { return is_rational() && coeffs_[0] == 1; }

Rational CycScalar::to_rational() const {
    if (!is_rational()) throw InvalidInput("scalar " + str() + " is not rational");
    return coeffs_[0];
}

CycScalar CycScalar::embed(int n) const {
    if (n == order_) return *this;
    if (is_rational()) return CycScalar(n, coeffs_[0]);
    if (n % order_ != 0) {
        throw OrderMismatch("cannot embed Q(zeta_" + std::to_string(order_) + ") into Q(zeta_" +
                            std::to_string(n) + ")");
    }
    const std::size_t step = static_cast<std::size_t>(n / order_);
    std::vector<Rational> c((coeffs_.size() - 1) * step + 1, 0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k * step] = coeffs_[k];
    return CycScalar(n, std::move(c));
}

namespace {

[[noreturn]] void mismatch(int a, int b) {
    throw OrderMismatch("cyclotomic order mismatch: " + std::to_string(a) + " vs " +
                        std::to_string(b));
}

}  // namespace

CycScalar CycScalar::operator-() const {
    CycScalar out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
    if (order_ == o.order_) {
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    } else if (o.is_rational()) {
        coeffs_[0] += o.coeffs_[0];
    } else if (is_rational()) {
        Rational q = coeffs_[0];
        *this = o;
        coeffs_[0] += q;
    } else {
        mismatch(order_, o.order_);
    }
    return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) { return *this += -o; }

CycScalar& CycScalar::operator*=(const CycScalar& o) {
    if (order_ != o.order_) {
        if (o.is_rational()) {
            const Rational q = o.coeffs_[0];
            for (auto& c : coeffs_) c *= q;
            return *this;
        }
        if (is_rational()) {
            const Rational q = coeffs_[0];
            *this = o;
            for (auto& c : coeffs_) c *= q;
            return *this;
        }
        mismatch(order_, o.order_);
    }
    if (coeffs_.size() == 1) {
        coeffs_[0] *= o.coeffs_[0];
        return *this;
    }
    std::vector<Rational> prod(2 * coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (o.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    coeffs_ = std::move(prod);
    reduce();
    return *this;
}

CycScalar& CycScalar::operator/=(const CycScalar& o) { return *this *= o.inverse(); }

bool operator==(const CycScalar& a, const CycScalar& b) {
    if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
    if (a.is_rational() && b.is_rational()) return a.coeffs_[0] == b.coeffs_[0];
    return false;
}

CycScalar CycScalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    if (is_rational()) {
        CycScalar out = *this;
        out.coeffs_[0] = 1 / coeffs_[0];
        return out;
    }
    // Extended Euclid: s*a + t*phi = g with g a nonzero constant.
    const IntPoly& phi_int = cyclotomic_polynomial(order_);
    RatPoly phi(phi_int.begin(), phi_int.end());
    RatPoly a = coeffs_;
    trim(a);
    RatPoly r0 = phi, r1 = a;
    RatPoly s0 = {}, s1 = {1};
    while (r1.size() > 1) {
        auto [q, rem] = poly_divmod(r0, r1);
        RatPoly s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) throw DivisionByZero("element is not invertible modulo Phi_r");
    const Rational g = r1[0];
    for (auto& c : s1) c /= g;
    return CycScalar(order_, s1);
}

CycScalar CycScalar::pow(long e) const {
    CycScalar base = e < 0 ? inverse() : *this;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    CycScalar out(order_, Rational(1));
    while (n) {
        if (n & 1UL) out *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return out;
}

std::string CycScalar::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << "*";
        os << "z";
        if (k > 1) os << "^" << k;
    }
    if (first) return "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycScalar& s) { return os << s.str(); }

CycScalar cyc_mul(const CycScalar& a, const CycScalar& b) {
    if (a.order() != b.order()) mismatch(a.order(), b.order());
    return a * b;
}

CycScalar cyc_inverse(const CycScalar& a) { return a.inverse(); }

namespace {

class ScalarParser {
public:
    ScalarParser(std::string_view s, int order) : s_(s), order_(order) {}

    CycScalar parse() {
        CycScalar v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) {
        throw ParseError("scalar '" + std::string(s_) + "': " + why);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    CycScalar expr() {
        CycScalar v = term();
        for (;;) {
            if (accept('+')) {
                v += term();
            } else if (accept('-')) {
                v -= term();
            } else {
                return v;
            }
        }
    }
    CycScalar term() {
        CycScalar v = factor();
        for (;;) {
            if (accept('*')) {
                v *= factor();
            } else if (accept('/')) {
                CycScalar d = factor();
                if (d.is_zero()) fail("division by zero");
                v /= d;
            } else {
                return v;
            }
        }
    }
    CycScalar factor() {
        if (accept('-')) return -factor();
        if (accept('+')) return factor();
        CycScalar base = primary();
        if (accept('^')) {
            skip();
            bool neg = accept('-');
            long e = integer_literal();
            base = base.pow(neg ? -e : e);
        }
        return base;
    }
    long integer_literal() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return std::stol(std::string(s_.substr(start, pos_ - start)));
    }
    CycScalar primary() {
        skip();
        if (accept('(')) {
            CycScalar v = expr();
            if (!accept(')')) fail("missing ')'");
            return v;
        }
        if (pos_ < s_.size() && (s_[pos_] == 'z' || s_[pos_] == 'Z')) {
            ++pos_;
            return CycScalar::zeta(order_, 1);
        }
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number, 'z' or '('");
        Integer n(std::string(s_.substr(start, pos_ - start)));
        return CycScalar(order_, Rational(n));
    }

    std::string_view s_;
    int order_;
    std::size_t pos_ = 0;
};

}  // namespace

CycScalar parse_scalar(std::string_view text, int order) {
    return ScalarParser(text, order).parse();
}

}  // namespace rspin
