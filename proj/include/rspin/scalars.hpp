#pragma once

// Exact scalars: rationals (GMP) and elements of cyclotomic fields Q(zeta_r).

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "rspin/errors.hpp"

namespace rspin {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// Integer polynomial, coefficients from the constant term upwards.
using IntPoly = std::vector<Integer>;

/// The r-th cyclotomic polynomial, obtained by dividing x^r - 1 by Phi_d for
/// every proper divisor d of r. Results are cached; the cache is thread-safe.
const IntPoly& cyclotomic_polynomial(int r);

int euler_phi(int r);

std::string to_string(const IntPoly& p, std::string_view var = "x");

/// Element of Q(zeta_r), stored as its canonical representative modulo Phi_r
/// (a polynomial in zeta of degree < phi(r)).
///
/// Binary operations require equal orders. A value that is a rational number
/// (all non-constant coefficients zero) is accepted against any order, since
/// Q sits inside every cyclotomic field; anything else throws OrderMismatch.
class CycScalar {
public:
    CycScalar();
    CycScalar(long v);  // NOLINT: implicit on purpose, rationals embed everywhere
    CycScalar(const Rational& q);  // NOLINT
    CycScalar(int order, const Rational& q);
    CycScalar(int order, std::vector<Rational> coeffs);

    /// zeta_r^k, k taken mod r.
    static CycScalar zeta(int order, long k = 1);

    int order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// Value as a rational; throws InvalidInput if not rational.
    Rational to_rational() const;

    /// Re-express inside Q(zeta_n); requires order() | n (or a rational value).
    CycScalar embed(int n) const;

    CycScalar operator-() const;
    CycScalar& operator+=(const CycScalar& o);
    CycScalar& operator-=(const CycScalar& o);
    CycScalar& operator*=(const CycScalar& o);
    CycScalar& operator/=(const CycScalar& o);

    friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
    friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
    friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }
    friend CycScalar operator/(CycScalar a, const CycScalar& b) { return a /= b; }

    friend bool operator==(const CycScalar& a, const CycScalar& b);
    friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// Phi_r. Throws DivisionByZero on 0.
    CycScalar inverse() const;

    CycScalar pow(long e) const;

    /// Textual form in the scalar syntax, e.g. "1 - 2*z^3", "3/2", "z".
    std::string str() const;

private:
    void reduce();
    int order_ = 1;
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycScalar& s);

CycScalar cyc_mul(const CycScalar& a, const CycScalar& b);
CycScalar cyc_inverse(const CycScalar& a);

/// Parses the scalar syntax used by the CLI and data files: rational
/// literals, `z` for zeta_order, powers `z^k`, products with `*`, sums and
/// differences. Examples: `3/2`, `z`, `z^2`, `1 - 2*z^3`, `-1/2*z`.
CycScalar parse_scalar(std::string_view text, int order);

}  // namespace rspin
