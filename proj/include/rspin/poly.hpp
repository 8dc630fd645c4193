#pragma once

// Multivariate polynomials over Q(zeta_r) in named variables.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rspin/scalars.hpp"

namespace rspin {

using Monomial = std::vector<int>;

/// Graded reverse lexicographic order on exponent vectors of equal length.
bool grevlex_less(const Monomial& a, const Monomial& b);

struct GrevlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(b, a); }
};

/// Variables are kept sorted by name; terms with zero coefficient are never
/// stored. Iteration over terms() starts at the leading term.
class Poly {
public:
    using Terms = std::map<Monomial, CycScalar, GrevlexDescending>;

    Poly() = default;
    explicit Poly(std::vector<std::string> variables);
    Poly(const CycScalar& c);  // NOLINT: constants convert implicitly
    Poly(long c);              // NOLINT

    static Poly variable(const std::string& name);
    static Poly monomial(std::vector<std::string> variables, Monomial m, const CycScalar& c = 1);

    const std::vector<std::string>& variables() const { return vars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Index of `name` in variables(); -1 when absent.
    int index_of(const std::string& name) const;

    const Monomial& leading_monomial() const;
    const CycScalar& leading_coeff() const;
    CycScalar coeff(const Monomial& m) const;
    int total_degree() const;

    /// Same polynomial over a larger (sorted) variable list.
    Poly in_ring(const std::vector<std::string>& variables) const;
    /// Drops variables that do not occur.
    Poly trimmed() const;
    std::vector<std::string> used_variables() const;

    void add_term(const Monomial& m, const CycScalar& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const CycScalar& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const CycScalar& c) { return a *= c; }
    friend Poly operator*(const CycScalar& c, Poly a) { return a *= c; }
    /// Equal as polynomials, whatever the variable lists.
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(int e) const;
    Poly derivative(const std::string& var) const;
    /// Simultaneous substitution of variables by polynomials.
    Poly substitute(const std::map<std::string, Poly>& repl) const;
    /// x -> c * x for the listed variables.
    Poly scale_variables(const std::map<std::string, CycScalar>& scale) const;
    Poly rename(const std::map<std::string, std::string>& names) const;

    std::string str() const;

private:
    void align_with(Poly& o);
    std::vector<std::string> vars_;
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// Sorted union of variable lists.
std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b);

/// Rational coefficients, variables [A-Za-z][A-Za-z0-9_']*, `^` with
/// non-negative integer exponents, `*` (or juxtaposition), `+`, `-`,
/// parentheses. Example: `x^3 + 2*x*y - y'^2`.
Poly parse_poly(std::string_view text);

/// Name of the primed copy of a variable.
inline std::string primed(const std::string& var) { return var + "'"; }

/// (W(x_1..x_{i-1}, x'_i..x'_n) - W(x_1..x_i, x'_{i+1}..x'_n)) / (x'_i - x_i)
/// where x_i is the variable `var` of W; the division is exact.
Poly difference_quotient(const Poly& w, const std::string& var);

/// sum_i m_i w_i.
Rational weighted_degree(const Monomial& m, const std::vector<Rational>& weights);

/// Every monomial in `n` variables of weighted degree exactly `d` (weights
/// positive).
std::vector<Monomial> monomials_of_degree(const std::vector<Rational>& weights, const Rational& d);

}  // namespace rspin
