#pragma once

// Invariants of closed r-spin surfaces from a closed Lambda_r-Frobenius algebra.

#include <utility>
#include <vector>

#include "rspin/lambda_frobenius.hpp"

namespace rspin {

struct RSpinTorus {
    int r = 1;
    long a = 0, b = 0;
};

struct RSpinClosedSurface {
    int r = 1;
    int genus = 0;
    std::vector<std::pair<long, long>> handles;  // holonomies (a_k, b_k)
};

/// gcd(a, b, r) with gcd(0, 0, r) = r: the divisor d labelling T(d, 0).
int torus_normal_form(const RSpinTorus& t);

/// eps o mu_{-a,a} o (N_{-a}^{1-b} (x) 1) o delta_{-a,a} o eta.
CycScalar evaluate_torus(const LambdaFrobenius& alg, const RSpinTorus& t);

/// Handle operator C_c -> C_{c-2}:
/// mu_{-a,c+a-1} o (N_{-a}^{1-b} (x) 1) o delta_{-a,c+a-1}.
SuperMap handle_operator(const LambdaFrobenius& alg, long c, long a, long b);

/// eps o K_{a_g,b_g} o ... o K_{a_1,b_1} o eta. Requires r | 2g - 2
/// (Inadmissible otherwise) and genus == handles.size().
CycScalar evaluate_surface(const LambdaFrobenius& alg, const RSpinClosedSurface& s);

std::vector<int> divisors(int r);

/// (d, evaluate_torus(T(d, 0))) for every positive divisor d of r.
std::vector<std::pair<int, CycScalar>> all_torus_invariants(const LambdaFrobenius& alg);

}  // namespace rspin
