#pragma once

#include <vector>

#include "pariah/elliptic.hpp"
#include "pariah/qseries.hpp"

namespace pariah::lfunc {

/// Numerical L(1) obtained from the folded exponential sum
///   L_f(1) = (1 + sign) * sum_{n >= 1} (a_n / n) exp(-2 pi n / sqrt(N)),
/// sign = -w_N the functional-equation sign. tail_estimate bounds the
/// discarded tail using |a_n| <= 2n.
struct LValueReport {
    double value = 0.0;
    long terms_used = 0;
    int sign = 1;
    double tail_estimate = 0.0;
};

/// Fourier coefficients a_1..a_n_max of f15 from the exact eta product.
std::vector<Int> a_coeffs(long n_max);

LValueReport l_value_at_1(const std::vector<Int>& coeffs, long N, int sign, double tol);

/// L(E15 x D, 1) via twisted coefficients a_n (D|n), level 15 D^2, sign
/// (D|-15) (the twist of sign(f15) = -w_15 = +1). gcd(D, 15) = 1 required.
LValueReport twisted_l_value(long D, double tol);

struct ApComparison {
    long p;
    long a_curve;
    Int a_form;
    bool match;
    bool bad_prime;  // p divides the level
};

/// a_E(p) against a_f(p) for primes p <= p_max; primes dividing the level are
/// flagged (their Euler factor omits the p^{1-2s} term).
std::vector<ApComparison> modularity_check(const elliptic::WeierstrassCurve& e,
                                           const std::vector<Int>& coeffs, long p_max,
                                           long level = 15);

}  // namespace pariah::lfunc
