#include "pariah/lfunc.hpp"

#include <cmath>
#include <numeric>

#include "pariah/modfun.hpp"
#include "pariah/quadforms.hpp"

namespace pariah::lfunc {

namespace {

// tail of sum (a_n/n) e^{-cn} over n > M, with |a_n| <= 2n
double tail_bound(double c, long M) {
    double ratio = std::exp(-c);
    return 2.0 * std::exp(-c * static_cast<double>(M + 1)) / (1.0 - ratio);
}

}  // namespace

std::vector<Int> a_coeffs(long n_max) {
    if (n_max < 1) throw Error("a_coeffs: n_max must be positive");
    qseries::FracSeries f = modfun::f15_series(n_max + 1).series;
    std::vector<Int> out(static_cast<size_t>(n_max + 1), Int(0));
    for (long n = 1; n <= n_max; ++n) {
        Rat c = f.coeff(n);
        if (c.get_den() != 1) throw NonIntegralCoefficient("a_coeffs: a_" + std::to_string(n));
        out[static_cast<size_t>(n)] = c.get_num();
    }
    return out;
}

LValueReport l_value_at_1(const std::vector<Int>& coeffs, long N, int sign, double tol) {
    if (sign != 1 && sign != -1) throw Error("l_value_at_1: sign must be +-1");
    LValueReport rep;
    rep.sign = sign;
    if (sign == -1) return rep;  // (1 + sign) kills the sum exactly
    long M = static_cast<long>(coeffs.size()) - 1;
    if (M < 1) throw InsufficientCoefficients("no coefficients supplied");
    double c = 2.0 * M_PI / std::sqrt(static_cast<double>(N));
    double tail = 2.0 * tail_bound(c, M);  // (1+sign) factor
    if (!(tail < tol))
        throw InsufficientCoefficients("need more coefficients: tail " + std::to_string(tail) +
                                       " >= tol " + std::to_string(tol));
    double s = 0.0;
    for (long n = M; n >= 1; --n) {  // small terms first
        double a = coeffs[static_cast<size_t>(n)].get_d();
        if (a != 0.0) s += a / static_cast<double>(n) * std::exp(-c * static_cast<double>(n));
    }
    rep.value = 2.0 * s;
    rep.terms_used = M;
    rep.tail_estimate = tail;
    return rep;
}

LValueReport twisted_l_value(long D, double tol) {
    if (D >= 0 || !quadforms::is_fundamental(D))
        throw Error("twisted_l_value: D must be a negative fundamental discriminant");
    if (std::gcd(std::abs(D), 15L) != 1) throw Error("twisted_l_value: gcd(D, 15) must be 1");
    long N = 15 * D * D;
    int sign = quadforms::kronecker(Int(D), Int(-15));
    if (sign == -1) {
        LValueReport rep;
        rep.sign = -1;
        return rep;
    }
    double c = 2.0 * M_PI / std::sqrt(static_cast<double>(N));
    long M = 1;
    while (2.0 * tail_bound(c, M) >= tol / 4) {
        M *= 2;
        if (M > (1L << 22)) throw InsufficientCoefficients("twisted_l_value: tolerance unreachable");
    }
    std::vector<Int> base = a_coeffs(M);
    std::vector<Int> tw(base.size(), Int(0));
    for (long n = 1; n <= M; ++n)
        tw[static_cast<size_t>(n)] = base[static_cast<size_t>(n)] * quadforms::kronecker(Int(D), Int(n));
    return l_value_at_1(tw, N, sign, tol);
}

std::vector<ApComparison> modularity_check(const elliptic::WeierstrassCurve& e,
                                           const std::vector<Int>& coeffs, long p_max,
                                           long level) {
    std::vector<ApComparison> out;
    for (long p = 2; p <= p_max && p < static_cast<long>(coeffs.size()); ++p) {
        if (!elliptic::is_prime(p)) continue;
        ApComparison row;
        row.p = p;
        row.a_curve = elliptic::ap(e, p);
        row.a_form = coeffs[static_cast<size_t>(p)];
        row.match = (row.a_form == row.a_curve);
        row.bad_prime = (level % p == 0);
        out.push_back(row);
    }
    return out;
}

}  // namespace pariah::lfunc
