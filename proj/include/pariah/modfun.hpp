#pragma once

#include "pariah/qseries.hpp"

namespace pariah::modfun {

using qseries::FracSeries;

enum class SeriesId { J, T3, T6, FON, FON3A, F15, HURWITZ, THETA0, THETA1 };

const char* series_name(SeriesId id);
SeriesId series_from_name(const std::string& name);
/// Smallest Gamma_0(N) the function lives on.
int series_level(SeriesId id);

struct NamedSeries {
    SeriesId id;
    FracSeries series;
    int level;
    Rat weight;
};

/// j(tau) from the eta quotient
///   eta(t)^24/eta(2t)^24 + 4096 eta(t)^24/eta(t/2)^24
///   - 4096 eta(t/2)^24 eta(2t)^24 / eta(t)^48 + 768,
/// expanded exactly: q^-1 + 744 + 196884 q + ...
NamedSeries j_series(long prec);

/// T3 = eta(t)^12/eta(3t)^12 + 12, normalized principal modulus for Gamma_0(3).
NamedSeries t3_series(long prec);
/// T6 = eta(t)^5 eta(3t) / (eta(2t) eta(6t)^5) + 5, for Gamma_0(6).
NamedSeries t6_series(long prec);

/// f^ON = j^2/2 - (1489/2) j + 80256 = q^-2/2 - q^-1/2 + O(q).
NamedSeries fon_series(long prec);
/// f^ON_3A = T3^2/2 - T3/2 - 54 = q^-2/2 - q^-1/2 + O(q).
NamedSeries fon3a_series(long prec);

/// Weight-2 newform of level 15: eta(t) eta(3t) eta(5t) eta(15t) = q - q^2 - ...
NamedSeries f15_series(long prec);

/// Hurwitz class number generating function -1/12 + q^3/3 + q^4/2 + q^7 + ...
/// built from the quadratic-form enumerator.
NamedSeries hurwitz_series(long prec);

/// The vector-valued order-3 McKay-Thompson series (F_0, F_1): F_0 carries
/// the coefficients C(D) at q^{|D|/4} for D = 0 mod 4, F_1 for D = 1 mod 4.
struct VectorPair {
    FracSeries comp0;
    FracSeries comp1;
};

/// Solve the 2x2 linear system over the series ring
///   F0 theta0 + F1 theta1 = q d/dq T3
///   F0/theta0^3 + F1/theta1^3 = -(T6-5)^2 (T6+7)(T6^2 + 25/4 T6 + 35/4)
///                                / ((T6+3)^2 (T6+4)^2)
/// by explicit elimination. prec is the number of integer q-steps resolved
/// past the leading term; substituting the solution back into both equations
/// leaves residual zero on the window.
VectorPair fon_mt_3a(long prec = 30);

/// Coefficient C_3A(D) read from the solved pair; always an integer.
Int c3a_coeff(const VectorPair& f, long D);
Int c3a_coeff(long D, long prec = 30);

}  // namespace pariah::modfun
