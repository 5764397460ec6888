#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "pariah/errors.hpp"

namespace pariah {

using Int = mpz_class;
using Rat = mpq_class;

namespace qseries {

/// Truncated Laurent series in q with exponents on the lattice (1/denom)*Z
/// and exact rational coefficients. A series knows the window on which its
/// coefficients are valid: exponents e with lo/denom <= e < prec/denom are
/// stored, everything at or beyond prec/denom is unknown (truncated).
///
/// Values are immutable after construction; all arithmetic returns new
/// series. Truncation bookkeeping is pessimistic: a result never claims a
/// wider window than the inputs can prove.
class FracSeries {
public:
    /// Zero series known on [0, prec) in q-units.
    explicit FracSeries(long prec = 0, long denom = 1);

    static FracSeries constant(const Rat& c, long prec);
    /// c * q^{num/den}, known up to q^{prec} (prec in q-units).
    static FracSeries monomial(const Rat& c, long num, long den, long prec);
    /// Assemble from raw parts; coeffs[i] is the coefficient of q^{(lo+i)/denom}.
    static FracSeries from_parts(long denom, long lo, long prec_num, std::vector<Rat> coeffs);

    long denom() const { return denom_; }
    /// Numerator of the lowest stored exponent.
    long lo() const { return lo_; }
    /// Numerator of the truncation bound: exponents >= prec_num/denom are unknown.
    long prec_num() const { return prec_; }
    Rat prec() const { return Rat(prec_, denom_); }

    /// Numerator (on this lattice) of the first nonzero exponent; prec_num()
    /// when the series vanishes on its whole window.
    long order_num() const;
    bool is_zero() const { return order_num() == prec_; }

    bool known_at(long num, long den = 1) const;
    /// Exact coefficient of q^{num/den}. Throws PrecisionExhausted when the
    /// exponent lies at or beyond the truncation bound.
    Rat coeff(long num, long den = 1) const;

    /// Same series on the finer lattice (1/new_denom)*Z; denom() must divide new_denom.
    FracSeries with_denom(long new_denom) const;
    /// Drop exponents >= new_prec (q-units); never widens the window.
    FracSeries truncated(long new_prec) const;
    /// Smallest equivalent lattice: divides denom by the gcd of all nonzero
    /// exponent numerators. The truncation bound rounds down (pessimistic).
    FracSeries canonical() const;

    std::string str(long max_terms = 16) const;

    friend FracSeries add(const FracSeries& a, const FracSeries& b);
    friend FracSeries neg(const FracSeries& a);
    friend FracSeries mul(const FracSeries& a, const FracSeries& b);
    friend FracSeries mul(const FracSeries& a, const Rat& c);
    friend FracSeries invert(const FracSeries& a);
    friend FracSeries q_derivative(const FracSeries& a);
    friend FracSeries rescale(const FracSeries& a, long k);
    friend FracSeries rescale(const FracSeries& a, long num, long den);
    friend bool agree_on_overlap(const FracSeries& a, const FracSeries& b);

private:
    long denom_;             // exponent lattice denominator, > 0
    long lo_;                // numerator of lowest stored exponent
    long prec_;              // numerator of truncation bound, lo_ <= prec_
    std::vector<Rat> c_;     // c_[i] is the coefficient of q^{(lo_+i)/denom_}

    Rat& at(long num) { return c_[num - lo_]; }
};

FracSeries add(const FracSeries& a, const FracSeries& b);
FracSeries neg(const FracSeries& a);
FracSeries sub(const FracSeries& a, const FracSeries& b);
FracSeries mul(const FracSeries& a, const FracSeries& b);
FracSeries mul(const FracSeries& a, const Rat& c);

/// Multiplicative inverse on the provable window: mul(a, invert(a)) = 1 + O(...).
/// Throws ZeroLeadingCoefficient when a has no nonzero term on its window.
FracSeries invert(const FracSeries& a);
FracSeries div(const FracSeries& a, const FracSeries& b);
/// a^k by square-and-multiply; negative k inverts first.
FracSeries pow_int(const FracSeries& a, long k);

/// q d/dq: termwise c q^e -> c e q^e.
FracSeries q_derivative(const FracSeries& a);

/// Substitute q -> q^k (builds f(k tau) from f(tau)).
FracSeries rescale(const FracSeries& a, long k);
/// Substitute q -> q^{num/den}; the lattice refines by den.
FracSeries rescale(const FracSeries& a, long num, long den);

/// True when the two series have equal coefficients on the intersection of
/// their windows.
bool agree_on_overlap(const FracSeries& a, const FracSeries& b);

inline FracSeries operator+(const FracSeries& a, const FracSeries& b) { return add(a, b); }
inline FracSeries operator-(const FracSeries& a, const FracSeries& b) { return sub(a, b); }
inline FracSeries operator-(const FracSeries& a) { return neg(a); }
inline FracSeries operator*(const FracSeries& a, const FracSeries& b) { return mul(a, b); }
inline FracSeries operator*(const FracSeries& a, const Rat& c) { return mul(a, c); }
inline FracSeries operator*(const Rat& c, const FracSeries& a) { return mul(a, c); }
inline FracSeries operator/(const FracSeries& a, const FracSeries& b) { return div(a, b); }

/// Dedekind eta via the Euler identity: sum over n > 0 of (12/n) q^{n^2/24},
/// where (12/n) is +1 for n = 1,11 mod 12 and -1 for n = 5,7 mod 12.
/// prec is in q-units.
FracSeries eta_series(long prec);
/// eta(k tau), exponents k n^2 / 24.
FracSeries eta_series_scaled(long k, long prec);
/// eta((knum/kden) tau); used for eta(tau/2), where the lattice refines to 1/48.
FracSeries eta_series_scaled(long knum, long kden, long prec);

/// theta_r = sum over n = r mod 2 of q^{n^2/4}, r in {0,1}.
FracSeries theta_r(int r, long prec);
/// theta^1_{m,r} = sum over n = r mod 2m of n q^{n^2/(4m)}.
FracSeries theta1_mr(long m, long r, long prec);

}  // namespace qseries
}  // namespace pariah
