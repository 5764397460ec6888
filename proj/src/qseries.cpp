#include "pariah/qseries.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pariah::qseries {

namespace {

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

// Count of nonzero coefficients, used to pick the sparser factor in mul.
long nonzero_count(const std::vector<Rat>& c) {
    long n = 0;
    for (const auto& x : c)
        if (x != 0) ++n;
    return n;
}

}  // namespace

FracSeries::FracSeries(long prec, long denom) : denom_(denom), lo_(0), prec_(prec * denom) {
    if (denom_ <= 0) throw Error("FracSeries: denominator must be positive");
    if (prec_ < 0) { lo_ = prec_; }
    c_.assign(static_cast<size_t>(prec_ - lo_), Rat(0));
}

FracSeries FracSeries::constant(const Rat& c, long prec) {
    FracSeries s(prec, 1);
    if (prec > 0) s.c_[0] = c;
    return s;
}

FracSeries FracSeries::monomial(const Rat& c, long num, long den, long prec) {
    FracSeries s;
    s.denom_ = den;
    s.lo_ = std::min(num, prec * den);
    s.prec_ = prec * den;
    s.c_.assign(static_cast<size_t>(s.prec_ - s.lo_), Rat(0));
    if (num < s.prec_) s.c_[num - s.lo_] = c;
    return s;
}

FracSeries FracSeries::from_parts(long denom, long lo, long prec_num, std::vector<Rat> coeffs) {
    if (denom <= 0) throw Error("FracSeries: denominator must be positive");
    if (static_cast<long>(coeffs.size()) != prec_num - lo)
        throw Error("FracSeries: coefficient count does not match window");
    FracSeries s;
    s.denom_ = denom;
    s.lo_ = lo;
    s.prec_ = prec_num;
    s.c_ = std::move(coeffs);
    return s;
}

long FracSeries::order_num() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return lo_ + static_cast<long>(i);
    return prec_;
}

bool FracSeries::known_at(long num, long den) const {
    if (denom_ % den != 0) {
        // exponent off this lattice: known (zero) iff below the bound
        return Rat(num, den) < Rat(prec_, denom_);
    }
    return num * (denom_ / den) < prec_;
}

Rat FracSeries::coeff(long num, long den) const {
    if (denom_ % den != 0) {
        if (Rat(num, den) >= Rat(prec_, denom_))
            throw PrecisionExhausted("coefficient of q^" + std::to_string(num) + "/" +
                                     std::to_string(den) + " beyond truncation");
        return Rat(0);  // off-lattice exponents never carry a term
    }
    long n = num * (denom_ / den);
    if (n >= prec_)
        throw PrecisionExhausted("coefficient of q^" + std::to_string(num) + "/" +
                                 std::to_string(den) + " beyond truncation");
    if (n < lo_) return Rat(0);
    return c_[n - lo_];
}

FracSeries FracSeries::with_denom(long new_denom) const {
    if (new_denom % denom_ != 0) throw Error("with_denom: lattice must refine");
    long k = new_denom / denom_;
    if (k == 1) return *this;
    FracSeries r;
    r.denom_ = new_denom;
    r.lo_ = lo_ * k;
    r.prec_ = prec_ * k;
    r.c_.assign(static_cast<size_t>(r.prec_ - r.lo_), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i * k] = c_[i];
    return r;
}

FracSeries FracSeries::truncated(long new_prec) const {
    long p = new_prec * denom_;
    if (p >= prec_) return *this;
    FracSeries r = *this;
    r.prec_ = std::max(p, lo_);
    r.c_.resize(static_cast<size_t>(r.prec_ - r.lo_));
    return r;
}

FracSeries FracSeries::canonical() const {
    long g = denom_;
    for (size_t i = 0; i < c_.size() && g > 1; ++i)
        if (c_[i] != 0) g = std::gcd(g, lo_ + static_cast<long>(i));
    g = std::abs(g);
    if (g <= 1) return *this;
    FracSeries r;
    r.denom_ = denom_ / g;
    // round the window inward: floor for prec, ceil for lo
    auto fdiv = [](long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); };
    auto cdiv = [](long a, long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); };
    r.lo_ = cdiv(lo_, g);
    r.prec_ = fdiv(prec_, g);
    if (r.prec_ < r.lo_) r.prec_ = r.lo_;
    r.c_.assign(static_cast<size_t>(r.prec_ - r.lo_), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        long idx = (lo_ + static_cast<long>(i)) / g;  // exact: g divides every nonzero exponent
        if (idx >= r.prec_) continue;                 // dropped by the rounded-down window
        r.c_[idx - r.lo_] = c_[i];
    }
    return r;
}

std::string FracSeries::str(long max_terms) const {
    std::ostringstream os;
    long shown = 0;
    bool first = true;
    for (size_t i = 0; i < c_.size() && shown < max_terms; ++i) {
        const Rat& c = c_[i];
        if (c == 0) continue;
        long n = lo_ + static_cast<long>(i);
        Rat a = c;
        if (!first) {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        long g = std::gcd(std::abs(n), denom_);
        long en = n / g, ed = denom_ / g;
        if (en == 0) {
            os << a;
        } else {
            if (a != 1) os << a << " ";
            os << "q";
            if (!(en == 1 && ed == 1)) {
                os << "^" << en;
                if (ed != 1) os << "/" << ed;
            }
        }
        ++shown;
    }
    if (first) os << "0";
    long g = std::gcd(std::abs(prec_), denom_);
    os << " + O(q^" << prec_ / g;
    if (denom_ / g != 1) os << "/" << denom_ / g;
    os << ")";
    return os.str();
}

FracSeries add(const FracSeries& a, const FracSeries& b) {
    long d = lcm_long(a.denom_, b.denom_);
    FracSeries x = a.with_denom(d), y = b.with_denom(d);
    FracSeries r;
    r.denom_ = d;
    r.prec_ = std::min(x.prec_, y.prec_);
    r.lo_ = std::min({x.lo_, y.lo_, r.prec_});
    r.c_.assign(static_cast<size_t>(r.prec_ - r.lo_), Rat(0));
    for (long n = x.lo_; n < std::min(x.prec_, r.prec_); ++n) r.at(n) = x.c_[n - x.lo_];
    for (long n = y.lo_; n < std::min(y.prec_, r.prec_); ++n) r.at(n) += y.c_[n - y.lo_];
    return r;
}

FracSeries neg(const FracSeries& a) {
    FracSeries r = a;
    for (auto& c : r.c_) c = -c;
    return r;
}

FracSeries sub(const FracSeries& a, const FracSeries& b) { return add(a, neg(b)); }

FracSeries mul(const FracSeries& a, const FracSeries& b) {
    long d = lcm_long(a.denom_, b.denom_);
    FracSeries x = a.with_denom(d), y = b.with_denom(d);
    // effective lowest exponents skip known-zero leading coefficients
    long ea = x.order_num(), eb = y.order_num();
    FracSeries r;
    r.denom_ = d;
    r.prec_ = std::min(x.prec_ + eb, y.prec_ + ea);
    r.lo_ = std::min(ea + eb, r.prec_);
    r.c_.assign(static_cast<size_t>(r.prec_ - r.lo_), Rat(0));
    if (x.is_zero() || y.is_zero()) return r;
    if (nonzero_count(x.c_) > nonzero_count(y.c_)) {
        std::swap(x, y);
        std::swap(ea, eb);
    }
    Rat tmp;
    for (long n = ea; n < x.prec_; ++n) {
        const Rat& cx = x.c_[n - x.lo_];
        if (cx == 0) continue;
        long mmax = std::min(y.prec_, r.prec_ - n);
        for (long m = eb; m < mmax; ++m) {
            const Rat& cy = y.c_[m - y.lo_];
            if (cy == 0) continue;
            tmp = cx * cy;
            r.at(n + m) += tmp;
        }
    }
    return r;
}

FracSeries mul(const FracSeries& a, const Rat& c) {
    FracSeries r = a;
    for (auto& x : r.c_) x *= c;
    return r;
}

FracSeries invert(const FracSeries& a) {
    long e = a.order_num();
    if (e == a.prec_num()) throw ZeroLeadingCoefficient("cannot invert a series with no nonzero term");
    long w = a.prec_num() - e;  // window length in lattice steps
    const Rat c0 = a.coeff(e, a.denom());
    // write a = c0 q^{e/d} (1 + n1 x + n2 x^2 + ...) with x = q^{1/d};
    // the inverse of the normalized part satisfies m0 = 1, mk = -sum nj m_{k-j}
    std::vector<Rat> n(static_cast<size_t>(w));
    for (long j = 1; j < w; ++j) n[j] = a.coeff(e + j, a.denom()) / c0;
    std::vector<Rat> m(static_cast<size_t>(w));
    m[0] = 1;
    for (long k = 1; k < w; ++k) {
        Rat s(0);
        for (long j = 1; j <= k; ++j)
            if (n[j] != 0 && m[k - j] != 0) s += n[j] * m[k - j];
        m[k] = -s;
    }
    std::vector<Rat> coeffs(static_cast<size_t>(w));
    for (long k = 0; k < w; ++k) coeffs[k] = m[k] / c0;
    return FracSeries::from_parts(a.denom(), -e, w - e, std::move(coeffs));
}

FracSeries div(const FracSeries& a, const FracSeries& b) { return mul(a, invert(b)); }

FracSeries pow_int(const FracSeries& a, long k) {
    if (k < 0) return pow_int(invert(a), -k);
    if (k == 0) {
        // 1 + O(q^w) where w is a's window length measured from its lead
        FracSeries r = FracSeries::monomial(Rat(1), 0, a.denom(),
                                            std::max(0L, (a.prec_num() - a.lo()) / a.denom()));
        return r;
    }
    FracSeries base = a;
    FracSeries result;
    bool have = false;
    long kk = k;
    while (kk > 0) {
        if (kk & 1) {
            result = have ? mul(result, base) : base;
            have = true;
        }
        kk >>= 1;
        if (kk) base = mul(base, base);
    }
    return result;
}

FracSeries q_derivative(const FracSeries& a) {
    FracSeries r = a;
    for (size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] *= Rat(r.lo_ + static_cast<long>(i), r.denom_);
    return r;
}

FracSeries rescale(const FracSeries& a, long k) { return rescale(a, k, 1); }

FracSeries rescale(const FracSeries& a, long num, long den) {
    if (num <= 0 || den <= 0) throw Error("rescale: factor must be positive");
    FracSeries r;
    r.denom_ = a.denom_ * den;
    r.lo_ = a.lo_ * num;
    r.prec_ = a.prec_ * num;
    r.c_.assign(static_cast<size_t>(r.prec_ - r.lo_), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i * num] = a.c_[i];
    return r.canonical();
}

bool agree_on_overlap(const FracSeries& a, const FracSeries& b) {
    long d = lcm_long(a.denom_, b.denom_);
    FracSeries x = a.with_denom(d), y = b.with_denom(d);
    long p = std::min(x.prec_, y.prec_);
    long lo = std::min(x.lo_, y.lo_);
    for (long n = lo; n < p; ++n) {
        Rat cx = (n < x.lo_) ? Rat(0) : x.c_[n - x.lo_];
        Rat cy = (n < y.lo_) ? Rat(0) : y.c_[n - y.lo_];
        if (cx != cy) return false;
    }
    return true;
}

FracSeries eta_series(long prec) { return eta_series_scaled(1, 1, prec); }

FracSeries eta_series_scaled(long k, long prec) { return eta_series_scaled(k, 1, prec); }

FracSeries eta_series_scaled(long knum, long kden, long prec) {
    if (prec <= 0) throw Error("eta_series: prec must be positive");
    if (knum <= 0 || kden <= 0) throw Error("eta_series: scale must be positive");
    long d = 24 * kden;
    std::vector<Rat> coeffs(static_cast<size_t>(prec * d), Rat(0));
    // term at q^{knum n^2 / (24 kden)}, numerator knum n^2 on the 1/d lattice
    for (long n = 1; knum * n * n < prec * d; ++n) {
        long r = n % 12;
        int c = (r == 1 || r == 11) ? 1 : (r == 5 || r == 7) ? -1 : 0;
        if (c) coeffs[static_cast<size_t>(knum * n * n)] = c;
    }
    return FracSeries::from_parts(d, 0, prec * d, std::move(coeffs)).canonical();
}

FracSeries theta_r(int r, long prec) {
    if (r != 0 && r != 1) throw Error("theta_r: r must be 0 or 1");
    if (prec <= 0) throw Error("theta_r: prec must be positive");
    std::vector<Rat> coeffs(static_cast<size_t>(4 * prec), Rat(0));
    for (long n = r; n * n < 4 * prec; n += 2)
        coeffs[static_cast<size_t>(n * n)] = (n == 0) ? 1 : 2;  // n and -n coincide only at 0
    return FracSeries::from_parts(4, 0, 4 * prec, std::move(coeffs)).canonical();
}

FracSeries theta1_mr(long m, long r, long prec) {
    if (m <= 0) throw Error("theta1_mr: m must be positive");
    if (prec <= 0) throw Error("theta1_mr: prec must be positive");
    long d = 4 * m;
    std::vector<Rat> coeffs(static_cast<size_t>(prec * d), Rat(0));
    // both arms n = r + 2mk, k in Z; each term weighted by n itself
    for (long n = r; n * n < prec * d; n += 2 * m)
        if (n != 0) coeffs[static_cast<size_t>(n * n)] += n;
    for (long n = r - 2 * m; n * n < prec * d; n -= 2 * m)
        if (n != 0) coeffs[static_cast<size_t>(n * n)] += n;
    return FracSeries::from_parts(d, 0, prec * d, std::move(coeffs)).canonical();
}

}  // namespace pariah::qseries
