#include "pariah/singmod.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>

namespace pariah::singmod {

namespace {

using BigFloat = boost::multiprecision::cpp_bin_float_50;

const BigFloat& big_pi() {
    static const BigFloat pi = atan(BigFloat(1)) * 4;
    return pi;
}

struct BComplex {
    BigFloat re, im;
};

BComplex operator+(const BComplex& a, const BComplex& b) { return {a.re + b.re, a.im + b.im}; }
BComplex operator-(const BComplex& a, const BComplex& b) { return {a.re - b.re, a.im - b.im}; }
BComplex operator*(const BComplex& a, const BComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
BComplex operator/(const BComplex& a, const BComplex& b) {
    BigFloat n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

double abs_d(const BComplex& a) {
    BigFloat m = sqrt(a.re * a.re + a.im * a.im);
    return m.convert_to<double>() * (1 + 1e-12) + 1e-300;
}

BComplex cexp(const BComplex& a) {
    BigFloat m = exp(a.re);
    return {m * cos(a.im), m * sin(a.im)};
}

// relative slop per arithmetic step of cpp_bin_float_50
constexpr double kEps = 1e-45;

/// complex value with a propagated absolute error bound
struct Tracked {
    BComplex v;
    double err = 0.0;
};

Tracked t_const(double x) { return {{BigFloat(x), BigFloat(0)}, 0.0}; }
Tracked t_const(const Rat& x) {
    BigFloat num(x.get_num().get_str());
    BigFloat den(x.get_den().get_str());
    return {{num / den, BigFloat(0)}, 0.0};
}

Tracked operator+(const Tracked& a, const Tracked& b) {
    Tracked r{a.v + b.v, a.err + b.err};
    r.err += kEps * abs_d(r.v);
    return r;
}
Tracked operator-(const Tracked& a, const Tracked& b) {
    Tracked r{a.v - b.v, a.err + b.err};
    r.err += kEps * abs_d(r.v);
    return r;
}
Tracked operator*(const Tracked& a, const Tracked& b) {
    Tracked r{a.v * b.v, abs_d(a.v) * b.err + abs_d(b.v) * a.err + a.err * b.err};
    r.err += kEps * abs_d(r.v);
    return r;
}
Tracked operator/(const Tracked& a, const Tracked& b) {
    double bb = abs_d(b.v);
    if (b.err >= bb) throw NonConvergent("division by a value smaller than its error bound");
    Tracked r{a.v / b.v, (a.err * bb + abs_d(a.v) * b.err) / (bb * (bb - b.err))};
    r.err += kEps * abs_d(r.v);
    return r;
}
Tracked t_pow(const Tracked& a, long k) {
    Tracked r = t_const(1.0);
    Tracked base = a;
    while (k > 0) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}
Tracked t_scale(const Tracked& a, const Rat& w) {
    Tracked r = a * t_const(w);
    return r;
}

/// eta(tau) with a rigorous geometric tail bound; near machine precision.
Tracked eta_tracked(const BComplex& tau) {
    double imt = tau.im.convert_to<double>();
    if (!(imt > 0.01)) throw NonConvergent("eta: Im(tau) must exceed 0.01");
    // q24 = exp(i pi tau / 12) = q^{1/24}
    BComplex q24 = cexp({-big_pi() * tau.im / 12, big_pi() * tau.re / 12});
    double r = abs_d(q24);
    if (r >= 1.0) throw NonConvergent("eta: |q^{1/24}| >= 1");
    BComplex sum{0, 0};
    BComplex t = q24;                  // q24^{n^2}
    BComplex u = q24 * q24;            // q24^2
    BComplex s = t * u;                // q24^{2n+1}
    long n = 1;
    double tail;
    const long cap = 400000;
    for (;;) {
        long m = n % 12;
        if (m == 1 || m == 11)
            sum = sum + t;
        else if (m == 5 || m == 7)
            sum = sum - t;
        // tail over indices > n: exponents grow by at least 2n+3 each step
        double lead = std::pow(r, static_cast<double>(n + 1) * (n + 1));
        double ratio = std::pow(r, 2.0 * n + 3);
        tail = lead / (1.0 - ratio);
        if (tail < 1e-42 && n >= 12) break;
        if (++n > cap) throw NonConvergent("eta: partial sum did not meet the tail target");
        t = t * s;
        s = s * u;
    }
    return {sum, tail + kEps * static_cast<double>(n) * (abs_d(sum) + 1.0)};
}

Tracked eta_at(const BComplex& tau, long mul_num, long mul_den = 1) {
    return eta_tracked({tau.re * mul_num / mul_den, tau.im * mul_num / mul_den});
}

Tracked j_tracked(const BComplex& tau) {
    Tracked e1_24 = t_pow(eta_at(tau, 1), 24);
    Tracked e2_24 = t_pow(eta_at(tau, 2), 24);
    Tracked eh_24 = t_pow(eta_at(tau, 1, 2), 24);
    Tracked c4096 = t_const(4096.0);
    return e1_24 / e2_24 + c4096 * (e1_24 / eh_24) - c4096 * ((eh_24 * e2_24) / (e1_24 * e1_24)) +
           t_const(768.0);
}

Tracked t3_tracked(const BComplex& tau) {
    return t_pow(eta_at(tau, 1), 12) / t_pow(eta_at(tau, 3), 12) + t_const(12.0);
}

Tracked t6_tracked(const BComplex& tau) {
    return (t_pow(eta_at(tau, 1), 5) * eta_at(tau, 3)) /
               (eta_at(tau, 2) * t_pow(eta_at(tau, 6), 5)) +
           t_const(5.0);
}

Tracked fn_tracked(SeriesId id, const BComplex& tau) {
    switch (id) {
        case SeriesId::J: return j_tracked(tau);
        case SeriesId::T3: return t3_tracked(tau);
        case SeriesId::T6: return t6_tracked(tau);
        case SeriesId::FON: {
            Tracked j = j_tracked(tau);
            return t_const(Rat(1, 2)) * j * j - t_const(Rat(1489, 2)) * j + t_const(80256.0);
        }
        case SeriesId::FON3A: {
            Tracked t = t3_tracked(tau);
            return t_const(Rat(1, 2)) * t * t - t_const(Rat(1, 2)) * t - t_const(54.0);
        }
        default:
            throw Error("fn_numeric: no CM evaluator for series " +
                        std::string(modfun::series_name(id)));
    }
}

BComplex to_big(std::complex<double> z) { return {BigFloat(z.real()), BigFloat(z.imag())}; }

BComplex tau_big(const quadforms::CMPoint& p) {
    BigFloat a(p.a.get_str()), b(p.b.get_str());
    BigFloat root = sqrt(BigFloat(-p.D));
    return {-b / (2 * a), root / (2 * a)};
}

std::optional<Rat> try_round(const Tracked& t, double tol, const std::vector<long>& denominators) {
    double re = t.v.re.convert_to<double>();
    double im = t.v.im.convert_to<double>();
    for (long den : denominators) {
        double scaled = re * den;
        if (std::abs(scaled) > 9e15) continue;
        Rat cand(Int(static_cast<long>(std::llround(scaled))), Int(den));
        cand.canonicalize();
        BigFloat cb(cand.get_num().get_str());
        cb /= BigFloat(cand.get_den().get_str());
        double dist = abs_d({t.v.re - cb, t.v.im});
        (void)im;
        if (dist + t.err < tol) return cand;
    }
    return std::nullopt;
}

CMValueReport report_of(const Tracked& t, double tol, const std::vector<long>& dens) {
    CMValueReport r;
    r.value = {t.v.re.convert_to<double>(), t.v.im.convert_to<double>()};
    r.tail_bound = t.err;
    r.rounded = try_round(t, tol, dens);
    return r;
}

// level compatibility: the classes used by trace must be invariant under the
// function's group
void check_level(SeriesId id, long N) {
    int lvl = modfun::series_level(id);
    if (lvl == 4 || lvl == 15 || N % lvl != 0)
        throw Error(std::string("trace: ") + modfun::series_name(id) + " lives on Gamma_0(" +
                    std::to_string(lvl) + "), not compatible with level " + std::to_string(N));
}

struct ClassPoint {
    quadforms::CMPoint tau;
    Rat weight;
    quadforms::QuadForm form;
    long r;  // residue for level reps, 0 at level 1
};

std::vector<ClassPoint> class_points(long N, long D) {
    std::vector<ClassPoint> out;
    if (N == 1) {
        quadforms::ClassList cl = quadforms::enumerate_reduced(D);
        for (size_t i = 0; i < cl.reps.size(); ++i)
            out.push_back({quadforms::tau_of(cl.reps[i]), cl.weights[i], cl.reps[i], 0});
    } else {
        quadforms::LevelClassList lr = quadforms::level_reps(N, D);
        if (!lr.square_root_exists)
            throw NoSquareRoot("r^2 = " + std::to_string(D) + " mod " + std::to_string(4 * N) +
                               " is insoluble");
        for (const auto& rep : lr.reps)
            out.push_back({quadforms::tau_of(rep.rep), rep.weight, rep.rep, rep.r});
    }
    return out;
}

// calibrated so that twisted_trace(J, -15, 5) = +85995
constexpr int kTwistedSign = -1;

}  // namespace

CMValueReport eta_numeric(std::complex<double> tau, double tol) {
    Tracked t = eta_tracked(to_big(tau));
    if (t.err >= tol) throw NonConvergent("eta: error bound exceeds the requested tolerance");
    return report_of(t, tol, {1});
}

CMValueReport fn_numeric(SeriesId id, std::complex<double> tau, double tol) {
    return report_of(fn_tracked(id, to_big(tau)), tol, {1});
}

CMValueReport fn_numeric(SeriesId id, const quadforms::CMPoint& tau, double tol) {
    return report_of(fn_tracked(id, tau_big(tau)), tol, {1});
}

CMValueReport trace(SeriesId id, long N, long D, double tol) {
    check_level(id, N);
    Tracked sum = t_const(0.0);
    for (const ClassPoint& cp : class_points(N, D))
        sum = sum + t_scale(fn_tracked(id, tau_big(cp.tau)), cp.weight);
    if (sum.err >= tol) throw NonConvergent("trace: error bound exceeds the requested tolerance");
    CMValueReport r = report_of(sum, tol, {1, 2, 3, 6});
    if (!r.rounded)
        throw RoundingFailed("trace: no rational with denominator dividing 6 within " +
                             std::to_string(tol));
    return r;
}

CMValueReport twisted_trace(SeriesId id, long D, long D0, double tol) {
    check_level(id, 1);
    if (D0 <= 0 || !quadforms::is_fundamental(D0))
        throw Error("twisted_trace: D0 must be a positive fundamental discriminant");
    Tracked sum = t_const(0.0);
    for (const ClassPoint& cp : class_points(1, D)) {
        int chi = quadforms::genus_char(cp.form, D0);
        sum = sum + t_scale(fn_tracked(id, tau_big(cp.tau)), cp.weight * chi);
    }
    Tracked root{{sqrt(BigFloat(D0)), BigFloat(0)}, 0.0};
    root.err = kEps * abs_d(root.v);
    Tracked res = t_scale(sum / root, Rat(kTwistedSign));
    if (res.err >= tol)
        throw NonConvergent("twisted_trace: error bound exceeds the requested tolerance");
    CMValueReport r = report_of(res, tol, {1});
    if (!r.rounded) throw RoundingFailed("twisted_trace: no nearby integer");
    return r;
}

CMValueReport twisted_trace_level(SeriesId id, long N, long D, double tol) {
    check_level(id, N);
    quadforms::LevelClassList lr = quadforms::level_reps(N, D);
    if (!lr.square_root_exists) throw NoSquareRoot("no residue r with r^2 = D mod 4N");
    long r0 = 0;
    for (const auto& rep : lr.reps) r0 = std::max(r0, rep.r);
    bool has_both = false;
    for (const auto& rep : lr.reps) has_both = has_both || rep.r != r0;
    if (r0 <= 0 || !has_both)
        throw NoSquareRoot("twisted_trace_level: needs the two residues +-r");
    Tracked sum = t_const(0.0);
    for (const auto& rep : lr.reps) {
        Rat sgn = (rep.r == r0) ? rep.weight : -rep.weight;
        sum = sum + t_scale(fn_tracked(id, tau_big(quadforms::tau_of(rep.rep))), sgn);
    }
    // divide by sqrt(D) = i sqrt(|D|)
    Tracked root{{BigFloat(0), sqrt(BigFloat(-D))}, 0.0};
    root.err = kEps * abs_d(root.v);
    Tracked res = sum / root;
    if (res.err >= tol)
        throw NonConvergent("twisted_trace_level: error bound exceeds the requested tolerance");
    CMValueReport r = report_of(res, tol, {1});
    if (!r.rounded) throw RoundingFailed("twisted_trace_level: no nearby integer");
    return r;
}

Int c3a_via_traces(long D, double tol, bool cross_check) {
    if (D >= 0 || !quadforms::is_fundamental(D))
        throw NotAdmissible("c3a_via_traces: D must be a negative fundamental discriminant");
    Rat tr1 = quadforms::trace_one(1, D);
    Rat tr3 = quadforms::trace_one(3, D);
    if (tr3 == 0) throw NoSquareRoot("c3a_via_traces: r^2 = D mod 12 is insoluble");
    CMValueReport t3a = trace(SeriesId::FON3A, 3, D, tol);
    Rat total = Rat(12) * (tr1 - tr3) + *t3a.rounded;
    total.canonicalize();
    if (total.get_den() != 1)
        throw NonIntegralCoefficient("c3a_via_traces: combination is not an integer: " +
                                     total.get_str());
    Int result = total.get_num();
    if (cross_check) {
        Int series = modfun::c3a_coeff(D, std::max(30L, (-D) / 4 + 2));
        if (series != result)
            throw CrossCheckFailed("c3a(" + std::to_string(D) + "): traces give " +
                                   result.get_str() + ", series gives " + series.get_str());
    }
    return result;
}

}  // namespace pariah::singmod
