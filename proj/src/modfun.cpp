#include "pariah/modfun.hpp"

#include <map>

#include "pariah/quadforms.hpp"

namespace pariah::modfun {

using namespace qseries;

const char* series_name(SeriesId id) {
    switch (id) {
        case SeriesId::J: return "J";
        case SeriesId::T3: return "T3";
        case SeriesId::T6: return "T6";
        case SeriesId::FON: return "FON";
        case SeriesId::FON3A: return "FON3A";
        case SeriesId::F15: return "F15";
        case SeriesId::HURWITZ: return "HURWITZ";
        case SeriesId::THETA0: return "THETA0";
        case SeriesId::THETA1: return "THETA1";
    }
    return "?";
}

SeriesId series_from_name(const std::string& name) {
    static const std::map<std::string, SeriesId> table = {
        {"J", SeriesId::J},         {"T3", SeriesId::T3},
        {"T6", SeriesId::T6},       {"FON", SeriesId::FON},
        {"FON3A", SeriesId::FON3A}, {"F15", SeriesId::F15},
        {"HURWITZ", SeriesId::HURWITZ}, {"THETA0", SeriesId::THETA0},
        {"THETA1", SeriesId::THETA1}};
    auto it = table.find(name);
    if (it == table.end()) throw Error("unknown series id: " + name);
    return it->second;
}

int series_level(SeriesId id) {
    switch (id) {
        case SeriesId::T3:
        case SeriesId::FON3A: return 3;
        case SeriesId::T6: return 6;
        case SeriesId::F15: return 15;
        case SeriesId::HURWITZ:
        case SeriesId::THETA0:
        case SeriesId::THETA1: return 4;
        default: return 1;
    }
}

namespace {

// opening coefficients every construction is checked against
void check_registry(const FracSeries& s, std::initializer_list<std::pair<long, Rat>> expect,
                    const char* name) {
    for (const auto& [n, c] : expect) {
        if (s.coeff(n) != c)
            throw Error(std::string(name) + ": expansion disagrees with the registry at q^" +
                        std::to_string(n));
    }
}

void ensure_prec(const FracSeries& s, long prec, const char* name) {
    if (s.prec() < prec)
        throw PrecisionExhausted(std::string(name) + ": achieved window " + s.prec().get_str() +
                                 " is below the requested " + std::to_string(prec));
}

}  // namespace

NamedSeries j_series(long prec) {
    if (prec < 2) throw Error("j_series: prec must be at least 2");
    long p = prec + 8;  // margin consumed by the quotients below
    FracSeries e1 = eta_series(p);
    FracSeries e2 = eta_series_scaled(2, p);
    FracSeries eh = eta_series_scaled(1, 2, p);
    FracSeries e1_24 = pow_int(e1, 24);
    FracSeries e2_24 = pow_int(e2, 24);
    FracSeries eh_24 = pow_int(eh, 24);
    FracSeries j = div(e1_24, e2_24) + Rat(4096) * div(e1_24, eh_24) -
                   Rat(4096) * div(mul(eh_24, e2_24), pow_int(e1, 48)) +
                   FracSeries::constant(Rat(768), p);
    ensure_prec(j, prec, "j_series");
    j = j.truncated(prec).canonical();
    check_registry(j, {{-1, Rat(1)}, {0, Rat(744)}, {1, Rat(196884)}}, "j_series");
    return NamedSeries{SeriesId::J, j, 1, Rat(0)};
}

NamedSeries t3_series(long prec) {
    if (prec < 2) throw Error("t3_series: prec must be at least 2");
    long p = prec + 4;
    FracSeries t = div(pow_int(eta_series(p), 12), pow_int(eta_series_scaled(3, p), 12)) +
                   FracSeries::constant(Rat(12), p);
    ensure_prec(t, prec, "t3_series");
    t = t.truncated(prec).canonical();
    check_registry(t, {{-1, Rat(1)}, {0, Rat(0)}, {1, Rat(54)}}, "t3_series");
    return NamedSeries{SeriesId::T3, t, 3, Rat(0)};
}

NamedSeries t6_series(long prec) {
    if (prec < 2) throw Error("t6_series: prec must be at least 2");
    long p = prec + 4;
    FracSeries num = mul(pow_int(eta_series(p), 5), eta_series_scaled(3, p));
    FracSeries den = mul(eta_series_scaled(2, p), pow_int(eta_series_scaled(6, p), 5));
    FracSeries t = div(num, den) + FracSeries::constant(Rat(5), p);
    ensure_prec(t, prec, "t6_series");
    t = t.truncated(prec).canonical();
    check_registry(t, {{-1, Rat(1)}, {0, Rat(0)}, {1, Rat(6)}}, "t6_series");
    return NamedSeries{SeriesId::T6, t, 6, Rat(0)};
}

NamedSeries fon_series(long prec) {
    if (prec < 3) throw Error("fon_series: prec must be at least 3");
    FracSeries j = j_series(prec + 2).series;
    FracSeries f = Rat(1, 2) * mul(j, j) - Rat(1489, 2) * j +
                   FracSeries::constant(Rat(80256), prec + 1);
    ensure_prec(f, prec, "fon_series");
    f = f.truncated(prec).canonical();
    check_registry(f, {{-2, Rat(1, 2)}, {-1, Rat(-1, 2)}, {0, Rat(0)}}, "fon_series");
    return NamedSeries{SeriesId::FON, f, 1, Rat(0)};
}

NamedSeries fon3a_series(long prec) {
    if (prec < 3) throw Error("fon3a_series: prec must be at least 3");
    FracSeries t = t3_series(prec + 2).series;
    FracSeries f = Rat(1, 2) * mul(t, t) - Rat(1, 2) * t -
                   FracSeries::constant(Rat(54), prec + 1);
    ensure_prec(f, prec, "fon3a_series");
    f = f.truncated(prec).canonical();
    check_registry(f, {{-2, Rat(1, 2)}, {-1, Rat(-1, 2)}, {0, Rat(0)}}, "fon3a_series");
    return NamedSeries{SeriesId::FON3A, f, 3, Rat(0)};
}

NamedSeries f15_series(long prec) {
    if (prec < 5) throw Error("f15_series: prec must be at least 5");
    long p = prec + 1;
    FracSeries f = mul(mul(eta_series(p), eta_series_scaled(3, p)),
                       mul(eta_series_scaled(5, p), eta_series_scaled(15, p)));
    ensure_prec(f, prec, "f15_series");
    f = f.truncated(prec).canonical();
    check_registry(f, {{1, Rat(1)}, {2, Rat(-1)}, {3, Rat(-1)}, {4, Rat(-1)}}, "f15_series");
    return NamedSeries{SeriesId::F15, f, 15, Rat(2)};
}

NamedSeries hurwitz_series(long prec) {
    if (prec < 1) throw Error("hurwitz_series: prec must be at least 1");
    std::vector<Rat> coeffs(static_cast<size_t>(prec), Rat(0));
    coeffs[0] = Rat(-1, 12);
    for (long n = 3; n < prec; ++n) {
        long m = quadforms::mod_floor(-n, 4);
        if (m == 0 || m == 1) coeffs[static_cast<size_t>(n)] = quadforms::hurwitz_number(-n);
    }
    FracSeries h = FracSeries::from_parts(1, 0, prec, std::move(coeffs));
    return NamedSeries{SeriesId::HURWITZ, h, 4, Rat(3, 2)};
}

VectorPair fon_mt_3a(long prec) {
    if (prec < 2) throw Error("fon_mt_3a: prec must be at least 2");
    long p = prec + 6;
    FracSeries t3 = t3_series(p).series;
    FracSeries t6 = t6_series(p).series;
    FracSeries th0 = theta_r(0, p);
    FracSeries th1 = theta_r(1, p);

    FracSeries g1 = q_derivative(t3);
    auto shifted = [&](const FracSeries& s, long c) {
        return s + FracSeries::constant(Rat(c), p);
    };
    FracSeries num = mul(mul(pow_int(shifted(t6, -5), 2), shifted(t6, 7)),
                         mul(t6, t6) + Rat(25, 4) * t6 + FracSeries::constant(Rat(35, 4), p));
    FracSeries den = mul(pow_int(shifted(t6, 3), 2), pow_int(shifted(t6, 4), 2));
    FracSeries g2 = neg(div(num, den));

    // eliminate: Delta = th0 th1^-3 - th1 th0^-3 has leading term q^{-3/4}/8
    FracSeries th0i3 = pow_int(invert(th0), 3);
    FracSeries th1i3 = pow_int(invert(th1), 3);
    FracSeries delta = mul(th0, th1i3) - mul(th1, th0i3);
    FracSeries f0 = div(mul(g1, th1i3) - mul(g2, th1), delta);
    FracSeries f1 = div(mul(g2, th0) - mul(g1, th0i3), delta);

    f0 = f0.canonical();
    f1 = f1.canonical();
    if (f0.prec() < prec || f1.prec() < prec)
        throw PrecisionExhausted("fon_mt_3a: solution resolves fewer than " +
                                 std::to_string(prec) + " q-steps");
    check_registry(f0, {{-1, Rat(-1)}, {0, Rat(2)}, {1, Rat(6)}}, "fon_mt_3a");
    return VectorPair{f0.truncated(prec), f1.truncated(prec)};
}

Int c3a_coeff(const VectorPair& f, long D) {
    long m = quadforms::mod_floor(D, 4);
    if (D >= 0 || m > 1) throw NotADiscriminant("D = " + std::to_string(D));
    Rat c = (m == 0) ? f.comp0.coeff(-D / 4) : f.comp1.coeff(-D, 4);
    if (c.get_den() != 1)
        throw NonIntegralCoefficient("C_3A(" + std::to_string(D) + ") = " + c.get_str());
    return c.get_num();
}

Int c3a_coeff(long D, long prec) {
    long need = (-D) / 4 + 2;
    return c3a_coeff(fon_mt_3a(std::max(prec, need)), D);
}

}  // namespace pariah::modfun
