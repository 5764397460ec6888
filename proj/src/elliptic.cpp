#include "pariah/elliptic.hpp"

#include <algorithm>
#include <map>

namespace pariah::elliptic {

namespace {

long mod_l(const Int& v, long p) {
    Int r = v % p;
    long x = static_cast<long>(r.get_si());
    return x < 0 ? x + p : x;
}

}  // namespace

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Int discriminant(const WeierstrassCurve& e) {
    Int b2 = e.b2(), b4 = e.b4(), b6 = e.b6(), b8 = e.b8();
    Int d = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
    if (d == 0) throw SingularCurve("discriminant vanishes");
    return d;
}

Rat j_invariant(const WeierstrassCurve& e) {
    if (!e.is_short()) throw Error("j_invariant: short model expected");
    Int num = 4 * e.a4 * e.a4 * e.a4;
    Int den = num + 27 * e.a6 * e.a6;
    if (den == 0) throw SingularCurve("4A^3 + 27B^2 = 0");
    Rat j = Rat(1728) * Rat(num) / Rat(den);
    j.canonicalize();
    return j;
}

WeierstrassCurve twist15(const Int& D) {
    if (D == 0) throw Error("twist15: D must be nonzero");
    return WeierstrassCurve::short_model(-12987 * D * D, -263466 * D * D * D);
}

WeierstrassCurve twist14(const Int& D) {
    if (D == 0) throw Error("twist14: D must be nonzero");
    return WeierstrassCurve::short_model(5805 * D * D, -285714 * D * D * D);
}

long count_points_mod_p(const WeierstrassCurve& e, long p) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p));
    long a1 = mod_l(e.a1, p), a2 = mod_l(e.a2, p), a3 = mod_l(e.a3, p), a4 = mod_l(e.a4, p),
         a6 = mod_l(e.a6, p);
    if (p < 50) {
        long n = 1;  // infinity
        for (long x = 0; x < p; ++x)
            for (long y = 0; y < p; ++y) {
                long lhs = (y * y + a1 * x * y + a3 * y) % p;
                long rhs = (((x * x % p) * x % p) + a2 * x % p * x % p + a4 * x + a6) % p;
                if ((lhs - rhs) % p == 0) ++n;
            }
        return n;
    }
    // complete the square (p odd): (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
    long b2 = mod_l(e.b2(), p), b4 = mod_l(e.b4(), p), b6 = mod_l(e.b6(), p);
    std::vector<signed char> chi(static_cast<size_t>(p), -1);
    chi[0] = 0;
    for (long r = 1; r < p; ++r) chi[static_cast<size_t>(r * r % p)] = 1;
    long n = 1 + p;
    for (long x = 0; x < p; ++x) {
        long g = (4 * ((x * x % p) * x % p) % p + b2 * (x * x % p) % p + 2 * b4 % p * x % p + b6) % p;
        n += chi[static_cast<size_t>(g)];
    }
    return n;
}

long ap(const WeierstrassCurve& e, long p) { return p + 1 - count_points_mod_p(e, p); }

bool verify_minimal_substitution(const WeierstrassCurve& e, const WeierstrassCurve& emin,
                                 const XSub& xs, const YSub& ys, const Int& divisor) {
    if (divisor == 0) return false;
    // substitute x -> mx X + r, y -> my Y + sy X + t into
    //   y^2 + a1 xy + a3 y - x^3 - a2 x^2 - a4 x - a6
    // and compare, coefficient by coefficient in X, Y, against divisor times
    // the corresponding polynomial for emin.
    std::map<std::pair<int, int>, Int> lhs;  // (deg X, deg Y) -> coefficient
    auto acc = [&lhs](int dx, int dy, const Int& c) { lhs[{dx, dy}] += c; };
    const Int &mx = xs.mx, &r = xs.r, &my = ys.my, &sy = ys.sy, &t = ys.t;
    // y^2 = (my Y + sy X + t)^2
    acc(0, 2, my * my);
    acc(1, 1, 2 * my * sy);
    acc(0, 1, 2 * my * t);
    acc(2, 0, sy * sy);
    acc(1, 0, 2 * sy * t);
    acc(0, 0, t * t);
    // a1 x y = a1 (mx X + r)(my Y + sy X + t)
    acc(1, 1, e.a1 * mx * my);
    acc(2, 0, e.a1 * mx * sy);
    acc(1, 0, e.a1 * (mx * t + r * sy));
    acc(0, 1, e.a1 * r * my);
    acc(0, 0, e.a1 * r * t);
    // a3 y
    acc(0, 1, e.a3 * my);
    acc(1, 0, e.a3 * sy);
    acc(0, 0, e.a3 * t);
    // -x^3 - a2 x^2 - a4 x - a6 with x = mx X + r
    acc(3, 0, -mx * mx * mx);
    acc(2, 0, -3 * mx * mx * r - e.a2 * mx * mx);
    acc(1, 0, -3 * mx * r * r - 2 * e.a2 * mx * r - e.a4 * mx);
    acc(0, 0, -r * r * r - e.a2 * r * r - e.a4 * r - e.a6);

    std::map<std::pair<int, int>, Int> rhs;
    rhs[{0, 2}] = divisor;
    rhs[{1, 1}] = divisor * emin.a1;
    rhs[{0, 1}] = divisor * emin.a3;
    rhs[{3, 0}] = -divisor;
    rhs[{2, 0}] = -divisor * emin.a2;
    rhs[{1, 0}] = -divisor * emin.a4;
    rhs[{0, 0}] = -divisor * emin.a6;

    for (const auto& [k, v] : lhs)
        if (v != (rhs.count(k) ? rhs[k] : Int(0))) return false;
    for (const auto& [k, v] : rhs)
        if (v != (lhs.count(k) ? lhs[k] : Int(0))) return false;
    return true;
}

bool is_on_curve(const WeierstrassCurve& e, const RationalPoint& p) {
    if (p.infinity) return true;
    Rat lhs = p.y * p.y + Rat(e.a1) * p.x * p.y + Rat(e.a3) * p.y;
    Rat rhs = p.x * p.x * p.x + Rat(e.a2) * p.x * p.x + Rat(e.a4) * p.x + Rat(e.a6);
    return lhs == rhs;
}

RationalPoint point_neg(const WeierstrassCurve& e, const RationalPoint& p) {
    if (p.infinity) return p;
    return RationalPoint::affine(p.x, -p.y - Rat(e.a1) * p.x - Rat(e.a3));
}

RationalPoint point_add(const WeierstrassCurve& e, const RationalPoint& p, const RationalPoint& q) {
    if (!is_on_curve(e, p) || !is_on_curve(e, q)) throw PointNotOnCurve("point_add");
    if (p.infinity) return q;
    if (q.infinity) return p;
    const Rat a1(e.a1), a2(e.a2), a3(e.a3), a4(e.a4);
    if (p.x == q.x && q.y == -p.y - a1 * p.x - a3) return RationalPoint::at_infinity();
    Rat lam;
    if (p.x == q.x) {
        lam = (Rat(3) * p.x * p.x + Rat(2) * a2 * p.x + a4 - a1 * p.y) /
              (Rat(2) * p.y + a1 * p.x + a3);
    } else {
        lam = (q.y - p.y) / (q.x - p.x);
    }
    Rat x3 = lam * lam + a1 * lam - a2 - p.x - q.x;
    Rat y3 = lam * (p.x - x3) - p.y - a1 * x3 - a3;
    x3.canonicalize();
    y3.canonicalize();
    return RationalPoint::affine(x3, y3);
}

RationalPoint point_mul(const WeierstrassCurve& e, long n, const RationalPoint& p) {
    if (n < 0) return point_mul(e, -n, point_neg(e, p));
    RationalPoint acc = RationalPoint::at_infinity();
    RationalPoint base = p;
    while (n > 0) {
        if (n & 1) acc = point_add(e, acc, base);
        n >>= 1;
        if (n) base = point_add(e, base, base);
    }
    return acc;
}

long point_order(const WeierstrassCurve& e, const RationalPoint& p, long cap) {
    RationalPoint acc = p;
    for (long k = 1; k <= cap; ++k) {
        if (acc.infinity) return k;
        acc = point_add(e, acc, p);
    }
    return 0;
}

namespace {

// integer roots of the monic cubic x^3 + A x + c, exactly: bisection on the
// pieces where f is monotone, direct checks on the short gaps around the
// critical points +-sqrt(-A/3)
std::vector<Int> integer_cubic_roots(const Int& A, const Int& c) {
    auto f = [&](const Int& x) -> Int { return x * x * x + A * x + c; };
    Int bound = 1 + std::max(abs(A), abs(c));  // Cauchy bound
    std::vector<Int> roots;

    auto bisect = [&](Int lo, Int hi) {  // f monotone on [lo, hi]
        if (lo > hi) return;
        Int flo = f(lo), fhi = f(hi);
        if (flo == 0) roots.push_back(lo);
        if (fhi == 0) roots.push_back(hi);
        if (flo == 0 || fhi == 0 || flo * fhi > 0) return;
        while (hi - lo > 1) {
            Int mid = (lo + hi) / 2;
            Int fm = f(mid);
            if (fm == 0) {
                roots.push_back(mid);
                return;
            }
            if ((flo < 0) == (fm < 0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
    };

    if (A >= 0) {
        bisect(-bound, bound);  // strictly increasing
    } else {
        Int m1 = sqrt(Int((-A) / 3));  // floor of the critical point
        Int m2 = m1 + 1;
        bisect(-bound, -m2);
        for (Int x : {Int(-m2), Int(-m1), m1, m2})
            if (f(x) == 0) roots.push_back(x);
        bisect(-m1, m1);
        bisect(m2, bound);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace

std::vector<RationalPoint> torsion_points(const WeierstrassCurve& e) {
    if (!e.is_short()) throw Error("torsion_subgroup: short integral model expected");
    const Int &A = e.a4, &B = e.a6;
    Int disc = abs(discriminant(e));

    // factor the discriminant; the curves in scope have smooth discriminants
    std::map<Int, long> fac;
    Int rem = disc;
    for (long d = 2; d <= 1000000 && rem > 1; d == 2 ? d = 3 : d += 2) {
        while (rem % d == 0) {
            ++fac[d];
            rem /= d;
        }
    }
    if (rem > 1) throw Error("torsion_subgroup: discriminant has a prime factor beyond 10^6");

    // candidate y values: y = 0 or y^2 | disc
    std::vector<Int> ys = {0};
    {
        std::vector<Int> stack = {1};
        for (const auto& [pr, ex] : fac) {
            std::vector<Int> next;
            for (const Int& v : stack) {
                Int pw(1);
                for (long k = 0; 2 * k <= ex; ++k) {
                    next.push_back(v * pw);
                    pw *= pr;
                }
            }
            stack = std::move(next);
            if (stack.size() > 200000) throw Error("torsion_subgroup: too many divisor candidates");
        }
        ys.insert(ys.end(), stack.begin(), stack.end());
    }

    std::vector<RationalPoint> found;
    auto push_if_torsion = [&](const Int& x, const Int& y) {
        RationalPoint p = RationalPoint::affine(Rat(x), Rat(y));
        if (!is_on_curve(e, p)) return;
        if (point_order(e, p, 12) == 0) return;  // non-torsion by the Mazur cap
        if (std::find(found.begin(), found.end(), p) == found.end()) found.push_back(p);
    };
    for (const Int& y : ys) {
        for (const Int& x : integer_cubic_roots(A, B - y * y)) {
            push_if_torsion(x, y);
            if (y != 0) push_if_torsion(x, -y);
        }
    }
    return found;
}

std::vector<long> torsion_subgroup(const WeierstrassCurve& e) {
    std::vector<RationalPoint> pts = torsion_points(e);
    long size = static_cast<long>(pts.size()) + 1;
    if (size == 1) return {};
    long two_torsion = 0, max_order = 1;
    for (const auto& p : pts) {
        long o = point_order(e, p, 12);
        two_torsion += (o == 2);
        max_order = std::max(max_order, o);
    }
    if (two_torsion == 3) {
        if (size % 2 != 0 || max_order != size / 2)
            throw Error("torsion_subgroup: inconsistent group structure");
        if (size == 4) return {2, 2};
        return {2, size / 2};
    }
    if (max_order != size) throw Error("torsion_subgroup: inconsistent group structure");
    return {size};
}

}  // namespace pariah::elliptic
