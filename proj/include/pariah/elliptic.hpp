#pragma once

#include <vector>

#include "pariah/qseries.hpp"

namespace pariah::elliptic {

/// Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q
/// with integer coefficients; short models have a1 = a2 = a3 = 0.
struct WeierstrassCurve {
    Int a1, a2, a3, a4, a6;

    static WeierstrassCurve short_model(const Int& A, const Int& B) {
        return WeierstrassCurve{0, 0, 0, A, B};
    }
    bool is_short() const { return a1 == 0 && a2 == 0 && a3 == 0; }

    Int b2() const { return a1 * a1 + 4 * a2; }
    Int b4() const { return a1 * a3 + 2 * a4; }
    Int b6() const { return a3 * a3 + 4 * a6; }
    Int b8() const { return a1 * a1 * a6 - a1 * a3 * a4 + 4 * a2 * a6 + a2 * a3 * a3 - a4 * a4; }
};

/// Delta = -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6; throws SingularCurve when 0.
Int discriminant(const WeierstrassCurve& e);

/// 1728 * 4A^3 / (4A^3 + 27B^2) for a short model.
Rat j_invariant(const WeierstrassCurve& e);

/// The D-th quadratic twist families of the paper:
/// E15 x D : y^2 = x^3 - 12987 D^2 x - 263466 D^3
/// E14 x D : y^2 = x^3 +  5805 D^2 x - 285714 D^3
WeierstrassCurve twist15(const Int& D);
WeierstrassCurve twist14(const Int& D);

/// Number of projective points of the mod-p reduction, infinity included,
/// on the model as given. Naive enumeration for small p, quadratic-character
/// sums otherwise.
long count_points_mod_p(const WeierstrassCurve& e, long p);
/// a_E(p) = p + 1 - #E(F_p).
long ap(const WeierstrassCurve& e, long p);

/// Affine substitution x -> mx*x + r, y -> my*y + sy*x + t carrying e onto
/// emin after dividing through by divisor. Verified as an exact polynomial
/// identity.
struct XSub {
    Int mx, r;
};
struct YSub {
    Int my, sy, t;
};
bool verify_minimal_substitution(const WeierstrassCurve& e, const WeierstrassCurve& emin,
                                 const XSub& xs, const YSub& ys, const Int& divisor);

struct RationalPoint {
    bool infinity = true;
    Rat x, y;

    static RationalPoint at_infinity() { return RationalPoint{}; }
    static RationalPoint affine(Rat x, Rat y) { return RationalPoint{false, std::move(x), std::move(y)}; }
    bool operator==(const RationalPoint& o) const {
        if (infinity || o.infinity) return infinity == o.infinity;
        return x == o.x && y == o.y;
    }
};

bool is_on_curve(const WeierstrassCurve& e, const RationalPoint& p);
/// Chord-tangent addition; throws PointNotOnCurve unless both points lie on e.
RationalPoint point_add(const WeierstrassCurve& e, const RationalPoint& p, const RationalPoint& q);
RationalPoint point_neg(const WeierstrassCurve& e, const RationalPoint& p);
RationalPoint point_mul(const WeierstrassCurve& e, long n, const RationalPoint& p);
/// Order of p when at most `cap`, else 0.
long point_order(const WeierstrassCurve& e, const RationalPoint& p, long cap = 12);

/// Torsion subgroup of a short integral model by the Nagell-Lutz search
/// (candidates y = 0 or y^2 | disc), each candidate validated by exact point
/// arithmetic with order cap 12. Returns the cyclic decomposition, d1 | d2,
/// e.g. {} trivial, {n} cyclic, {2, n} = Z/2 x Z/n.
std::vector<long> torsion_subgroup(const WeierstrassCurve& e);
/// The torsion points themselves (affine ones; infinity omitted).
std::vector<RationalPoint> torsion_points(const WeierstrassCurve& e);

bool is_prime(long p);

}  // namespace pariah::elliptic
