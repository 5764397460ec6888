#pragma once

#include <optional>
#include <vector>

#include "pariah/qseries.hpp"

namespace pariah::quadforms {

/// Integer binary quadratic form A x^2 + B xy + C y^2.
struct QuadForm {
    Int a, b, c;

    Int disc() const { return b * b - 4 * a * c; }
    bool positive_definite() const { return a > 0 && disc() < 0; }
    /// Q(x, y)
    Int eval(const Int& x, const Int& y) const { return a * x * x + b * x * y + c * y * y; }
    bool operator==(const QuadForm& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator<(const QuadForm& o) const;
};

/// |B| <= A <= C with B >= 0 on the boundaries A = |B| and A = C.
bool is_reduced(const QuadForm& q);

/// Action Q(ax+by, cx+dy); requires ad - bc = 1.
QuadForm apply_sl2(const QuadForm& q, const Int& a, const Int& b, const Int& c, const Int& d);

/// The unique reduced form SL2(Z)-equivalent to q (Gauss reduction).
QuadForm reduce(QuadForm q);

/// One reduced representative per SL2(Z)-class of positive-definite forms of
/// discriminant D, imprimitive forms included, ordered by (A, B). The weight
/// of a class is 1 except 1/3 for multiples of x^2+xy+y^2 and 1/2 for
/// multiples of x^2+y^2 (the projectivized stabilizer orders).
struct ClassList {
    long D;
    std::vector<QuadForm> reps;
    std::vector<Rat> weights;
};

ClassList enumerate_reduced(long D);

/// Number of reduced classes of discriminant D.
long class_number(long D);
/// Stabilizer-weighted class count; reproduces -3 -> 1/3, -4 -> 1/2.
Rat hurwitz_number(long D);

/// D is the discriminant of Q(sqrt(D)): either D = 1 mod 4 and squarefree, or
/// D = 4d with d squarefree and d = 2,3 mod 4.
bool is_fundamental(long D);

/// Exact CM point tau_Q = (-B + sqrt(D)) / (2A), the upper half-plane root of
/// Q(x, 1) = 0; requires Q positive definite.
struct CMPoint {
    Int a, b;  // tau = (-b + i sqrt(|D|)) / (2a), a > 0
    long D;
};

CMPoint tau_of(const QuadForm& q);

/// A representative of one Gamma_0(N)-class in Q_N(D, r), labeled by the
/// reduced SL2(Z)-class its lift (A/N)x^2 + Bxy + (NC)y^2 belongs to.
struct LevelRep {
    QuadForm rep;     // A = 0 mod N, B = r mod 2N
    Rat weight;       // stabilizer weight of the class
    QuadForm source;  // reduced form the lift reduces to
    long r;           // residue mod 2N, normalized to (-N, N]
};

struct LevelClassList {
    long N;
    long D;
    bool square_root_exists;  // false iff r^2 = D mod 4N is insoluble
    std::vector<LevelRep> reps;
};

/// Representatives for Q_N(D, r)/Gamma_0(N) over all admissible residues r,
/// one per (reduced class, r). D must be fundamental for the lift bijection.
LevelClassList level_reps(long N, long D);

/// Weighted class count sum over Q_N(D)/Gamma_0(N); exact, no floats.
/// tr_one(1, D) equals hurwitz_number(D).
Rat trace_one(long N, long D);

/// Genus character chi_{D0}(Q) = Kronecker (D0 | n) for any represented value
/// n coprime to D0; D0 must be a fundamental discriminant with disc(Q)/D0 a
/// discriminant. Searches |x|,|y| <= 50 and cross-checks two distinct values.
int genus_char(const QuadForm& q, long D0);

/// Kronecker symbol (a | n), full generality.
int kronecker(const Int& a, const Int& n);

/// a mod m normalized into [0, m).
long mod_floor(long a, long m);

}  // namespace pariah::quadforms
