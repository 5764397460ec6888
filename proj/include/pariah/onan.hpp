#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pariah/lfunc.hpp"
#include "pariah/modfun.hpp"

namespace pariah::onan {

/// Admissibility for the congruence criterion: D a negative fundamental
/// discriminant with D = 1 mod 3 and D = 2 or 3 mod 5 (residues in [0, m)).
struct Admissibility {
    bool ok = false;
    std::string reasons;  // why not, empty when ok
};

Admissibility admissible(long D);

enum class ShaStatement { NotApplicable, Applies };

struct SelmerVerdict {
    long D = 0;
    bool admissible = false;
    long h = 0;                       // class number
    Int c3a_series;                   // series route
    std::optional<Int> c3a_traces;    // CM-trace route, when requested
    int congruence = 0;               // (C_3A(D) + h(D)) mod 5 in [0, 5)
    bool sel5_nontrivial = false;     // congruence == 0
    std::optional<lfunc::LValueReport> l_twist;
    ShaStatement sha_statement = ShaStatement::NotApplicable;
    bool sha_mod5_divides = false;    // meaningful only when sha_statement == Applies

    bool operator==(const SelmerVerdict& o) const;
};

struct SelmerOptions {
    bool with_traces = false;  // cross-check the series route against CM traces
    bool with_lvalue = false;  // compute L(E15 x D, 1) and the Sha clause
    long prec = 30;            // q-steps for the series route
    double tol = 1e-6;         // rounding budget for traces
    double l_tol = 1e-6;       // L-value tolerance
};

/// The Theorem 7.1 bundle for one admissible D. The Sha clause is emitted
/// only when the twisted L-value is certified nonzero (|value| > 10 * tail).
SelmerVerdict selmer_criterion(long D, const SelmerOptions& opts = {});
/// Same, reusing an already-solved McKay-Thompson pair for the series route.
SelmerVerdict selmer_criterion(long D, const modfun::VectorPair& mt, const SelmerOptions& opts);

/// Verdicts for every admissible D with D_min <= D <= D_max < 0, ordered by
/// decreasing D; independent discriminants are evaluated on a worker pool.
std::vector<SelmerVerdict> scan(long D_min, long D_max, const SelmerOptions& opts = {});

/// Admissible discriminants in the range, ordered by decreasing D.
std::vector<long> admissible_in(long D_min, long D_max);

/// Paper-attested coefficients of the level-15 cusp form Ghat_15:
/// C15(-3)=1, C15(-8)=-2, C15(-15)=-1, C15(-20)=2. Never extrapolates.
Int g15_coeff(long D);

}  // namespace pariah::onan
