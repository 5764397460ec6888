#pragma once

#include <complex>
#include <optional>

#include "pariah/modfun.hpp"
#include "pariah/quadforms.hpp"

namespace pariah::singmod {

using modfun::SeriesId;

/// A numerically evaluated modular-function value. tail_bound is a rigorous
/// upper bound on the total truncation and propagation error. rounded is set
/// only when a nearby exact rational fits inside the error budget; it is
/// absent rather than wrong.
struct CMValueReport {
    std::complex<double> value;
    double tail_bound = 0.0;
    std::optional<Rat> rounded;
};

/// Default budget below which rounding may fire.
inline constexpr double kDefaultTol = 1e-6;

/// Dedekind eta at tau by the Euler-identity partial sum, with a geometric
/// tail bound. Im(tau) must exceed 0.01.
CMValueReport eta_numeric(std::complex<double> tau, double tol = kDefaultTol);

/// One of J, T3, T6, FON, FON3A at an arbitrary point (eta quotients plus the
/// fixed polynomials, first-order error propagation).
CMValueReport fn_numeric(SeriesId id, std::complex<double> tau, double tol = kDefaultTol);
/// Same at an exact CM point; sqrt(|D|) is taken at working precision.
CMValueReport fn_numeric(SeriesId id, const quadforms::CMPoint& tau, double tol = kDefaultTol);

/// Trace of singular moduli: sum of weight * f(tau_Q) over the classes of
/// Q_N(D)/Gamma_0(N) (reduced forms when N = 1). The result must round to a
/// rational with denominator dividing 6 within the budget.
CMValueReport trace(SeriesId id, long N, long D, double tol = kDefaultTol);

/// Genus-character twisted trace at level 1:
///   sign * (1/sqrt(D0)) * sum of weight * chi_D0(Q) * f(tau_Q),
/// global sign calibrated once so that twisted_trace(J, -15, 5) = +85995.
CMValueReport twisted_trace(SeriesId id, long D, long D0, double tol = kDefaultTol);

/// Residue-signed twisted trace at level N > 1 over Q_N(D, +-r):
///   (1/sqrt(D)) * sum over classes of [f(tau_{Q,r}) - f(tau_{Q,-r})].
CMValueReport twisted_trace_level(SeriesId id, long N, long D, double tol = kDefaultTol);

/// The CM route to the order-3 McKay-Thompson coefficient:
///   C_3A(D) = 12 tr_1(1|D) - 12 tr_3(1|D) + tr_3(f3A|D),
/// the two class-count traces taken exactly. With cross_check set the result
/// is compared against the series route and CrossCheckFailed is raised on any
/// disagreement.
Int c3a_via_traces(long D, double tol = kDefaultTol, bool cross_check = false);

}  // namespace pariah::singmod
