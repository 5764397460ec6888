#pragma once

#include <stdexcept>
#include <string>

namespace pariah {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define PARIAH_DEFINE_ERROR(Name)                                             \
    struct Name : Error {                                                     \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {}  \
    };

PARIAH_DEFINE_ERROR(ZeroLeadingCoefficient)
PARIAH_DEFINE_ERROR(NotADiscriminant)
PARIAH_DEFINE_ERROR(PrecisionExhausted)
PARIAH_DEFINE_ERROR(NonIntegralCoefficient)
PARIAH_DEFINE_ERROR(NotUnimodular)
PARIAH_DEFINE_ERROR(NotPositiveDefinite)
PARIAH_DEFINE_ERROR(NoSquareRoot)
PARIAH_DEFINE_ERROR(NoCoprimeRepresentation)
PARIAH_DEFINE_ERROR(NonConvergent)
PARIAH_DEFINE_ERROR(RoundingFailed)
PARIAH_DEFINE_ERROR(CrossCheckFailed)
PARIAH_DEFINE_ERROR(NotPrime)
PARIAH_DEFINE_ERROR(SingularCurve)
PARIAH_DEFINE_ERROR(PointNotOnCurve)
PARIAH_DEFINE_ERROR(InsufficientCoefficients)
PARIAH_DEFINE_ERROR(NotAdmissible)
PARIAH_DEFINE_ERROR(UnknownCoefficient)

#undef PARIAH_DEFINE_ERROR

}  // namespace pariah
