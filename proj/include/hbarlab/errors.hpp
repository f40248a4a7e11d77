#pragma once

#include <stdexcept>
#include <string>

namespace hbarlab {

// Failure modes are exceptions. Each carries a human-readable message with
// the offending values; callers that can recover (e.g. by refining a grid)
// catch the specific type.

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define HBARLAB_DEFINE_ERROR(Name)                                \
    struct Name : Error {                                         \
        explicit Name(const std::string& msg) : Error(msg) {}     \
    }

// numeric core
HBARLAB_DEFINE_ERROR(DegenerateValue);
HBARLAB_DEFINE_ERROR(Undersampled);
HBARLAB_DEFINE_ERROR(QuadratureFailure);

// curves / tori
HBARLAB_DEFINE_ERROR(Infeasible);
HBARLAB_DEFINE_ERROR(DomainError);
HBARLAB_DEFINE_ERROR(OutOfChart);
HBARLAB_DEFINE_ERROR(ParameterOutOfRange);

// reduction
HBARLAB_DEFINE_ERROR(NotOnLevelSet);
HBARLAB_DEFINE_ERROR(OutOfDisk);
HBARLAB_DEFINE_ERROR(CurveTooLarge);
HBARLAB_DEFINE_ERROR(CurveHitsOrigin);

// disks
HBARLAB_DEFINE_ERROR(BadBasePoint);
HBARLAB_DEFINE_ERROR(DegenerateFrame);
HBARLAB_DEFINE_ERROR(BoundaryTouchesDivisor);
HBARLAB_DEFINE_ERROR(NotAZero);

// lattice
HBARLAB_DEFINE_ERROR(OutOfPolytope);

// dynamics
HBARLAB_DEFINE_ERROR(StepFailure);
HBARLAB_DEFINE_ERROR(ChartMismatch);
HBARLAB_DEFINE_ERROR(DoesNotFit);

#undef HBARLAB_DEFINE_ERROR

}  // namespace hbarlab
