#pragma once

#include <stdexcept>
#include <string>

namespace racecap {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define RACECAP_DEFINE_ERROR(Name)                    \
    class Name : public Error {                       \
    public:                                           \
        using Error::Error;                           \
    }

RACECAP_DEFINE_ERROR(InvalidGeometry);
RACECAP_DEFINE_ERROR(ZeroRadius);
RACECAP_DEFINE_ERROR(DegeneratePair);
RACECAP_DEFINE_ERROR(DomainError);
RACECAP_DEFINE_ERROR(GeometryError);
RACECAP_DEFINE_ERROR(OverlapError);
RACECAP_DEFINE_ERROR(SingularPoint);
RACECAP_DEFINE_ERROR(QuadratureFailure);
RACECAP_DEFINE_ERROR(TangencyNotFound);
RACECAP_DEFINE_ERROR(RayMissesRaceway);
RACECAP_DEFINE_ERROR(SolverDivergence);
RACECAP_DEFINE_ERROR(ZeroCapacitance);
RACECAP_DEFINE_ERROR(ConfigError);
RACECAP_DEFINE_ERROR(IoError);

#undef RACECAP_DEFINE_ERROR

} // namespace racecap
