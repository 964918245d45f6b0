#pragma once

#include <stdexcept>
#include <string>

namespace pillowcase {

// Base for all typed errors.  `kind()` is a stable machine-readable tag used
// by the CLI error envelope.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define PILLOWCASE_DEFINE_ERROR(Name)                              \
    class Name : public Error {                                    \
    public:                                                        \
        explicit Name(const std::string& what) : Error(#Name, what) {} \
    }

PILLOWCASE_DEFINE_ERROR(NonCommutingPair);
PILLOWCASE_DEFINE_ERROR(TangencyUnresolved);
PILLOWCASE_DEFINE_ERROR(PointOnCurve);
PILLOWCASE_DEFINE_ERROR(LiftObstructed);
PILLOWCASE_DEFINE_ERROR(NotNormalizable);
PILLOWCASE_DEFINE_ERROR(WrongDeterminant);
PILLOWCASE_DEFINE_ERROR(NoFreeQuotient);
PILLOWCASE_DEFINE_ERROR(MissingPolynomial);
PILLOWCASE_DEFINE_ERROR(SelectionFailed);
PILLOWCASE_DEFINE_ERROR(InvalidTarget);
PILLOWCASE_DEFINE_ERROR(NoIntersection);
PILLOWCASE_DEFINE_ERROR(MatchingFailed);
PILLOWCASE_DEFINE_ERROR(ValidationFailed);
PILLOWCASE_DEFINE_ERROR(InvalidParameters);

#undef PILLOWCASE_DEFINE_ERROR

} // namespace pillowcase
