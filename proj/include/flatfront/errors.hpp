#pragma once

#include <stdexcept>
#include <string>

namespace flatfront {

/// Base class for all library errors. `kind()` is the stable machine-readable
/// name used in CLI error output; messages carry the offending values.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
    virtual const char* kind() const { return "Error"; }
};

#define FLATFRONT_DEFINE_ERROR(Name)                                \
    class Name : public Error {                                     \
    public:                                                         \
        using Error::Error;                                         \
        const char* kind() const override { return #Name; }         \
    }

FLATFRONT_DEFINE_ERROR(NonRegularCurve);
FLATFRONT_DEFINE_ERROR(VanishingCurvature);
FLATFRONT_DEFINE_ERROR(DualityViolation);
FLATFRONT_DEFINE_ERROR(GridTooCoarse);
FLATFRONT_DEFINE_ERROR(UmbilicDegenerate);
FLATFRONT_DEFINE_ERROR(DegenerateGram);
FLATFRONT_DEFINE_ERROR(NotOnSingularLocus);
FLATFRONT_DEFINE_ERROR(EmptySingularLocus);
FLATFRONT_DEFINE_ERROR(LinearSingularityPresent);
FLATFRONT_DEFINE_ERROR(PeriodConditionViolated);
FLATFRONT_DEFINE_ERROR(InvalidParameter);
FLATFRONT_DEFINE_ERROR(ParseError);
FLATFRONT_DEFINE_ERROR(IOError);
FLATFRONT_DEFINE_ERROR(NonFiniteVertex);
FLATFRONT_DEFINE_ERROR(DegenerateCausticExport);

#undef FLATFRONT_DEFINE_ERROR

class SchemaError : public Error {
public:
    explicit SchemaError(const std::string& key)
        : Error("config schema error at key \"" + key + "\""), key_(key) {}
    const char* kind() const override { return "SchemaError"; }
    const std::string& key() const { return key_; }

private:
    std::string key_;
};

}  // namespace flatfront
