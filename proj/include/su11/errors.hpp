#pragma once

#include <stdexcept>
#include <string>

namespace su11 {

/// Base class for every domain error raised by the library. `name()` is the
/// stable identifier reported by the CLI on standard error.
class Error : public std::runtime_error {
public:
    Error(const char* name, const std::string& what)
        : std::runtime_error(what), name_(name) {}

    const char* name() const noexcept { return name_; }

private:
    const char* name_;
};

#define SU11_DEFINE_ERROR(Type)                                              \
    class Type : public Error {                                              \
    public:                                                                  \
        explicit Type(const std::string& what) : Error(#Type, what) {}       \
    }

SU11_DEFINE_ERROR(InvalidLabel);
SU11_DEFINE_ERROR(DeterminantViolation);
SU11_DEFINE_ERROR(InvalidParams);
SU11_DEFINE_ERROR(BoundaryConjugacyClass);
SU11_DEFINE_ERROR(UnsupportedClass);
SU11_DEFINE_ERROR(SingularAngle);
SU11_DEFINE_ERROR(InvalidDamping);

#undef SU11_DEFINE_ERROR

}  // namespace su11
