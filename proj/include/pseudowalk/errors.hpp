#pragma once

#include <stdexcept>
#include <string>

namespace pw {

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SingularMatrix : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MissingValue : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct DegenerateNodes : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularSchur : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct HorizonTooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NearSingular : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require(bool ok, const std::string& what)
{
    if (!ok) throw DomainError(what);
}

} // namespace pw
