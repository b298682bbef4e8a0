#pragma once

#include <stdexcept>
#include <string>

namespace kreweras {

// Raised when an exhaustive operation would exceed its configured cap.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when exact arithmetic that must be exact is not (signals a bug,
// e.g. a closed-form count whose division leaves a remainder).
class internal_inconsistency_error : public std::logic_error {
public:
    explicit internal_inconsistency_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace kreweras
