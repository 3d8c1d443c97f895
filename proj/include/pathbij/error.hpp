#pragma once

#include <stdexcept>
#include <string>

namespace pathbij {

// Input lies outside the domain of an operation (bad alphabet, violated
// precondition of a bijection, malformed composition, ...).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// An enumeration would produce more objects than the configured cap.
class cap_exceeded : public std::runtime_error {
public:
    cap_exceeded(const std::string& what, std::string estimate)
        : std::runtime_error(what), estimate_(std::move(estimate)) {}

    const std::string& estimate() const noexcept { return estimate_; }

private:
    std::string estimate_;
};

}  // namespace pathbij
