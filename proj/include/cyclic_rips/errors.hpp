#pragma once

#include <stdexcept>
#include <string>

namespace cyclic_rips {

/// Thrown when a computation contradicts a structural guarantee of the
/// library (e.g. a dismantling endpoint that is not a circulant core).
/// Catching one of these means either the input violated an unchecked
/// precondition or there is a bug; the CLI maps it to exit code 3.
class invariant_violation : public std::logic_error {
public:
    explicit invariant_violation(const std::string& what) : std::logic_error(what) {}
};

} // namespace cyclic_rips
