#pragma once

#include <stdexcept>
#include <string>

namespace lowop {

// Raised when an internal consistency check fails (an implementation bug,
// never a consequence of valid input): non-exact polynomial division,
// model dimension mismatch, a constructed witness that does not re-validate.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace lowop
