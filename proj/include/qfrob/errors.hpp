#pragma once

#include <stdexcept>
#include <string>

namespace qfrob {

/// A documented precondition on a value (closedness, degree, arity) failed.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A verification postcondition failed; `detail` names the offending entry.
class VerificationError : public std::runtime_error {
public:
    VerificationError(const std::string& what, std::string detail)
        : std::runtime_error(what + ": " + detail), detail_(std::move(detail)) {}
    const std::string& detail() const { return detail_; }

private:
    std::string detail_;
};

}  // namespace qfrob
