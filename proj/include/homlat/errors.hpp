#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace homlat {

// Error taxonomy mirrors the CLI exit codes:
//   parse_error     -> exit 1 (malformed input, schema violations)
//   invariant_error -> exit 2 (well-formed input violating a domain invariant)
//   compute_error   -> exit 3 (valid input on which a computation is undefined)
// kind() carries a stable machine-readable tag, e.g. "NotPositiveDefinite".
class error : public std::runtime_error {
public:
    error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class parse_error : public error {
public:
    using error::error;
};

class invariant_error : public error {
public:
    using error::error;
};

class compute_error : public error {
public:
    using error::error;
};

}  // namespace homlat
