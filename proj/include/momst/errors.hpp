#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace momst {

enum class InstanceErrorKind {
    syntax,
    disconnected,
    unsupported_size,
    negative_cost,
    invalid_spec,
};

const char* to_string(InstanceErrorKind kind) noexcept;

// Raised while reading, validating or generating an instance. Syntax errors
// carry a 1-based line and column; other kinds leave them at 0.
class InstanceError : public std::runtime_error {
public:
    InstanceError(InstanceErrorKind kind, const std::string& what, std::size_t line = 0,
                  std::size_t column = 0);

    InstanceErrorKind kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    InstanceErrorKind kind_;
    std::size_t line_;
    std::size_t column_;
};

// A solver or reduction detected a broken internal invariant.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace momst
