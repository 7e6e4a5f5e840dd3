// Error types shared by the text-format readers.

#ifndef PPATTACH_ERRORS_HPP
#define PPATTACH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ppattach {

// Malformed input in a corpus or model file. line() is 1-based,
// 0 when the failure is not tied to a single line.
class FormatError : public std::runtime_error {
public:
    FormatError(std::size_t line, const std::string& message)
        : std::runtime_error(line > 0
              ? "line " + std::to_string(line) + ": " + message
              : message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// A query whose result the model leaves undefined (e.g. a ratio with a
// zero denominator outside its guarded domain).
class UndefinedResultError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ppattach

#endif  // PPATTACH_ERRORS_HPP
