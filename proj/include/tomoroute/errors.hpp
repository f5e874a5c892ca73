#pragma once

#include <stdexcept>
#include <string>

namespace tomoroute {

/// Exact-solver size cap exceeded; callers should fall back to a larger-cap
/// method or the heuristic.
class SizeLimitError : public std::runtime_error {
public:
    explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed text input. Carries a 1-based line number when known.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Instance kind or edge-weight encoding we do not handle.
class UnsupportedFormatError : public std::runtime_error {
public:
    explicit UnsupportedFormatError(const std::string& what) : std::runtime_error(what) {}
};

/// Scaled weights would not be integral within tolerance.
class PrecisionError : public std::runtime_error {
public:
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace tomoroute
