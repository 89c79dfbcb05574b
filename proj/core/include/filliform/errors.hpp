#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace filliform {

/* A precondition violated by user-supplied data. Carries a stable
 * machine-readable kind next to the human-readable detail; the CLI maps
 * these to exit code 1 and {"error": {"kind", "detail"}}. */
class DomainError : public std::runtime_error {
public:
    DomainError(std::string kind, std::string detail)
        : std::runtime_error(kind + ": " + detail),
          kind_(std::move(kind)),
          detail_(std::move(detail)) {}

    const std::string& kind() const { return kind_; }
    const std::string& detail() const { return detail_; }

private:
    std::string kind_;
    std::string detail_;
};

/* A violated internal invariant. Reaching one of these is a bug, not a
 * property of the input. */
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

/* Malformed input documents; the CLI maps these to exit code 2. */
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] inline void parse_fail(const std::string& what) { throw ParseError(what); }

[[noreturn]] inline void fail(std::string kind, std::string detail) {
    throw DomainError(std::move(kind), std::move(detail));
}

inline void require(bool cond, const char* kind, const char* detail) {
    if (!cond) throw DomainError(kind, detail);
}

inline void internal_check(bool cond, const char* what) {
    if (!cond) throw InternalError(what);
}

}  // namespace filliform
