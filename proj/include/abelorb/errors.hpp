#pragma once

#include <stdexcept>
#include <string>

namespace abelorb {

/// Invalid input: bad type string, root outside an ideal, non-ANR node, ...
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// A mathematical invariant the algorithms rely on was observed to fail.
class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw DomainError(msg);
}

inline void ensure(bool cond, const std::string& msg) {
    if (!cond) throw InvariantViolation(msg);
}

}  // namespace abelorb
