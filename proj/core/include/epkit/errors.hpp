#pragma once

#include <stdexcept>
#include <string>

namespace epkit {

// Caller handed us something outside an operation's contract.
struct precondition_error : std::invalid_argument {
    explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

// An internal guarantee failed even though the contract was honoured.
struct invariant_violation : std::logic_error {
    explicit invariant_violation(const std::string& what) : std::logic_error(what) {}
};

// A guarantee the underlying theorem promises for fully reduced graphs did not
// hold on this instance.  The solver reports the exact failed check instead of
// guessing a certificate.
struct theorem_gap : std::runtime_error {
    explicit theorem_gap(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool ok, const std::string& what) {
    if (!ok) throw precondition_error(what);
}

inline void ensure(bool ok, const std::string& what) {
    if (!ok) throw invariant_violation(what);
}

} // namespace epkit
