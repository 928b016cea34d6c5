#pragma once

#include <stdexcept>
#include <string>

namespace buratti {

// Error categories used across the workbench. Callers that care about the
// failure mode switch on code() instead of parsing messages.
enum class errc {
    invalid_edge,         // self-loop where an edge was expected
    domain,               // label or length outside its legal range
    non_invertible,       // multiplier k with gcd(k, p) != 1
    usage,                // caller broke an interface contract
    precondition,         // operation requires primality or similar
    parse,                // malformed multiset grammar or record
    invalid_realization,  // candidate is not structurally a tree/path
    size,                 // instance too large for exhaustive treatment
    no_progress,          // improvement step not applicable here
    io,                   // file problems
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace buratti
