#pragma once
// Shared error taxonomy and resource guards.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hall {

// Exit-code mapping (see tools/hallcalc.cpp): check failures -> 1,
// usage/contract/bound -> 2, resource guards -> 3.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid mathematical input (inverting zero, non-prime field order, ...).
struct DomainError : Error {
    using Error::Error;
};

// Violated call contract: dimension mismatch, cyclic quiver, malformed data.
struct ContractError : Error {
    using Error::Error;
};

// A class or dimension vector falls outside the bounds of the active table.
struct BoundError : Error {
    using Error::Error;
};

// A configurable guard (state space, Hom enumeration, rewrite steps) tripped.
struct ResourceError : Error {
    using Error::Error;
};

// An internal cross-check failed: a division that must be exact was not,
// an Euler-form count came out negative, a solver self-check misfired.
struct ConsistencyError : Error {
    using Error::Error;
};

// Parse/IO problems at the CLI boundary.
struct ParseError : Error {
    using Error::Error;
};

struct Guards {
    std::uint64_t max_state_space = 8'000'000;   // total matrix tuples per table build
    std::uint64_t max_hom_enum = 1'000'000;      // morphism-space sweeps
    std::uint64_t max_rewrite_steps = 5'000'000; // rewriting engine work items
};

// Element of the Grothendieck group K_0: one integer per vertex, negatives allowed.
using DimVector = std::vector<int>;

inline DimVector dim_add(const DimVector& a, const DimVector& b) {
    DimVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline DimVector dim_sub(const DimVector& a, const DimVector& b) {
    DimVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline bool dim_is_zero(const DimVector& a) {
    for (int x : a)
        if (x != 0) return false;
    return true;
}

inline int dim_total(const DimVector& a) {
    int t = 0;
    for (int x : a) t += x;
    return t;
}

inline bool dim_leq(const DimVector& a, const DimVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

} // namespace hall
