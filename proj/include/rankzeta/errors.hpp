#pragma once

#include <stdexcept>
#include <string>

namespace rankzeta {

// Enumeration would exceed the configured cap. Callers that can degrade
// gracefully (oracle matrices) report SKIP instead of failing.
class budget_exceeded : public std::runtime_error {
public:
    budget_exceeded(std::string what, std::string required_size)
        : std::runtime_error(what + " (required " + required_size + ")"),
          required(std::move(required_size)) {}
    std::string required;
};

// A mathematical identity that must hold by theorem failed to hold.
class consistency_error : public std::logic_error {
public:
    explicit consistency_error(const std::string& what) : std::logic_error(what) {}
};

// Enumeration caps, overridable via CLI/environment.
struct Budget {
    unsigned long long subspace_cap = 10'000'000ULL;  // subspaces of F_q^n per scan
    unsigned long long codeword_cap = 1ULL << 24;     // q^k codeword sweeps
    unsigned long long subcode_cap = 1'000'000ULL;    // i-dim subcode enumerations

    static Budget uniform(unsigned long long cap) { return Budget{cap, cap, cap}; }
};

}  // namespace rankzeta
