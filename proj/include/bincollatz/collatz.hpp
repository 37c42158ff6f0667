#pragma once

#include "bincollatz/bitnat.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace bincollatz {

/// Default iteration cap for the unbounded operations below (2^20 steps).
inline constexpr std::size_t kDefaultStepCap = std::size_t{1} << 20;

enum class StepKind {
    OddStep,  ///< n -> 3n+1, always increases
    EvenStep, ///< n -> n/2, always decreases
};

/// "odd-step" / "even-step".
std::string_view to_string(StepKind kind);

struct Step {
    BinaryNat value;
    StepKind kind;
};

/// One application of T.
Step step(const BinaryNat& n);

struct ReducedStep {
    BinaryNat odd_result;
    std::size_t stripped_exponent = 0;
    /// Number of T applications folded into this step.
    std::size_t t_steps = 0;
};

/// RT: for odd n, 3n+1 followed by stripping every factor of 2; for even n,
/// just the stripping. RT(1) = 1 via the loop 1 -> 4 -> 2 -> 1, reported as
/// exponent 2 and 3 T-steps.
ReducedStep reduced_step(const BinaryNat& n);

struct TraceEntry {
    BinaryNat value;
    /// Step that produced this value; empty for the start entry.
    std::optional<StepKind> kind;
};

struct CollatzTrace {
    BinaryNat start;
    std::vector<TraceEntry> entries;
    /// Index of the first entry equal to 1, if one was reached.
    std::optional<std::size_t> stopping_time;
    bool truncated = false;
};

/// Iterates T from n until a step produces 1 or max_steps steps were taken.
/// A start of 1 is iterated once around the cycle (1, 4, 2, 1) when
/// max_steps allows.
CollatzTrace sequence(const BinaryNat& n, std::size_t max_steps);

/// Least m with T^m(n) = 1, or empty when m would exceed cap.
/// Throws DomainError when cap is 0.
std::optional<std::size_t> stopping_time(const BinaryNat& n, std::size_t cap = kDefaultStepCap);

struct OddChain {
    /// Odd iterates from the odd part of n down to 1 (inclusive when reached).
    std::vector<BinaryNat> values;
    bool truncated = false;
};

/// Iterates reduced_step. cap bounds the number of reduced steps.
OddChain odd_chain(const BinaryNat& n, std::size_t cap = kDefaultStepCap);

/// True iff, after reaching 1, the next three iterates are 4, 2, 1.
/// Empty if 1 is not reached within cap steps.
std::optional<bool> cycle_check(const BinaryNat& n, std::size_t cap = kDefaultStepCap);

struct EndSubstringTransition {
    std::size_t end_substring_len = 0;
    std::size_t trailing_zeros_after = 0;
};

/// Length of the trailing 1-run of odd n against the 2-adic valuation of 3n+1.
/// Throws ParityError for even n.
EndSubstringTransition end_substring_transition(const BinaryNat& n);

} // namespace bincollatz
