#pragma once

#include "bincollatz/bitnat.hpp"
#include "bincollatz/classify.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace bincollatz {

inline constexpr std::size_t kDefaultRangeStepCap = 100'000;
inline constexpr std::uint64_t kDefaultChunkSize = 1 << 16;
inline constexpr std::size_t kDefaultCycleSamples = 1000;
inline constexpr int kCheckpointFormatVersion = 1;

/// Aggregates over a contiguous block of inputs. Merging two accumulators of
/// disjoint blocks is associative and commutative; argmax ties go to the
/// smaller input.
struct RangeAccumulator {
    std::uint64_t verified_count = 0;
    std::size_t max_stopping_time = 0;
    std::optional<BinaryNat> max_stopping_time_at;
    std::optional<BinaryNat> max_excursion;
    std::optional<BinaryNat> max_excursion_at;
    std::array<std::uint64_t, kAllNumberClasses.size()> class_histogram{};
    /// Ascending.
    std::vector<BinaryNat> truncated_inputs;

    void merge(const RangeAccumulator& other);
    std::uint64_t histogram_total() const;
    std::uint64_t class_count(NumberClass c) const { return class_histogram[static_cast<std::size_t>(c)]; }

    friend bool operator==(const RangeAccumulator&, const RangeAccumulator&) = default;
};

/// Processes [start, start+count) with every input capped at step_cap T-steps.
RangeAccumulator verify_block(const BinaryNat& start, std::uint64_t count, std::size_t step_cap);

struct RangeReport {
    BinaryNat lo;
    BinaryNat hi; ///< exclusive
    std::size_t step_cap = kDefaultRangeStepCap;
    RangeAccumulator stats;
    /// Sampled converged inputs on which cycle_check() ran, and those where it failed.
    std::uint64_t cycle_samples_checked = 0;
    std::vector<BinaryNat> cycle_failures;

    friend bool operator==(const RangeReport&, const RangeReport&) = default;
};

/// Plain-text summary; identical reports render identically.
std::string render_report(const RangeReport& report);

/// State of a partially processed range, written at chunk boundaries.
struct Checkpoint {
    int format_version = kCheckpointFormatVersion;
    BinaryNat lo;
    BinaryNat hi;
    std::size_t step_cap = kDefaultRangeStepCap;
    BinaryNat next_unprocessed;
    RangeAccumulator stats;

    friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

std::string serialize_checkpoint(const Checkpoint& cp);
/// Throws CheckpointError on malformed text or an unsupported version.
Checkpoint parse_checkpoint(std::string_view text);

/// Writes to "<path>.tmp" and renames over `path`.
void checkpoint_save(const std::filesystem::path& path, const Checkpoint& cp);
/// Throws CheckpointError when the file is missing, unreadable or corrupt.
Checkpoint checkpoint_load(const std::filesystem::path& path);

struct VerifyOptions {
    std::size_t step_cap = kDefaultRangeStepCap;
    std::uint64_t chunk_size = kDefaultChunkSize;
    unsigned jobs = 1;
    std::optional<std::filesystem::path> checkpoint_path;
    /// Continue from checkpoint_path instead of starting at lo.
    bool resume = false;
    /// Chunks merged between checkpoint writes.
    std::uint64_t checkpoint_every = 16;
    /// Stop cleanly once this many chunks have been merged in this run.
    std::optional<std::uint64_t> stop_after_chunks;
    std::size_t cycle_samples = kDefaultCycleSamples;
};

struct VerifyOutcome {
    RangeReport report;
    bool complete = false;
    BinaryNat next_unprocessed;
};

/// Checks every n in [lo, hi). Throws DomainError when lo >= hi, step_cap
/// or chunk_size is 0, or hi - lo does not fit in 64 bits.
VerifyOutcome verify_range(const BinaryNat& lo, const BinaryNat& hi, const VerifyOptions& options);
RangeReport verify_range(const BinaryNat& lo, const BinaryNat& hi, std::size_t step_cap, std::uint64_t chunk_size);

} // namespace bincollatz
