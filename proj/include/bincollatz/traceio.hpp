#pragma once

#include "bincollatz/collatz.hpp"
#include "bincollatz/powersum.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bincollatz {

enum class RenderFormat { Table, Scratch, Points, Machine };

/// Parses "table", "scratch", "points" or "machine".
std::optional<RenderFormat> parse_render_format(std::string_view text);

struct RenderConfig {
    RenderFormat format = RenderFormat::Scratch;
    bool show_decimal = true;
    bool show_binary = true;
    /// Width of the decimal column in the scratch layout; 0 sizes it to the
    /// widest value in the trace.
    std::size_t column_width = 0;
};

/// Tabular layout, one row per odd value:
///
///     10027=(10011100101011)₂ → (111010110000010)₂
///
/// pairing n with 3n+1. A chain that ends at 1 gets a terminal row "1=(1)₂"
/// with no arrow. Throws InvalidInput for an empty chain or a config with
/// both columns hidden.
std::string render_table(std::span<const BinaryNat> chain, const RenderConfig& config = {});
std::string render_table(const OddChain& chain, const RenderConfig& config = {});

/// Scratch-paper layout, one line per iterate:
///
///       255  11111111
///     > 766  1011111110
///     | 383  101111111
///
/// The first column is a glyph: blank for the start value, '>' for a value
/// produced by a 3n+1 hop, '|' for a value produced by halving. Decimal is
/// right-aligned, binary left-aligned so the dropped 0s vanish off the right.
std::string render_scratch(const CollatzTrace& trace, const RenderConfig& config = {});

/// "i,value" rows, i from 0, value in decimal.
std::string render_points(const CollatzTrace& trace);

/// Machine records "index,decimal,binary,kind,annotations", one per line.
/// For traces, kind is the step T applies at that value (odd-step /
/// even-step) and annotations are ';'-joined tags from {start, stop,
/// truncated}.
std::string render_machine(const CollatzTrace& trace);
/// kind is reduced-step or terminal; annotations carry exponent= and t-steps=.
std::string render_machine(const OddChain& chain);
/// One record per merge; decimal/binary are the value entering the merge,
/// kind is merge, annotations carry before/raw/after/shift/result as
/// space-separated exponent lists in braces.
std::string render_machine(const DerivationTrace& derivation);

/// Rebuilds a trace from render_machine(CollatzTrace) output. Throws
/// InvalidInput on malformed records or rows that do not follow T.
CollatzTrace parse_machine_trace(std::string_view text);

/// Human-readable merge derivation, one line per reduced step:
///
///     67=(1000011)₂=2^6+2^1+2^0
///     3·67+1=2·67+67+1=2^7+2^2+2^1+2^6+2^1+2^0+2^0=2^7+2^6+2^3+2^1 → /2^1 → 101
///     ...
///     1
std::string render_derivation(const DerivationTrace& derivation);

/// "level <d>: v v v ..." per level, decimal values.
std::string render_subtree(const std::vector<std::vector<BinaryNat>>& levels);

} // namespace bincollatz
