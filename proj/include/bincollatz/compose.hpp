#pragma once

#include "bincollatz/bitnat.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bincollatz {

/// The two generators of the binary tree: O(x) = 2x+1 and E(x) = 2x.
enum class CompositionStep : char { O = 'O', E = 'E' };

/// A sequence of O/E applications starting from 1, stored inner-to-outer:
/// steps.front() is applied to 1 first. This is root-to-leaf order in the
/// tree, the reverse of the nested notation O(E(...(1))).
struct CompositionPath {
    std::vector<CompositionStep> steps;

    /// "OOOEE" style text, innermost step first.
    std::string to_string() const;
    /// Nested outer-to-inner form, e.g. "O(O(1))".
    std::string to_nested_string() const;
    /// Inverse of to_string(); throws InvalidInput for characters other than O/E.
    static CompositionPath parse(std::string_view text);

    friend bool operator==(const CompositionPath&, const CompositionPath&) = default;
};

BinaryNat apply(const CompositionPath& path);
CompositionPath decompose(const BinaryNat& n);

/// (n-1)/2 for odd n, n/2 for even n: the parent in the tree.
/// Throws DomainError for n = 1.
BinaryNat f_inverse(const BinaryNat& n);

/// Values on the root-to-n path, 1 first and n last.
std::vector<BinaryNat> tree_path(const BinaryNat& n);

/// (2n, 2n+1).
std::pair<BinaryNat, BinaryNat> tree_children(const BinaryNat& n);

/// Level of n in the tree; the root 1 is on level 1.
std::size_t tree_level(const BinaryNat& n);

inline constexpr std::size_t kDefaultSubtreeDepthCap = 20;

/// First `depth` complete levels of the tree, each in left-to-right order.
/// Throws DomainError for depth 0, ResourceError for depth > depth_cap.
std::vector<std::vector<BinaryNat>> subtree(std::size_t depth, std::size_t depth_cap = kDefaultSubtreeDepthCap);

} // namespace bincollatz
