#pragma once

#include "bincollatz/bitnat.hpp"

#include <array>
#include <optional>
#include <string_view>

namespace bincollatz {

/// Partition of the naturals by bit shape.
///  - PureEven: 2^m, m >= 1 (a 1 followed only by 0s)
///  - PureOdd: 2^m - 1, m >= 2 (all 1s)
///  - MixedEven / MixedOdd: everything else, split by parity
///  - Origin: the tree root 1, which belongs to neither pure family
enum class NumberClass { PureEven, PureOdd, MixedEven, MixedOdd, Origin };

inline constexpr std::array<NumberClass, 5> kAllNumberClasses = {
    NumberClass::PureEven, NumberClass::PureOdd, NumberClass::MixedEven, NumberClass::MixedOdd, NumberClass::Origin};

/// "pure-even", "pure-odd", "mixed-even", "mixed-odd", "origin".
std::string_view to_string(NumberClass c);
std::optional<NumberClass> parse_number_class(std::string_view text);

NumberClass classify(const BinaryNat& n);
/// Same answer as classify(BinaryNat) for a machine word; used by the range
/// verifier's fast path. value must be nonzero.
NumberClass classify_u64(std::uint64_t value);

/// True for the alternating strings 101, 10101, 1010101, ...
bool is_hard(const BinaryNat& n);

/// a_k = (4^k - 1)/3, bit string (10)^(k-1) 1. k = 1 gives 1, which the
/// closed form admits even though 1 is not itself listed as hard.
/// Throws DomainError for k = 0.
BinaryNat hard_number(std::size_t k);

} // namespace bincollatz
