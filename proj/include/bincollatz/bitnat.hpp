#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bincollatz {

/// Arbitrary-precision natural number, n >= 1, held as a packed bit string.
///
/// Storage is 64-bit limbs, least significant first, with a nonzero top limb.
/// There is no zero: every constructor and operation either yields a value
/// >= 1 or throws. The canonical external form is the MSB-first '0'/'1'
/// string with no leading zeros (see to_bits()).
///
/// Values are immutable; every operation returns a new value.
class BinaryNat {
public:
    /// The value 1, the root of the binary tree.
    BinaryNat();

    /// Parses a decimal digit string. Throws InvalidInput for an empty string,
    /// a non-digit character or the value 0. Leading zeros are accepted.
    static BinaryNat from_decimal(std::string_view digits);
    /// Parses an MSB-first '0'/'1' string. Same error rules as from_decimal().
    static BinaryNat from_bits(std::string_view bits);
    static BinaryNat from_u64(std::uint64_t value);
    static BinaryNat pow2(std::size_t exponent);
    /// 2^count - 1 (count ones). count must be >= 1.
    static BinaryNat all_ones(std::size_t count);
    /// The value whose 1-bits sit exactly at `positions` (bit 0 = LSB).
    /// Throws InvalidInput on an empty list or a repeated position.
    static BinaryNat from_bit_positions(std::span<const std::size_t> positions);

    std::string to_decimal() const;
    std::string to_bits() const;
    /// Empty when the value needs more than 64 bits.
    std::optional<std::uint64_t> to_u64() const;

    std::size_t bit_length() const;
    /// Bit at `index`, counted from the least significant end.
    bool bit(std::size_t index) const;
    bool is_odd() const { return (limbs_.front() & 1u) != 0; }
    bool is_even() const { return !is_odd(); }
    bool is_one() const { return limbs_.size() == 1 && limbs_.front() == 1; }
    /// 2-adic valuation.
    std::size_t trailing_zeros() const;
    /// Length of the maximal run of trailing 1-bits. Odd values only.
    std::size_t end_substring_len() const;
    std::size_t popcount() const;
    /// Positions of the 1-bits, highest first.
    std::vector<std::size_t> set_bit_positions() const;

    /// 3n+1, computed as 2n + (n+1) with a single carry pass.
    BinaryNat mul3_add1() const;
    /// n/2 for even n; throws ParityError for odd n.
    BinaryNat half() const;
    /// n/2^k; throws ParityError when k > trailing_zeros().
    BinaryNat shift_right(std::size_t k) const;
    /// 2n + bit.
    BinaryNat append_bit(bool bit) const;
    /// Value of the leading `length` bits, 1 <= length <= bit_length().
    BinaryNat prefix(std::size_t length) const;
    /// Odd part: n / 2^trailing_zeros().
    BinaryNat odd_part() const { return shift_right(trailing_zeros()); }
    BinaryNat successor() const;
    /// n-1; throws DomainError for n = 1.
    BinaryNat predecessor() const;

    friend BinaryNat operator+(const BinaryNat& lhs, const BinaryNat& rhs);
    friend bool operator==(const BinaryNat&, const BinaryNat&) = default;
    friend std::strong_ordering operator<=>(const BinaryNat& lhs, const BinaryNat& rhs);

    std::span<const std::uint64_t> limbs() const { return limbs_; }

private:
    explicit BinaryNat(std::vector<std::uint64_t> limbs);

    std::vector<std::uint64_t> limbs_;
};

std::ostream& operator<<(std::ostream& os, const BinaryNat& n);

} // namespace bincollatz
