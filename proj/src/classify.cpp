#include "bincollatz/classify.hpp"

#include "bincollatz/error.hpp"

#include <bit>
#include <vector>

namespace bincollatz {

std::string_view to_string(NumberClass c)
{
    switch (c) {
    case NumberClass::PureEven:
        return "pure-even";
    case NumberClass::PureOdd:
        return "pure-odd";
    case NumberClass::MixedEven:
        return "mixed-even";
    case NumberClass::MixedOdd:
        return "mixed-odd";
    case NumberClass::Origin:
        return "origin";
    }
    return "unknown";
}

std::optional<NumberClass> parse_number_class(std::string_view text)
{
    for (NumberClass c : kAllNumberClasses) {
        if (to_string(c) == text)
            return c;
    }
    return std::nullopt;
}

NumberClass classify(const BinaryNat& n)
{
    if (n.is_one())
        return NumberClass::Origin;
    std::size_t ones = n.popcount();
    if (ones == 1)
        return NumberClass::PureEven;
    if (ones == n.bit_length())
        return NumberClass::PureOdd;
    return n.is_odd() ? NumberClass::MixedOdd : NumberClass::MixedEven;
}

NumberClass classify_u64(std::uint64_t value)
{
    if (value == 1)
        return NumberClass::Origin;
    if (std::has_single_bit(value))
        return NumberClass::PureEven;
    if (static_cast<unsigned>(std::popcount(value)) == std::bit_width(value))
        return NumberClass::PureOdd;
    return (value & 1u) ? NumberClass::MixedOdd : NumberClass::MixedEven;
}

bool is_hard(const BinaryNat& n)
{
    std::size_t len = n.bit_length();
    if (len < 3 || len % 2 == 0)
        return false;
    // Even bit positions (counted from the LSB) hold 1, odd positions hold 0.
    for (std::size_t i = 0; i < len; ++i) {
        if (n.bit(i) != (i % 2 == 0))
            return false;
    }
    return true;
}

BinaryNat hard_number(std::size_t k)
{
    if (k == 0)
        throw DomainError("hard numbers are indexed from k = 1");
    std::vector<std::size_t> positions;
    positions.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
        positions.push_back(2 * i);
    return BinaryNat::from_bit_positions(positions);
}

} // namespace bincollatz
