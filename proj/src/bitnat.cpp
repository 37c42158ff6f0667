#include "bincollatz/bitnat.hpp"

#include "bincollatz/error.hpp"

#include <algorithm>
#include <bit>
#include <ostream>

namespace bincollatz {

namespace {

constexpr std::size_t kLimbBits = 64;
constexpr std::uint32_t kDecimalChunk = 1'000'000'000; // 10^9 per decimal word
constexpr std::uint64_t kDecimalOut = 10'000'000'000'000'000'000ull; // 10^19

__extension__ typedef unsigned __int128 u128;

} // namespace

BinaryNat::BinaryNat() : limbs_{1} {}

BinaryNat::BinaryNat(std::vector<std::uint64_t> limbs) : limbs_(std::move(limbs))
{
    while (!limbs_.empty() && limbs_.back() == 0)
        limbs_.pop_back();
    if (limbs_.empty())
        throw DomainError("result would be zero, which is not a natural number here");
}

BinaryNat BinaryNat::from_decimal(std::string_view digits)
{
    if (digits.empty())
        throw InvalidInput("empty decimal string");
    for (char c : digits) {
        if (c < '0' || c > '9')
            throw InvalidInput("invalid decimal digit '" + std::string(1, c) + "' in \"" + std::string(digits) + "\"");
    }

    // Decimal words of 9 digits, most significant first.
    std::vector<std::uint32_t> words;
    std::size_t head = digits.size() % 9;
    if (head == 0)
        head = 9;
    for (std::size_t pos = 0; pos < digits.size(); pos += (pos == 0 ? head : 9)) {
        std::size_t len = (pos == 0) ? head : 9;
        std::uint32_t w = 0;
        for (std::size_t i = 0; i < len; ++i)
            w = w * 10 + static_cast<std::uint32_t>(digits[pos + i] - '0');
        words.push_back(w);
    }

    // Repeated halving of the decimal value; each remainder is the next bit.
    std::vector<std::uint64_t> limbs;
    std::size_t bit_index = 0;
    std::size_t first = 0;
    while (first < words.size()) {
        std::uint32_t rem = 0;
        for (std::size_t i = first; i < words.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(rem) * kDecimalChunk + words[i];
            words[i] = static_cast<std::uint32_t>(cur / 2);
            rem = static_cast<std::uint32_t>(cur % 2);
        }
        if (bit_index % kLimbBits == 0)
            limbs.push_back(0);
        if (rem)
            limbs.back() |= std::uint64_t{1} << (bit_index % kLimbBits);
        ++bit_index;
        while (first < words.size() && words[first] == 0)
            ++first;
    }
    bool zero = std::all_of(limbs.begin(), limbs.end(), [](std::uint64_t l) { return l == 0; });
    if (zero)
        throw InvalidInput("zero is not a natural number here");
    return BinaryNat(std::move(limbs));
}

BinaryNat BinaryNat::from_bits(std::string_view bits)
{
    if (bits.empty())
        throw InvalidInput("empty bit string");
    std::vector<std::uint64_t> limbs((bits.size() + kLimbBits - 1) / kLimbBits, 0);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        char c = bits[bits.size() - 1 - i];
        if (c != '0' && c != '1')
            throw InvalidInput("invalid binary digit '" + std::string(1, c) + "' in \"" + std::string(bits) + "\"");
        if (c == '1')
            limbs[i / kLimbBits] |= std::uint64_t{1} << (i % kLimbBits);
    }
    bool zero = std::all_of(limbs.begin(), limbs.end(), [](std::uint64_t l) { return l == 0; });
    if (zero)
        throw InvalidInput("zero is not a natural number here");
    return BinaryNat(std::move(limbs));
}

BinaryNat BinaryNat::from_u64(std::uint64_t value)
{
    if (value == 0)
        throw InvalidInput("zero is not a natural number here");
    return BinaryNat(std::vector<std::uint64_t>{value});
}

BinaryNat BinaryNat::pow2(std::size_t exponent)
{
    std::vector<std::uint64_t> limbs(exponent / kLimbBits + 1, 0);
    limbs.back() = std::uint64_t{1} << (exponent % kLimbBits);
    return BinaryNat(std::move(limbs));
}

BinaryNat BinaryNat::all_ones(std::size_t count)
{
    if (count == 0)
        throw DomainError("all_ones needs at least one bit");
    std::vector<std::uint64_t> limbs((count + kLimbBits - 1) / kLimbBits, ~std::uint64_t{0});
    if (std::size_t rem = count % kLimbBits; rem != 0)
        limbs.back() = (std::uint64_t{1} << rem) - 1;
    return BinaryNat(std::move(limbs));
}

BinaryNat BinaryNat::from_bit_positions(std::span<const std::size_t> positions)
{
    if (positions.empty())
        throw InvalidInput("empty exponent list");
    std::size_t top = *std::max_element(positions.begin(), positions.end());
    std::vector<std::uint64_t> limbs(top / kLimbBits + 1, 0);
    for (std::size_t p : positions) {
        std::uint64_t mask = std::uint64_t{1} << (p % kLimbBits);
        if (limbs[p / kLimbBits] & mask)
            throw InvalidInput("repeated exponent " + std::to_string(p));
        limbs[p / kLimbBits] |= mask;
    }
    return BinaryNat(std::move(limbs));
}

std::string BinaryNat::to_decimal() const
{
    std::vector<std::uint64_t> work = limbs_;
    std::vector<std::uint64_t> chunks; // base 10^19, least significant first
    while (!work.empty()) {
        u128 rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            u128 cur = (rem << 64) | work[i];
            work[i] = static_cast<std::uint64_t>(cur / kDecimalOut);
            rem = cur % kDecimalOut;
        }
        chunks.push_back(static_cast<std::uint64_t>(rem));
        while (!work.empty() && work.back() == 0)
            work.pop_back();
    }
    std::string out = std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        out.append(19 - part.size(), '0');
        out += part;
    }
    return out;
}

std::string BinaryNat::to_bits() const
{
    std::size_t len = bit_length();
    std::string out(len, '0');
    for (std::size_t i = 0; i < len; ++i) {
        if (bit(i))
            out[len - 1 - i] = '1';
    }
    return out;
}

std::optional<std::uint64_t> BinaryNat::to_u64() const
{
    if (limbs_.size() != 1)
        return std::nullopt;
    return limbs_.front();
}

std::size_t BinaryNat::bit_length() const
{
    return (limbs_.size() - 1) * kLimbBits + std::bit_width(limbs_.back());
}

bool BinaryNat::bit(std::size_t index) const
{
    std::size_t limb = index / kLimbBits;
    if (limb >= limbs_.size())
        return false;
    return (limbs_[limb] >> (index % kLimbBits)) & 1u;
}

std::size_t BinaryNat::trailing_zeros() const
{
    std::size_t count = 0;
    for (std::uint64_t limb : limbs_) {
        if (limb != 0)
            return count + static_cast<std::size_t>(std::countr_zero(limb));
        count += kLimbBits;
    }
    return count; // unreachable: top limb is nonzero
}

std::size_t BinaryNat::end_substring_len() const
{
    if (!is_odd())
        throw ParityError("end-substring is defined for odd values only, got " + to_bits());
    std::size_t count = 0;
    for (std::uint64_t limb : limbs_) {
        auto ones = static_cast<std::size_t>(std::countr_one(limb));
        count += ones;
        if (ones != kLimbBits)
            break;
    }
    return count;
}

std::size_t BinaryNat::popcount() const
{
    std::size_t count = 0;
    for (std::uint64_t limb : limbs_)
        count += static_cast<std::size_t>(std::popcount(limb));
    return count;
}

std::vector<std::size_t> BinaryNat::set_bit_positions() const
{
    std::vector<std::size_t> out;
    out.reserve(popcount());
    for (std::size_t li = limbs_.size(); li-- > 0;) {
        std::uint64_t limb = limbs_[li];
        while (limb != 0) {
            auto top = static_cast<std::size_t>(std::bit_width(limb)) - 1;
            out.push_back(li * kLimbBits + top);
            limb &= ~(std::uint64_t{1} << top);
        }
    }
    return out;
}

BinaryNat BinaryNat::mul3_add1() const
{
    // 3n+1 = 2n + (n+1): add the shifted copy, the value itself and the
    // extra 1 (seeded as the initial carry) in one pass.
    std::vector<std::uint64_t> out(limbs_.size() + 1, 0);
    u128 carry = 1;
    std::uint64_t spill = 0; // bit shifted out of the previous limb
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t doubled = (limbs_[i] << 1) | spill;
        spill = limbs_[i] >> 63;
        u128 sum = static_cast<u128>(doubled) + limbs_[i] + carry;
        out[i] = static_cast<std::uint64_t>(sum);
        carry = sum >> 64;
    }
    out.back() = static_cast<std::uint64_t>(carry) + spill;
    return BinaryNat(std::move(out));
}

BinaryNat BinaryNat::half() const
{
    if (is_odd())
        throw ParityError("cannot halve odd value " + to_bits());
    return shift_right(1);
}

BinaryNat BinaryNat::shift_right(std::size_t k) const
{
    if (k == 0)
        return *this;
    if (k > trailing_zeros())
        throw ParityError("cannot shift " + to_bits() + " right by " + std::to_string(k) +
                          ": only " + std::to_string(trailing_zeros()) + " trailing zeros");
    std::size_t limb_shift = k / kLimbBits;
    std::size_t bit_shift = k % kLimbBits;
    std::vector<std::uint64_t> out(limbs_.size() - limb_shift, 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::uint64_t lo = limbs_[i + limb_shift] >> bit_shift;
        std::uint64_t hi = 0;
        if (bit_shift != 0 && i + limb_shift + 1 < limbs_.size())
            hi = limbs_[i + limb_shift + 1] << (kLimbBits - bit_shift);
        out[i] = lo | hi;
    }
    return BinaryNat(std::move(out));
}

BinaryNat BinaryNat::append_bit(bool bit) const
{
    std::vector<std::uint64_t> out(limbs_.size() + 1, 0);
    std::uint64_t spill = bit ? 1u : 0u;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        out[i] = (limbs_[i] << 1) | spill;
        spill = limbs_[i] >> 63;
    }
    out.back() = spill;
    return BinaryNat(std::move(out));
}

BinaryNat BinaryNat::prefix(std::size_t length) const
{
    std::size_t len = bit_length();
    if (length == 0 || length > len)
        throw DomainError("prefix length " + std::to_string(length) + " outside 1.." + std::to_string(len));
    std::size_t drop = len - length;
    std::size_t limb_shift = drop / kLimbBits;
    std::size_t bit_shift = drop % kLimbBits;
    std::vector<std::uint64_t> out(limbs_.size() - limb_shift, 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::uint64_t lo = limbs_[i + limb_shift] >> bit_shift;
        std::uint64_t hi = 0;
        if (bit_shift != 0 && i + limb_shift + 1 < limbs_.size())
            hi = limbs_[i + limb_shift + 1] << (kLimbBits - bit_shift);
        out[i] = lo | hi;
    }
    return BinaryNat(std::move(out));
}

BinaryNat BinaryNat::successor() const
{
    std::vector<std::uint64_t> out = limbs_;
    for (auto& limb : out) {
        if (++limb != 0)
            return BinaryNat(std::move(out));
    }
    out.push_back(1);
    return BinaryNat(std::move(out));
}

BinaryNat BinaryNat::predecessor() const
{
    if (is_one())
        throw DomainError("1 has no predecessor among the natural numbers");
    std::vector<std::uint64_t> out = limbs_;
    for (auto& limb : out) {
        if (limb-- != 0)
            break;
    }
    return BinaryNat(std::move(out));
}

BinaryNat operator+(const BinaryNat& lhs, const BinaryNat& rhs)
{
    const auto& a = lhs.limbs_.size() >= rhs.limbs_.size() ? lhs.limbs_ : rhs.limbs_;
    const auto& b = lhs.limbs_.size() >= rhs.limbs_.size() ? rhs.limbs_ : lhs.limbs_;
    std::vector<std::uint64_t> out(a.size() + 1, 0);
    u128 carry = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        u128 sum = static_cast<u128>(a[i]) + (i < b.size() ? b[i] : 0) + carry;
        out[i] = static_cast<std::uint64_t>(sum);
        carry = sum >> 64;
    }
    out.back() = static_cast<std::uint64_t>(carry);
    return BinaryNat(std::move(out));
}

std::strong_ordering operator<=>(const BinaryNat& lhs, const BinaryNat& rhs)
{
    if (lhs.limbs_.size() != rhs.limbs_.size())
        return lhs.limbs_.size() <=> rhs.limbs_.size();
    for (std::size_t i = lhs.limbs_.size(); i-- > 0;) {
        if (lhs.limbs_[i] != rhs.limbs_[i])
            return lhs.limbs_[i] <=> rhs.limbs_[i];
    }
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const BinaryNat& n)
{
    return os << n.to_bits();
}

} // namespace bincollatz
