#include "bincollatz/powersum.hpp"

#include "bincollatz/classify.hpp"
#include "bincollatz/error.hpp"

#include <algorithm>
#include <bit>

namespace bincollatz {

namespace {

std::string join_powers(const std::vector<std::size_t>& exponents)
{
    std::string out;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (i != 0)
            out += '+';
        out += "2^" + std::to_string(exponents[i]);
    }
    return out;
}

} // namespace

PowerSum::PowerSum(std::vector<std::size_t> exponents) : exponents_(std::move(exponents))
{
    if (exponents_.empty())
        throw InvalidInput("a power sum needs at least one term");
    for (std::size_t i = 1; i < exponents_.size(); ++i) {
        if (exponents_[i] >= exponents_[i - 1])
            throw InvalidInput("power sum exponents must be strictly decreasing: " + join_powers(exponents_));
    }
}

std::string PowerSum::to_string() const
{
    std::string out = "{";
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (i != 0)
            out += ',';
        out += std::to_string(exponents_[i]);
    }
    return out + "}";
}

std::string PowerSum::to_power_string() const
{
    return join_powers(exponents_);
}

std::string ExponentMultiset::to_power_string() const
{
    return join_powers(exponents);
}

PowerSum to_powersum(const BinaryNat& n)
{
    return PowerSum(n.set_bit_positions());
}

BinaryNat from_powersum(const PowerSum& p)
{
    return BinaryNat::from_bit_positions(p.exponents());
}

BinaryNat multiset_value(const ExponentMultiset& m)
{
    if (m.exponents.empty())
        throw InvalidInput("empty exponent multiset");
    BinaryNat sum = BinaryNat::pow2(m.exponents.front());
    for (std::size_t i = 1; i < m.exponents.size(); ++i)
        sum = sum + BinaryNat::pow2(m.exponents[i]);
    return sum;
}

PowerSum normalize(const ExponentMultiset& m)
{
    if (m.exponents.empty())
        throw InvalidInput("cannot normalize an empty exponent multiset");
    // The carry can climb at most bit_width(size) places above the top exponent.
    std::size_t top = *std::max_element(m.exponents.begin(), m.exponents.end());
    std::vector<std::size_t> multiplicity(top + std::bit_width(m.exponents.size()) + 2, 0);
    for (std::size_t e : m.exponents)
        ++multiplicity[e];

    std::vector<std::size_t> kept;
    for (std::size_t e = 0; e + 1 < multiplicity.size(); ++e) {
        if (multiplicity[e] % 2 == 1)
            kept.push_back(e);
        multiplicity[e + 1] += multiplicity[e] / 2;
    }
    std::reverse(kept.begin(), kept.end());
    return PowerSum(std::move(kept));
}

ExponentMultiset expand_three_n_plus_one(const PowerSum& p)
{
    ExponentMultiset raw;
    raw.exponents.reserve(2 * p.exponents().size() + 1);
    for (std::size_t e : p.exponents())
        raw.exponents.push_back(e + 1);
    for (std::size_t e : p.exponents())
        raw.exponents.push_back(e);
    raw.exponents.push_back(0);
    return raw;
}

PowerSum three_n_plus_one_merge(const PowerSum& p)
{
    if (!p.is_odd())
        throw ParityError("3n+1 merge needs an odd value, got " + p.to_string());
    return normalize(expand_three_n_plus_one(p));
}

PowerSum shift_powers(const PowerSum& p, std::size_t h)
{
    if (h > p.min_exponent())
        throw ParityError("cannot divide " + p.to_string() + " by 2^" + std::to_string(h));
    std::vector<std::size_t> shifted = p.exponents();
    for (auto& e : shifted)
        e -= h;
    return PowerSum(std::move(shifted));
}

bool geometric_identity_check(std::size_t k)
{
    if (k == 0)
        throw DomainError("geometric identity needs k >= 1");
    BinaryNat lhs{}; // 2^0
    for (std::size_t i = 1; i < k; ++i)
        lhs = lhs + BinaryNat::pow2(i);
    BinaryNat rhs = BinaryNat::pow2(k).predecessor();
    return lhs == rhs;
}

HardClosedForm hard_closed_form(std::size_t k)
{
    BinaryNat a = hard_number(k);
    BinaryNat t = a.mul3_add1();
    if (t != BinaryNat::pow2(2 * k))
        throw ConsistencyError("3*a_" + std::to_string(k) + "+1 != 4^" + std::to_string(k));
    return {std::move(a), std::move(t)};
}

DerivationTrace derivation_trace(const BinaryNat& n, std::size_t cap)
{
    if (!n.is_odd())
        throw ParityError("derivation trace starts from an odd value, got " + n.to_bits());
    DerivationTrace trace;
    PowerSum current = to_powersum(n);
    const PowerSum one({0});
    do {
        if (trace.records.size() == cap) {
            trace.truncated = true;
            break;
        }
        ExponentMultiset raw = expand_three_n_plus_one(current);
        PowerSum after = normalize(raw);
        std::size_t h = after.min_exponent();
        PowerSum result = shift_powers(after, h);
        trace.records.push_back({current, std::move(raw), after, h, result});
        current = std::move(result);
    } while (current != one);
    return trace;
}

} // namespace bincollatz
