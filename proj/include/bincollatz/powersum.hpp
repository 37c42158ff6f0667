#pragma once

#include "bincollatz/bitnat.hpp"
#include "bincollatz/collatz.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace bincollatz {

/// n written as 2^e1 + 2^e2 + ... with e1 > e2 > ... >= 0.
class PowerSum {
public:
    /// Throws InvalidInput unless `exponents` is nonempty and strictly decreasing.
    explicit PowerSum(std::vector<std::size_t> exponents);

    const std::vector<std::size_t>& exponents() const { return exponents_; }
    std::size_t min_exponent() const { return exponents_.back(); }
    bool is_odd() const { return exponents_.back() == 0; }

    /// "{6,1,0}".
    std::string to_string() const;
    /// "2^6+2^1+2^0".
    std::string to_power_string() const;

    friend bool operator==(const PowerSum&, const PowerSum&) = default;

private:
    std::vector<std::size_t> exponents_;
};

/// Exponents with repetition, kept in the order they were produced so that a
/// rendered derivation reads like the hand-written expansion.
struct ExponentMultiset {
    std::vector<std::size_t> exponents;

    std::string to_power_string() const;
};

PowerSum to_powersum(const BinaryNat& n);
BinaryNat from_powersum(const PowerSum& p);
/// Sum of 2^e over the multiset. Throws InvalidInput when empty.
BinaryNat multiset_value(const ExponentMultiset& m);

/// Applies 2^k + 2^k = 2^(k+1) until no exponent repeats. Works upward from
/// the smallest exponent; a multiplicity mu at e leaves mu mod 2 there and
/// carries floor(mu/2) to e+1. Throws InvalidInput for an empty multiset.
PowerSum normalize(const ExponentMultiset& m);

/// The un-normalized expansion 3n+1 = 2n + n + 1: every exponent shifted up
/// by one, then the original exponents, then a lone 0.
ExponentMultiset expand_three_n_plus_one(const PowerSum& p);

/// normalize(expand_three_n_plus_one(p)). Throws ParityError for even p.
PowerSum three_n_plus_one_merge(const PowerSum& p);

/// Divides by 2^h. Throws ParityError when h exceeds the smallest exponent.
PowerSum shift_powers(const PowerSum& p, std::size_t h);

/// Checks 2^(k-1) + ... + 2 + 1 == 2^k - 1 with BinaryNat arithmetic.
/// Throws DomainError for k = 0.
bool geometric_identity_check(std::size_t k);

struct HardClosedForm {
    BinaryNat a_k;
    BinaryNat t_of_a_k;
};

/// a_k and T(a_k) = 3a_k+1; throws ConsistencyError if T(a_k) != 2^(2k).
HardClosedForm hard_closed_form(std::size_t k);

struct DerivationRecord {
    PowerSum before;
    ExponentMultiset raw;
    PowerSum after;
    std::size_t shift = 0;
    /// shift_powers(after, shift): the next odd value.
    PowerSum result;
};

struct DerivationTrace {
    std::vector<DerivationRecord> records;
    bool truncated = false;
};

/// One record per reduced step from odd n until the result is {0}. n = 1
/// yields the single record {0} -> {2} -> {0}. cap bounds the record count.
/// Throws ParityError for even n.
DerivationTrace derivation_trace(const BinaryNat& n, std::size_t cap = kDefaultStepCap);

} // namespace bincollatz
