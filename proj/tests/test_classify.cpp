#include "bincollatz/classify.hpp"
#include "bincollatz/error.hpp"

#include <doctest.h>

using namespace bincollatz;

TEST_CASE("classify examples")
{
    CHECK(classify(BinaryNat::from_u64(60)) == NumberClass::MixedEven);
    CHECK(classify(BinaryNat::from_u64(97)) == NumberClass::MixedOdd);
    CHECK(classify(BinaryNat::from_u64(64)) == NumberClass::PureEven);
    CHECK(classify(BinaryNat::from_u64(63)) == NumberClass::PureOdd);
    CHECK(classify(BinaryNat{}) == NumberClass::Origin);
    CHECK(classify(BinaryNat::from_decimal("1180591620717411303424")) == NumberClass::PureEven);
    CHECK(classify(BinaryNat::from_decimal("1180591620717411303423")) == NumberClass::PureOdd);
    CHECK(classify(BinaryNat::from_u64(2)) == NumberClass::PureEven);
    CHECK(classify(BinaryNat::from_u64(3)) == NumberClass::PureOdd);
}

TEST_CASE("class tags")
{
    CHECK(to_string(NumberClass::PureEven) == "pure-even");
    CHECK(to_string(NumberClass::PureOdd) == "pure-odd");
    CHECK(to_string(NumberClass::MixedEven) == "mixed-even");
    CHECK(to_string(NumberClass::MixedOdd) == "mixed-odd");
    CHECK(to_string(NumberClass::Origin) == "origin");
    for (NumberClass c : kAllNumberClasses)
        CHECK(parse_number_class(to_string(c)) == c);
    CHECK_FALSE(parse_number_class("pure").has_value());
}

TEST_CASE("partition is exhaustive and exclusive below 2^16")
{
    // per bit length: exactly one pure-even and one pure-odd value
    std::vector<std::array<std::size_t, 5>> per_length(17);
    for (std::uint64_t v = 1; v < (1u << 16); ++v) {
        BinaryNat n = BinaryNat::from_u64(v);
        NumberClass c = classify(n);
        REQUIRE(classify_u64(v) == c);

        bool pure_even = v >= 2 && (v & (v - 1)) == 0;
        bool pure_odd = v >= 3 && ((v + 1) & v) == 0;
        int hits = (v == 1) + pure_even + pure_odd + (!pure_even && v != 1 && v % 2 == 0) +
                   (!pure_odd && v != 1 && v % 2 == 1);
        REQUIRE(hits == 1);
        ++per_length[n.bit_length()][static_cast<std::size_t>(c)];
    }
    for (std::size_t len = 2; len <= 16; ++len) {
        const auto& row = per_length[len];
        CHECK(row[static_cast<std::size_t>(NumberClass::PureEven)] == 1);
        CHECK(row[static_cast<std::size_t>(NumberClass::PureOdd)] == 1);
        CHECK(row[static_cast<std::size_t>(NumberClass::Origin)] == 0);
        std::size_t mixed =
            row[static_cast<std::size_t>(NumberClass::MixedEven)] + row[static_cast<std::size_t>(NumberClass::MixedOdd)];
        CHECK(mixed == (std::size_t{1} << (len - 1)) - 2);
    }
}

TEST_CASE("pure families up to 70 bits")
{
    for (std::size_t m = 2; m <= 70; ++m) {
        CHECK(classify(BinaryNat::pow2(m)) == NumberClass::PureEven);
        CHECK(classify(BinaryNat::pow2(m).predecessor()) == NumberClass::PureOdd);
    }
}

TEST_CASE("hard numbers")
{
    for (std::uint64_t v : {5, 21, 85, 341, 1365, 5461})
        CHECK(is_hard(BinaryNat::from_u64(v)));
    CHECK_FALSE(is_hard(BinaryNat::from_u64(7)));
    CHECK_FALSE(is_hard(BinaryNat::from_u64(1)));
    CHECK_FALSE(is_hard(BinaryNat::from_u64(10)));
    CHECK_FALSE(is_hard(BinaryNat::from_bits("1010")));
    CHECK(is_hard(BinaryNat::from_bits("1010101010101")));

    CHECK(hard_number(2).to_bits() == "101");
    CHECK(hard_number(1).is_one());
    CHECK(hard_number(5).to_bits() == "101010101");
    CHECK(hard_number(5) == BinaryNat::from_u64(341));
    CHECK_THROWS_AS(hard_number(0), DomainError);

    for (std::size_t k = 1; k <= 32; ++k) {
        BinaryNat a = hard_number(k);
        CHECK(a.bit_length() == 2 * k - 1);
        if (k >= 2)
            CHECK(is_hard(a));
        CHECK(a.mul3_add1() == BinaryNat::pow2(2 * k));
    }
}
