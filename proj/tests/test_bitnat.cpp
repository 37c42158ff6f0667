#include "bincollatz/bitnat.hpp"
#include "bincollatz/error.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <random>

using bincollatz::BinaryNat;

namespace {

BinaryNat bits(const char* s)
{
    return BinaryNat::from_bits(s);
}

BinaryNat random_nat(std::mt19937_64& rng, std::size_t max_bits)
{
    std::size_t len = 1 + rng() % max_bits;
    std::string s = "1";
    for (std::size_t i = 1; i < len; ++i)
        s.push_back((rng() & 1) ? '1' : '0');
    return BinaryNat::from_bits(s);
}

} // namespace

TEST_CASE("from_decimal")
{
    CHECK(BinaryNat::from_decimal("60").to_bits() == "111100");
    CHECK(BinaryNat::from_decimal("1").to_bits() == "1");
    CHECK(BinaryNat::from_decimal("1180591620717411303424").to_bits() == "1" + std::string(70, '0'));
    CHECK(BinaryNat::from_decimal("1180591620717411303423").to_bits() == std::string(70, '1'));
    CHECK(BinaryNat::from_decimal("007") == BinaryNat::from_u64(7));

    CHECK_THROWS_AS(BinaryNat::from_decimal(""), bincollatz::InvalidInput);
    CHECK_THROWS_AS(BinaryNat::from_decimal("12a"), bincollatz::InvalidInput);
    CHECK_THROWS_AS(BinaryNat::from_decimal("-5"), bincollatz::InvalidInput);
    CHECK_THROWS_AS(BinaryNat::from_decimal("0"), bincollatz::InvalidInput);
    CHECK_THROWS_AS(BinaryNat::from_decimal("000"), bincollatz::InvalidInput);
}

TEST_CASE("to_decimal")
{
    CHECK(bits("1100001").to_decimal() == "97");
    CHECK(bits("1").to_decimal() == "1");
    CHECK(bits("10011100101011").to_decimal() == "10027");
    CHECK(BinaryNat::pow2(64).to_decimal() == "18446744073709551616");
    CHECK(BinaryNat::pow2(200).to_decimal() == oracle::dec_pow2(200));
}

TEST_CASE("from_bits rejects junk")
{
    CHECK_THROWS_AS(BinaryNat::from_bits(""), bincollatz::InvalidInput);
    CHECK_THROWS_AS(BinaryNat::from_bits("102"), bincollatz::InvalidInput);
    CHECK_THROWS_AS(BinaryNat::from_bits("0000"), bincollatz::InvalidInput);
    CHECK(BinaryNat::from_bits("00101").to_bits() == "101");
}

TEST_CASE("mul3_add1")
{
    CHECK(bits("1").mul3_add1().to_bits() == "100");
    CHECK(bits("101").mul3_add1().to_bits() == "10000");
    // 3*255+1 = 766 by decimal arithmetic
    CHECK(oracle::dec_mul3_add1("255") == "766");
    CHECK(bits("11111111").mul3_add1() == BinaryNat::from_decimal("766"));
    CHECK(bits("11111111").mul3_add1().to_bits() == "1011111110");
}

TEST_CASE("mul3_add1 matches decimal oracle for every n < 2^16")
{
    for (std::uint64_t n = 1; n < (1u << 16); ++n) {
        std::string expected = oracle::dec_mul3_add1(oracle::dec_from_u64(n));
        REQUIRE(BinaryNat::from_u64(n).mul3_add1().to_decimal() == expected);
    }
}

TEST_CASE("mul3_add1 matches decimal oracle on wide values")
{
    std::mt19937_64 rng(20240601);
    for (int i = 0; i < 100; ++i) {
        std::size_t len = 60 + rng() % 21;
        std::string b = "1";
        for (std::size_t j = 1; j < len; ++j)
            b.push_back((rng() & 1) ? '1' : '0');
        BinaryNat n = BinaryNat::from_bits(b);
        std::string d = n.to_decimal();
        REQUIRE(oracle::dec_to_bits(d) == b);
        REQUIRE(n.mul3_add1().to_decimal() == oracle::dec_mul3_add1(d));
    }
    // carry across a limb boundary
    BinaryNat all = BinaryNat::all_ones(64);
    CHECK(all.mul3_add1().to_decimal() == oracle::dec_mul3_add1(all.to_decimal()));
}

TEST_CASE("half and shift_right")
{
    CHECK(bits("10").half().to_bits() == "1");
    CHECK(oracle::dec_half("60") == "30");
    CHECK(bits("111100").half() == BinaryNat::from_u64(30));
    CHECK(bits("10000").half().to_bits() == "1000");
    CHECK_THROWS_AS(bits("101").half(), bincollatz::ParityError);
    CHECK_THROWS_AS(bits("1").half(), bincollatz::ParityError);

    CHECK(bits("10000").shift_right(4).to_bits() == "1");
    CHECK(bits("10110").shift_right(0).to_bits() == "10110");
    CHECK(bits("11001010011000").shift_right(3).to_bits() == "11001010011");
    CHECK_THROWS_AS(bits("11001010011000").shift_right(4), bincollatz::ParityError);
    CHECK(BinaryNat::pow2(130).shift_right(129).to_bits() == "10");
}

TEST_CASE("trailing_zeros")
{
    CHECK(bits("111100").trailing_zeros() == 2);
    CHECK(bits("1").trailing_zeros() == 0);
    CHECK(BinaryNat::from_decimal("1180591620717411303424").trailing_zeros() == 70);
    CHECK(BinaryNat::pow2(128).trailing_zeros() == 128);
}

TEST_CASE("end_substring_len")
{
    CHECK(bits("1011001").end_substring_len() == 1);
    CHECK(bits("1011001111").end_substring_len() == 4);
    CHECK(bits("11111").end_substring_len() == 5);
    CHECK(BinaryNat::all_ones(100).end_substring_len() == 100);
    CHECK_THROWS_AS(bits("10110").end_substring_len(), bincollatz::ParityError);
}

TEST_CASE("predicates and accessors")
{
    CHECK(bits("111100").bit_length() == 6);
    CHECK(bits("1").append_bit(false).to_bits() == "10");
    CHECK(bits("1").append_bit(true).to_bits() == "11");
    CHECK(bits("101") > bits("11"));
    CHECK(bits("11") < bits("101"));
    CHECK(bits("101") == BinaryNat::from_u64(5));
    CHECK(BinaryNat::pow2(64) > BinaryNat::all_ones(64));
    CHECK(bits("1").is_one());
    CHECK_FALSE(bits("10").is_one());
    CHECK(bits("111").is_odd());
    CHECK(bits("110").is_even());
    CHECK(BinaryNat{}.is_one());
    CHECK(bits("1011").set_bit_positions() == std::vector<std::size_t>{3, 1, 0});
    CHECK(bits("1100001").prefix(3).to_bits() == "110");
    CHECK(bits("1100001").prefix(7).to_bits() == "1100001");
    CHECK_THROWS_AS(bits("11").prefix(3), bincollatz::DomainError);
    CHECK(BinaryNat::all_ones(64).successor() == BinaryNat::pow2(64));
    CHECK(BinaryNat::pow2(64).predecessor() == BinaryNat::all_ones(64));
    CHECK_THROWS_AS(BinaryNat{}.predecessor(), bincollatz::DomainError);
    CHECK(BinaryNat::from_u64(7).to_u64() == 7u);
    CHECK_FALSE(BinaryNat::pow2(64).to_u64().has_value());
    const std::size_t dup[] = {3, 3};
    CHECK_THROWS_AS(BinaryNat::from_bit_positions(dup), bincollatz::InvalidInput);
}

TEST_CASE("decimal and bit roundtrips")
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 10000; ++i) {
        BinaryNat n = random_nat(rng, 70);
        REQUIRE(BinaryNat::from_decimal(n.to_decimal()) == n);
        REQUIRE(BinaryNat::from_bits(n.to_bits()) == n);
        std::string d = n.to_decimal();
        REQUIRE(BinaryNat::from_decimal(d).to_decimal() == d);
    }
}

TEST_CASE("shift and append laws")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        BinaryNat n = random_nat(rng, 150);
        // canonical form
        REQUIRE(n.to_bits().front() == '1');

        std::size_t k = rng() % 80;
        BinaryNat grown = n;
        for (std::size_t j = 0; j < k; ++j)
            grown = grown.append_bit(false);
        REQUIRE(grown.trailing_zeros() == n.trailing_zeros() + k);
        REQUIRE(grown.shift_right(k) == n);

        bool b = rng() & 1;
        REQUIRE(n.append_bit(b).prefix(n.bit_length()) == n);

        if (n.is_even())
            REQUIRE(n.half().trailing_zeros() == n.trailing_zeros() - 1);

        BinaryNat m = random_nat(rng, 150);
        REQUIRE(BinaryNat::from_decimal(oracle::dec_add(n.to_decimal(), m.to_decimal())) == n + m);
    }
}
