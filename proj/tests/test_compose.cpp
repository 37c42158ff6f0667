#include "bincollatz/compose.hpp"
#include "bincollatz/error.hpp"

#include <doctest.h>

#include <random>

using namespace bincollatz;

namespace {

std::vector<std::uint64_t> as_u64(const std::vector<BinaryNat>& values)
{
    std::vector<std::uint64_t> out;
    for (const auto& v : values)
        out.push_back(*v.to_u64());
    return out;
}

} // namespace

TEST_CASE("apply")
{
    CHECK(apply(CompositionPath::parse("OO")) == BinaryNat::from_u64(7));
    CHECK(apply(CompositionPath{}).is_one());
    // O(E(O(O(O(O(E(1))))))) written inner-to-outer
    CompositionPath p = CompositionPath::parse("EOOOOEO");
    CHECK(apply(p).to_bits() == "10111101");
    CHECK(apply(p) == BinaryNat::from_u64(189));
    CHECK(p.to_nested_string() == "O(E(O(O(O(O(E(1)))))))");
}

TEST_CASE("decompose")
{
    CHECK(decompose(BinaryNat::from_u64(60)).to_string() == "OOOEE");
    CHECK(decompose(BinaryNat{}).steps.empty());
    CHECK(decompose(BinaryNat::from_u64(189)).to_string() == "EOOOOEO");
    CHECK_THROWS_AS(CompositionPath::parse("OXE"), InvalidInput);
}

TEST_CASE("f_inverse")
{
    CHECK(f_inverse(BinaryNat::from_bits("11100")).to_bits() == "1110");
    CHECK(f_inverse(BinaryNat::from_bits("10")).is_one());
    CHECK(f_inverse(BinaryNat::from_bits("10101")).to_bits() == "1010");
    CHECK_THROWS_AS(f_inverse(BinaryNat{}), DomainError);
}

TEST_CASE("tree_path")
{
    CHECK(as_u64(tree_path(BinaryNat::from_u64(21))) == std::vector<std::uint64_t>{1, 2, 5, 10, 21});
    CHECK(as_u64(tree_path(BinaryNat{})) == std::vector<std::uint64_t>{1});
    CHECK(as_u64(tree_path(BinaryNat::from_u64(28))) == std::vector<std::uint64_t>{1, 3, 7, 14, 28});
}

TEST_CASE("tree_children and tree_level")
{
    auto [l1, r1] = tree_children(BinaryNat{});
    CHECK(l1.to_bits() == "10");
    CHECK(r1.to_bits() == "11");
    auto [l5, r5] = tree_children(BinaryNat::from_bits("101"));
    CHECK(l5.to_bits() == "1010");
    CHECK(r5.to_bits() == "1011");
    auto [l7, r7] = tree_children(BinaryNat::from_bits("111"));
    CHECK(l7.to_bits() == "1110");
    CHECK(r7.to_bits() == "1111");

    CHECK(tree_level(BinaryNat{}) == 1);
    CHECK(tree_level(BinaryNat::from_u64(60)) == 6);
    CHECK(tree_level(BinaryNat::from_u64(21)) == 5);
}

TEST_CASE("subtree")
{
    auto two = subtree(2);
    REQUIRE(two.size() == 2);
    CHECK(as_u64(two[0]) == std::vector<std::uint64_t>{1});
    CHECK(as_u64(two[1]) == std::vector<std::uint64_t>{2, 3});
    auto three = subtree(3);
    CHECK(as_u64(three[2]) == std::vector<std::uint64_t>{4, 5, 6, 7});

    for (std::size_t d = 1; d <= 12; ++d) {
        auto levels = subtree(d);
        std::size_t total = 0;
        for (std::size_t level = 0; level < levels.size(); ++level) {
            total += levels[level].size();
            REQUIRE(levels[level].size() == (std::size_t{1} << level));
            for (std::size_t i = 0; i < levels[level].size(); ++i) {
                REQUIRE(*levels[level][i].to_u64() == (std::uint64_t{1} << level) + i);
                if (level > 0)
                    REQUIRE(f_inverse(levels[level][i]) == levels[level - 1][i / 2]);
            }
        }
        CHECK(total == (std::size_t{1} << d) - 1);
    }

    CHECK_THROWS_AS(subtree(0), DomainError);
    CHECK_THROWS_AS(subtree(21), ResourceError);
    CHECK_NOTHROW(subtree(3, 3));
    CHECK_THROWS_AS(subtree(4, 3), ResourceError);
}

TEST_CASE("composition roundtrips are exhaustive below 2^14")
{
    for (std::uint64_t v = 1; v < (1u << 14); ++v) {
        BinaryNat n = BinaryNat::from_u64(v);
        CompositionPath p = decompose(n);
        REQUIRE(apply(p) == n);
        REQUIRE(p.steps.size() == n.bit_length() - 1);
        REQUIRE(CompositionPath::parse(p.to_string()) == p);
        REQUIRE(decompose(apply(p)) == p);
    }
}

TEST_CASE("tree_path is the reversed f_inverse chain; f_inverse decreases")
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 500; ++i) {
        std::string s = "1";
        std::size_t len = rng() % 200;
        for (std::size_t j = 0; j < len; ++j)
            s.push_back((rng() & 1) ? '1' : '0');
        BinaryNat n = BinaryNat::from_bits(s);

        std::vector<BinaryNat> chain{n};
        while (!chain.back().is_one()) {
            BinaryNat parent = f_inverse(chain.back());
            REQUIRE(parent < chain.back());
            chain.push_back(parent);
        }
        std::reverse(chain.begin(), chain.end());
        REQUIRE(tree_path(n) == chain);
        REQUIRE(decompose(n).steps.size() == n.bit_length() - 1);
        REQUIRE(apply(decompose(n)) == n);
    }
}
