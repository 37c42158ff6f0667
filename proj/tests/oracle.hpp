#pragma once

// Reference arithmetic for tests, deliberately independent of BinaryNat:
// schoolbook decimal strings and machine-word Collatz iteration.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace oracle {

inline std::string dec_from_u64(std::uint64_t v)
{
    return std::to_string(v);
}

inline bool dec_is_odd(const std::string& d)
{
    return (d.back() - '0') % 2 == 1;
}

inline std::string dec_strip(std::string d)
{
    auto pos = d.find_first_not_of('0');
    return pos == std::string::npos ? "0" : d.substr(pos);
}

inline std::string dec_add(const std::string& a, const std::string& b)
{
    std::string out;
    int carry = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
        int da = i < a.size() ? a[a.size() - 1 - i] - '0' : 0;
        int db = i < b.size() ? b[b.size() - 1 - i] - '0' : 0;
        int s = da + db + carry;
        out.push_back(static_cast<char>('0' + s % 10));
        carry = s / 10;
    }
    std::reverse(out.begin(), out.end());
    return dec_strip(out);
}

inline std::string dec_mul_small(const std::string& a, int m)
{
    std::string out;
    int carry = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        int s = (a[a.size() - 1 - i] - '0') * m + carry;
        out.push_back(static_cast<char>('0' + s % 10));
        carry = s / 10;
    }
    while (carry) {
        out.push_back(static_cast<char>('0' + carry % 10));
        carry /= 10;
    }
    std::reverse(out.begin(), out.end());
    return dec_strip(out);
}

inline std::string dec_mul3_add1(const std::string& a)
{
    return dec_add(dec_mul_small(a, 3), "1");
}

inline std::string dec_half(const std::string& a)
{
    std::string out;
    int rem = 0;
    for (char c : a) {
        int cur = rem * 10 + (c - '0');
        out.push_back(static_cast<char>('0' + cur / 2));
        rem = cur % 2;
    }
    return dec_strip(out);
}

inline std::string dec_pow2(unsigned k)
{
    std::string out = "1";
    for (unsigned i = 0; i < k; ++i)
        out = dec_mul_small(out, 2);
    return out;
}

// Binary string by repeated decimal halving, independent of BinaryNat.
inline std::string dec_to_bits(std::string d)
{
    std::string bits;
    while (d != "0") {
        bits.push_back(dec_is_odd(d) ? '1' : '0');
        d = dec_half(d);
    }
    std::reverse(bits.begin(), bits.end());
    return bits;
}

// Plain T iteration on 128-bit words; empty if 1 is not reached within cap
// or a value overflows.
inline std::optional<std::size_t> stopping_time(unsigned __int128 n, std::size_t cap)
{
    std::size_t steps = 0;
    while (n != 1) {
        if (steps == cap)
            return std::nullopt;
        if (n & 1) {
            if (n > (~static_cast<unsigned __int128>(0) - 1) / 3)
                return std::nullopt;
            n = 3 * n + 1;
        } else {
            n /= 2;
        }
        ++steps;
    }
    return steps;
}

inline std::vector<std::uint64_t> trajectory(std::uint64_t n)
{
    std::vector<std::uint64_t> out{n};
    while (n != 1) {
        n = (n & 1) ? 3 * n + 1 : n / 2;
        out.push_back(n);
    }
    return out;
}

} // namespace oracle
