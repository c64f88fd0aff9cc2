#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cutgen {

/// Arbitrary-precision integer used for all encoded values. Vertex codes need
/// binom(n,2) bits (190 bits at n = 20), so fixed-width machine integers do
/// not suffice.
using Code = boost::multiprecision::cpp_int;

/// binom(a, 2), with binom(0,2) = binom(1,2) = 0.
constexpr std::size_t choose2(std::size_t a) { return a < 2 ? 0 : a * (a - 1) / 2; }

/// 2^e as a Code.
inline Code pow2(std::size_t e) { return Code(1) << e; }

/// Fixed-width 0/1 vector. Index 0 is the most significant (leftmost) bit, so
/// encode() reads the bits as written. Width 0 is allowed and acts as the
/// identity for concat(); it is also the coordinate vector of the n = 1
/// polytope. Immutable value type.
class BitString {
public:
    BitString() = default;
    explicit BitString(std::vector<std::uint8_t> bits);

    static BitString zeros(std::size_t width) { return BitString(std::vector<std::uint8_t>(width, 0)); }
    /// Parse a run of '0'/'1' characters, most significant first.
    static BitString from_string(std::string_view s);

    std::size_t width() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    /// Bit at position i counted from the most significant end (0-based).
    int operator[](std::size_t i) const { return bits_[i]; }
    const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

    /// ASCII rendering, '0'/'1', most significant first.
    std::string str() const;

    friend bool operator==(const BitString&, const BitString&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// Positional binary value: sum of bits[j] * 2^(width-1-j).
Code encode(const BitString& x);

/// Inverse of encode at a fixed width; pads with leading zeros. Width is
/// always explicit because the same integer decodes differently at different
/// widths. Throws std::invalid_argument if k < 0 or k >= 2^width.
BitString decode(const Code& k, std::size_t width);

/// Bitwise complement; encode(complement(x)) == 2^width - 1 - encode(x).
BitString complement(const BitString& x);

/// Bits of a followed by bits of b.
BitString concat(const BitString& a, const BitString& b);

/// Lexicographic comparison of equal-width strings; agrees with comparing the
/// encoded values. Throws std::invalid_argument on a width mismatch, since
/// the order is defined only for equal lengths.
std::strong_ordering lex_compare(const BitString& a, const BitString& b);

}  // namespace cutgen
