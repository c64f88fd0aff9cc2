#include "cutgen/bitcodec.hpp"

#include <stdexcept>

namespace cutgen {

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (std::uint8_t b : bits_) {
        if (b > 1) throw std::invalid_argument("BitString: entries must be 0 or 1");
    }
}

BitString BitString::from_string(std::string_view s) {
    std::vector<std::uint8_t> bits;
    bits.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1') throw std::invalid_argument("BitString: expected '0' or '1'");
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return BitString(std::move(bits));
}

std::string BitString::str() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i) s[i] += bits_[i];
    return s;
}

Code encode(const BitString& x) {
    Code out = 0;
    const std::size_t w = x.width();
    for (std::size_t i = 0; i < w; ++i) {
        if (x[i]) boost::multiprecision::bit_set(out, static_cast<unsigned>(w - 1 - i));
    }
    return out;
}

BitString decode(const Code& k, std::size_t width) {
    if (k < 0) throw std::invalid_argument("decode: value must be non-negative");
    if (k >= pow2(width)) throw std::invalid_argument("decode: value does not fit the requested width");
    std::vector<std::uint8_t> bits(width);
    for (std::size_t i = 0; i < width; ++i) {
        bits[i] = boost::multiprecision::bit_test(k, static_cast<unsigned>(width - 1 - i)) ? 1 : 0;
    }
    return BitString(std::move(bits));
}

BitString complement(const BitString& x) {
    std::vector<std::uint8_t> bits(x.bits());
    for (std::uint8_t& b : bits) b ^= 1;
    return BitString(std::move(bits));
}

BitString concat(const BitString& a, const BitString& b) {
    std::vector<std::uint8_t> bits;
    bits.reserve(a.width() + b.width());
    bits.insert(bits.end(), a.bits().begin(), a.bits().end());
    bits.insert(bits.end(), b.bits().begin(), b.bits().end());
    return BitString(std::move(bits));
}

std::strong_ordering lex_compare(const BitString& a, const BitString& b) {
    if (a.width() != b.width())
        throw std::invalid_argument("lex_compare: order is defined only for equal widths");
    return a.bits() <=> b.bits();
}

}  // namespace cutgen
