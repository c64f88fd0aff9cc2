#include "cutgen/lambda_map.hpp"

#include <stdexcept>

namespace cutgen {

EdgeIndexing::EdgeIndexing(int n) : n_(n) {
    if (n < 2) throw std::invalid_argument("EdgeIndexing: n must be >= 2");
    edges_.reserve(choose2(static_cast<std::size_t>(n)));
    for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j <= n; ++j) edges_.emplace_back(i, j);
    }
}

std::size_t EdgeIndexing::position(int i, int j) const {
    if (i < 1 || j <= i || j > n_) throw std::invalid_argument("EdgeIndexing: need 1 <= i < j <= n");
    // Rows 1..i-1 contribute choose2(n) - choose2(n-i+1) edges.
    const auto n = static_cast<std::size_t>(n_);
    return choose2(n) - choose2(n - static_cast<std::size_t>(i) + 1) +
           static_cast<std::size_t>(j - i - 1);
}

BitString cut_vector(const std::vector<int>& subset, int n) {
    const EdgeIndexing edges(n);
    std::vector<std::uint8_t> member(static_cast<std::size_t>(n) + 1, 0);
    for (int v : subset) {
        if (v < 1 || v > n) throw std::invalid_argument("cut_vector: subset element outside [1, n]");
        member[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<std::uint8_t> out(edges.edge_count());
    for (std::size_t pos = 0; pos < out.size(); ++pos) {
        const auto [i, j] = edges.edge(pos);
        out[pos] = member[static_cast<std::size_t>(i)] != member[static_cast<std::size_t>(j)];
    }
    return BitString(std::move(out));
}

BitString lambda_vec(const BitString& x) {
    const std::size_t n = x.width();
    if (n < 2) throw std::invalid_argument("lambda_vec: width must be >= 2");
    std::vector<std::uint8_t> out;
    out.reserve(choose2(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) out.push_back(x[i] == x[j]);
    }
    return BitString(std::move(out));
}

BitString lambda_str(const BitString& x) {
    const std::size_t n = x.width();
    if (n < 2) throw std::invalid_argument("lambda_str: width must be >= 2");
    if (n == 2) return BitString({static_cast<std::uint8_t>(x[0] == x[1])});
    const BitString rest(std::vector<std::uint8_t>(x.bits().begin() + 1, x.bits().end()));
    const BitString head = x[0] ? rest : complement(rest);
    return concat(head, lambda_str(rest));
}

Code lambda_int(const Code& k, int n) {
    if (n < 2) throw std::invalid_argument("lambda_int: n must be >= 2");
    return encode(lambda_vec(decode(k, static_cast<std::size_t>(n))));
}

std::vector<int> support(const BitString& x) {
    std::vector<int> out;
    for (std::size_t i = 0; i < x.width(); ++i) {
        if (x[i]) out.push_back(static_cast<int>(i) + 1);
    }
    return out;
}

std::vector<VertexRecord> oracle_vertices(int n, int cap) {
    if (n < 2) throw std::invalid_argument("oracle_vertices: n must be >= 2");
    if (n > cap) throw std::invalid_argument("oracle_vertices: n exceeds the materialization cap");
    const Code count = pow2(static_cast<std::size_t>(n - 1));
    std::vector<VertexRecord> out;
    out.reserve(count.convert_to<std::size_t>());
    for (Code k = 1; k <= count; ++k) {
        const BitString x = decode(count + k - 1, static_cast<std::size_t>(n));
        BitString coords = lambda_vec(x);
        Code code = encode(coords);
        out.push_back({n, k, std::move(code), std::move(coords)});
    }
    return out;
}

}  // namespace cutgen
