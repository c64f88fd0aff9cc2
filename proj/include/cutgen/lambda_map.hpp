#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cutgen/bitcodec.hpp"

namespace cutgen {

/// Canonical bijection between the edges of K_n and coordinate positions:
/// (1,2),(1,3),...,(1,n),(2,3),...,(n-1,n). Every binom(n,2)-wide vector in
/// this library is ordered this way.
class EdgeIndexing {
public:
    explicit EdgeIndexing(int n);

    int n() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    /// Edge at coordinate position pos (0-based); returns the 1-based pair (i, j), i < j.
    std::pair<int, int> edge(std::size_t pos) const { return edges_[pos]; }
    /// Coordinate position (0-based) of the edge (i, j), 1 <= i < j <= n.
    std::size_t position(int i, int j) const;

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
};

/// Cut vector of the bipartition (S, [n] \ S): 1 exactly on edges with one
/// endpoint in S. Elements outside [1, n] are rejected. Invariant under
/// replacing S by its complement.
BitString cut_vector(const std::vector<int>& subset, int n);

/// Pairwise agreement map at vector level: coordinate (i, j) is 1 iff
/// x_i == x_j, in EdgeIndexing order. Requires width >= 2.
BitString lambda_vec(const BitString& x);

/// The same map computed by the prefix recursion
///   lambda(0 || x) = complement(x) || lambda(x)
///   lambda(1 || x) =            x  || lambda(x)
/// with the single agreement bit as the width-2 base. Kept as an independent
/// route from lambda_vec; the two must agree everywhere.
BitString lambda_str(const BitString& x);

/// Integer level: encode(lambda_vec(decode(k, n))). Requires 0 <= k < 2^n.
Code lambda_int(const Code& k, int n);

/// 1-based positions i with x_i = 1.
std::vector<int> support(const BitString& x);

/// One vertex of 1-CUT(n) or CUT(n): 1-based index k, its integer code, and
/// optionally the binom(n,2)-wide coordinate vector (encode(coords) == code).
struct VertexRecord {
    int n = 0;
    Code k;
    Code code;
    std::optional<BitString> coords;
};

/// Materialization cap for oracle_vertices (2^19 records at n = 20).
inline constexpr int kOracleCap = 20;

/// Brute-force enumeration of the 1-CUT(n) vertices: for k = 1..2^{n-1},
/// take the width-n string with leading bit 1 and value 2^{n-1}+k-1 and apply
/// the agreement map coordinate by coordinate. Deliberately naive; shares
/// nothing with the closed-form generator beyond the bit codec, so it can
/// serve as an independent check. Returns records in ascending k with coords
/// populated. Throws std::invalid_argument for n < 2 or n > cap.
std::vector<VertexRecord> oracle_vertices(int n, int cap = kOracleCap);

}  // namespace cutgen
