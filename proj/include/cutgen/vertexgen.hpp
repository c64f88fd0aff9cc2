#pragma once

#include <functional>

#include "cutgen/bitcodec.hpp"
#include "cutgen/lambda_map.hpp"

namespace cutgen {

enum class Polytope { OneCut, Cut };

/// Closed-form code of vertex k of 1-CUT(n):
///   v^n(k) = 2^binom(n-1,2) (k-1) + sum_{j=1}^{n-2} 2^binom(j,2) (S^{2^j}(k) - 1)
/// The empty sum covers the bases v^1(1) = 0 and v^2(k) = k - 1. This is the
/// production path; the recursive and brute-force routes exist to check it.
/// Requires n >= 1 and 1 <= k <= 2^{n-1} (range enforced exactly, no floats).
Code vertex_code_closed(int n, const Code& k);

/// The same quantity by the recursion
///   v^n(k) = 2^binom(n-1,2) (k-1) + v^{n-1}(S^{2^{n-2}}(k)),  v^2 = (0, 1).
/// Requires n >= 2.
Code vertex_code_recursive(int n, const Code& k);

/// Code of vertex k of CUT(n): w^n(k) = 2^binom(n,2) - 1 - v^n(k). The n = 1
/// and n = 2 bases (w^1 = (0), w^2 = (1, 0)) satisfy the same identity.
Code cut_vertex_code(int n, const Code& k);

/// Vertex record with the coordinate vector filled in
/// (coords = decode(code, binom(n,2))).
VertexRecord vertex_coords(int n, const Code& k, Polytope polytope);

/// Generation request: all of 1 <= k_lo <= k_hi <= 2^{n-1}.
struct GeneratorParams {
    int n = 1;
    Code k_lo = 1;
    Code k_hi = 1;

    static GeneratorParams full(int n);
};

/// Stream the vertices for k = k_lo..k_hi in ascending order through sink,
/// one record at a time; memory use is independent of the range length.
/// Coordinate vectors are decoded only when with_coords is set. Powers of two
/// appearing in the closed form are prepared once per call, not per vertex.
void vertices_stream(const GeneratorParams& params, Polytope polytope,
                     const std::function<void(const VertexRecord&)>& sink,
                     bool with_coords = false);

}  // namespace cutgen
