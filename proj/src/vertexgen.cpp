#include "cutgen/vertexgen.hpp"

#include <stdexcept>

#include "cutgen/altcycle.hpp"

namespace cutgen {

namespace {

void check_vertex_index(int n, const Code& k, int min_n) {
    if (n < min_n) throw std::invalid_argument("vertex index: n out of range");
    if (k < 1 || k > pow2(static_cast<std::size_t>(n - 1)))
        throw std::invalid_argument("vertex index: k must lie in [1, 2^(n-1)]");
}

// Term amplitudes 2^j and bit offsets binom(j,2) of the closed form, built
// once and reused across a whole k-range.
struct ClosedFormTerms {
    explicit ClosedFormTerms(int n) : top_shift(choose2(static_cast<std::size_t>(n - 1))) {
        for (int j = 1; j <= n - 2; ++j) {
            amplitudes.push_back(pow2(static_cast<std::size_t>(j)));
            shifts.push_back(choose2(static_cast<std::size_t>(j)));
        }
    }

    Code eval(const Code& k) const {
        Code v = (k - 1) << top_shift;
        for (std::size_t t = 0; t < amplitudes.size(); ++t) {
            v += (alt_cycle(amplitudes[t], k) - 1) << shifts[t];
        }
        return v;
    }

    std::size_t top_shift;
    std::vector<Code> amplitudes;
    std::vector<std::size_t> shifts;
};

}  // namespace

Code vertex_code_closed(int n, const Code& k) {
    check_vertex_index(n, k, 1);
    // The n = 1 and n = 2 bases fall out of the general sum: the j-loop is
    // empty and the leading term is (k-1) << 0.
    return ClosedFormTerms(n).eval(k);
}

Code vertex_code_recursive(int n, const Code& k) {
    check_vertex_index(n, k, 2);
    if (n == 2) return k - 1;
    const Code inner = alt_cycle(pow2(static_cast<std::size_t>(n - 2)), k);
    return ((k - 1) << choose2(static_cast<std::size_t>(n - 1))) + vertex_code_recursive(n - 1, inner);
}

Code cut_vertex_code(int n, const Code& k) {
    return pow2(choose2(static_cast<std::size_t>(n))) - 1 - vertex_code_closed(n, k);
}

VertexRecord vertex_coords(int n, const Code& k, Polytope polytope) {
    Code code = polytope == Polytope::OneCut ? vertex_code_closed(n, k) : cut_vertex_code(n, k);
    const std::size_t m = choose2(static_cast<std::size_t>(n));
    BitString coords = decode(code, m);
    return {n, k, std::move(code), std::move(coords)};
}

GeneratorParams GeneratorParams::full(int n) {
    if (n < 1) throw std::invalid_argument("GeneratorParams: n must be >= 1");
    return {n, Code(1), pow2(static_cast<std::size_t>(n - 1))};
}

void vertices_stream(const GeneratorParams& params, Polytope polytope,
                     const std::function<void(const VertexRecord&)>& sink, bool with_coords) {
    check_vertex_index(params.n, params.k_lo, 1);
    check_vertex_index(params.n, params.k_hi, 1);
    if (params.k_lo > params.k_hi)
        throw std::invalid_argument("vertices_stream: k range must satisfy k_lo <= k_hi");

    const ClosedFormTerms terms(params.n);
    const std::size_t m = choose2(static_cast<std::size_t>(params.n));
    const Code full_mask = pow2(m) - 1;

    VertexRecord rec;
    rec.n = params.n;
    for (Code k = params.k_lo; k <= params.k_hi; ++k) {
        Code code = terms.eval(k);
        if (polytope == Polytope::Cut) code = full_mask - code;
        rec.k = k;
        rec.code = std::move(code);
        if (with_coords) rec.coords = decode(rec.code, m);
        sink(rec);
    }
}

}  // namespace cutgen
