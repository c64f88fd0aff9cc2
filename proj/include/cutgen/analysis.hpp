#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cutgen/bitcodec.hpp"

namespace cutgen {

/// One row of the scaled-vertex table. Everything is exact integer data:
/// scaled = v^n(k) / 2^e with e = binom(n-1,2), and the residual against the
/// reference line y = k - 1/2 is (2 v^n(k) - (2k-1) 2^e) / 2^{e+1}. The
/// proven bound puts scaled in [k-1, k), hence the residual in [-1/2, 1/2).
struct ResidualRow {
    Code k;
    Code code;                  // v^n(k)
    Code scaled_num;            // over 2^scaled_den_exp
    unsigned scaled_den_exp;    // binom(n-1,2)
    Code residual_num;          // signed, over 2^residual_den_exp
    unsigned residual_den_exp;  // scaled_den_exp + 1
};

/// Materialization cap, same scale as the oracle cap.
inline constexpr int kAnalysisCap = 20;

/// One row per k = 1..2^{n-1}, ascending. Throws for n < 2 or n > cap.
std::vector<ResidualRow> residual_table(int n, int cap = kAnalysisCap);

/// Outcome of checking (k-1) 2^e <= v^n(k) < k 2^e for every k. Comparisons
/// are exact; max_abs_residual_num / 2^residual_den_exp is the largest
/// |residual| and argmax_k the first row attaining it.
struct BoundsReport {
    int n = 0;
    bool pass = false;
    std::uint64_t rows = 0;
    Code max_abs_residual_num;
    unsigned residual_den_exp = 0;
    Code argmax_k;
};

BoundsReport check_bounds(int n, int cap = kAnalysisCap);

/// Default number of significant digits for decimal renderings.
inline constexpr int kDefaultPrecision = 12;

/// Plain-decimal rendering of num / 2^den_exp rounded to sig_digits
/// significant digits (half away from zero); trailing fractional zeros are
/// trimmed. Dyadic rationals have finite expansions, so the result is exact
/// whenever it fits in the requested precision.
std::string dyadic_decimal(const Code& num, unsigned den_exp, int sig_digits);

/// CSV with header n,k,v,scaled_num,scaled_den_exp,scaled_decimal,residual_decimal;
/// all cells numeric, one row per k. Rows are streamed, not materialized.
void write_residual_csv(std::ostream& out, int n, int precision = kDefaultPrecision,
                        int cap = kAnalysisCap);

}  // namespace cutgen
