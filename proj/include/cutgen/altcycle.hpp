#pragma once

#include "cutgen/bitcodec.hpp"

namespace cutgen {

/// Alternating cycle function S^N. Period 2N: each block descends N..1 and
/// then ascends 1..N, so every value lies in [1, N].
///
/// Any amplitude N >= 2 is accepted; the power-of-two restriction belongs to
/// the vertex generator's call sites. k is arbitrary precision and is reduced
/// modulo the period up front, so huge arguments cost one division.
/// Throws std::invalid_argument for N < 2 or k < 1 (the domain starts at 1).
Code alt_cycle(const Code& amplitude, const Code& k);

/// Branch form of S^M on a single period: M+1-k for k in [1, M], k-M for
/// k in (M, 2M]. Agrees with alt_cycle on that domain; kept as a separate
/// route for cross-checking. Throws std::invalid_argument outside [1, 2M].
Code alt_cycle_one_period(const Code& amplitude, const Code& k);

}  // namespace cutgen
