#pragma once

// Dimension counts for caterpillar invariant spaces by dynamic programming
// over the junction weights, with optional level truncation, witness
// sequences, and the graded count of leveled chains.

#include <optional>
#include <vector>

#include "pierichain/chains.hpp"

namespace pierichain {

struct LabellingCount {
  Int dimension = 0;
  /// Junction weight sequences (lambda_1 .. lambda_{a+b-3}), one per
  /// dimension, filled only when requested.
  std::vector<std::vector<SlWeight>> witnesses;
};

/// Counts junction-weight sequences whose factor spaces are all nonzero for
/// leg weights r (length a >= 2) and s (length b >= 2); K truncates every
/// factor at that level. Witness listing is guarded by max_objects.
[[nodiscard]] LabellingCount count_labellings(int m, const std::vector<Int>& r,
                                              const std::vector<Int>& s, std::optional<Int> K,
                                              bool list_witnesses = false,
                                              Int max_objects = 1000000);

/// Dimension of the full invariant space for the multidegree.
[[nodiscard]] Int dim_invariants(int m, const std::vector<Int>& r, const std::vector<Int>& s);

/// Dimension of the level-K truncation; monotone in K and stabilizing to
/// dim_invariants once K reaches the total leg weight.
[[nodiscard]] Int dim_conformal_blocks(int m, const std::vector<Int>& r,
                                       const std::vector<Int>& s, Int K);

/// The chain elements realizing each witness sequence.
[[nodiscard]] std::vector<ChainElement> labelled_chains(int m, const std::vector<Int>& r,
                                                        const std::vector<Int>& s,
                                                        std::optional<Int> K,
                                                        Int max_objects = 1000000);

/// Number of leveled chains of shape (a, b) with bound exactly K: the sum of
/// dim_conformal_blocks over all multidegrees with entries <= K.
[[nodiscard]] Int hilbert_level(int m, int a, int b, Int K, Int max_objects = 1000000);

}  // namespace pierichain
