#pragma once

// Level-truncated Pieri decisions and the leveled generator inventory. The
// level of a pattern is its long row's first entry; a leveled pattern carries
// a shared bound K that every lift must respect. At K = 1 the surviving
// patterns are exactly the generator patterns, padded by the identity.

#include <vector>

#include "pierichain/pieri.hpp"

namespace pierichain {

/// Level of a pattern: first entry of the long row. Equals the total
/// generator multiplicity of its decomposition; additive under pattern sums.
[[nodiscard]] Int level(const InterlacingPattern& p);

/// A pattern together with a level bound K >= level(pattern).
class LeveledPattern {
 public:
  LeveledPattern(InterlacingPattern pattern, Int bound);

  [[nodiscard]] const InterlacingPattern& pattern() const { return pattern_; }
  [[nodiscard]] Int bound() const { return bound_; }

  friend auto operator<=>(const LeveledPattern&, const LeveledPattern&) = default;

 private:
  InterlacingPattern pattern_;
  Int bound_;
};

/// 1 when V(lambda) x V(r omega_1) x V(eta) has an invariant at level K:
/// the Pieri witness exists, r <= K, and the witness top row starts <= K.
[[nodiscard]] int kpieri_dim(const SlWeight& lambda, Int r, const SlWeight& eta, Int K);

/// Dual-orientation level truncation: witness exists, s <= K, and the long
/// bottom row starts <= K.
[[nodiscard]] int kpieri_dual_dim(const SlWeight& lambda, Int s, const SlWeight& eta, Int K);

/// Position of a pattern factor within a glued chain. The two end kinds
/// constrain the pattern shape (long row constant until its last entry,
/// short row constant until its last entry); the middle kinds do not.
enum class FactorKind { end_normal, middle_normal, middle_dual, end_dual };

[[nodiscard]] std::string to_string(FactorKind kind);
[[nodiscard]] Orientation orientation_of(FactorKind kind);

/// Whether a pattern may occupy a slot of the given kind: orientation must
/// match, and end slots additionally need the constant-row shape.
[[nodiscard]] bool fits_kind(const InterlacingPattern& p, FactorKind kind);

/// Level-1 generator labels for one slot kind, identity included:
/// 2m for middle kinds ([k+1,k] for k = 0..m-1, [k,k] for k = 1..m-1, and
/// [0,0]); 4 for end kinds ([m,m-1], [m-1,m-1], [m-1,m-2], [0,0]).
[[nodiscard]] std::vector<PieriGenerator> k_generators(int m, FactorKind kind);

}  // namespace pierichain
