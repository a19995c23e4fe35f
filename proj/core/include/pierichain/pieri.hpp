#pragma once

// Multiplicity-free Pieri decisions and the interlacing patterns that witness
// them, in both orientations (middle tensor factor a power of the first or of
// the last fundamental weight). A pattern is two weakly decreasing rows, one
// of length m and one of length m-1, interlacing entrywise; which row sits on
// top is the orientation. Patterns add entrywise, boundary weights are
// additive, and every pattern decomposes uniquely into the small generator
// patterns enumerated here.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pierichain/weights.hpp"

namespace pierichain {

enum class Orientation { normal, dual };

[[nodiscard]] std::string to_string(Orientation o);

/// Label [upper, lower] of an atomic pattern. upper indexes the long row's
/// fundamental weight (1..m, or 0 for the identity), lower the short row's
/// (0..m-1); a valid label has lower equal to upper or upper - 1. The
/// identity is always [0,0], never [m,m].
class PieriGenerator {
 public:
  PieriGenerator(int m, int upper, int lower, Orientation orientation);

  [[nodiscard]] static PieriGenerator identity(int m, Orientation orientation);

  [[nodiscard]] int rank() const { return m_; }
  [[nodiscard]] int upper() const { return upper_; }
  [[nodiscard]] int lower() const { return lower_; }
  [[nodiscard]] Orientation orientation() const { return orientation_; }
  [[nodiscard]] bool is_identity() const { return upper_ == 0; }

  friend auto operator<=>(const PieriGenerator&, const PieriGenerator&) = default;

 private:
  int m_;
  int upper_;
  int lower_;
  Orientation orientation_;
};

/// "[3,2]" for normal orientation, "[3,2]*" for dual.
[[nodiscard]] std::string to_string(const PieriGenerator& g);

/// Two interlacing rows. The long row has m entries, the short row m-1, and
/// long_i >= short_i >= long_{i+1} throughout (so both rows are weakly
/// decreasing and nonnegative). Orientation normal puts the long row on top.
class InterlacingPattern {
 public:
  InterlacingPattern(Orientation orientation, std::vector<Int> long_row,
                     std::vector<Int> short_row);

  /// Builds from displayed rows; the orientation is inferred from which row
  /// is longer. Rows must have lengths m and m-1 in either order.
  [[nodiscard]] static InterlacingPattern from_rows(std::vector<Int> top, std::vector<Int> bottom);

  [[nodiscard]] static InterlacingPattern zero(int m, Orientation orientation);

  [[nodiscard]] int rank() const { return m_; }
  [[nodiscard]] Orientation orientation() const { return orientation_; }
  [[nodiscard]] const std::vector<Int>& long_row() const { return long_; }
  [[nodiscard]] const std::vector<Int>& short_row() const { return short_; }
  [[nodiscard]] const std::vector<Int>& top() const;
  [[nodiscard]] const std::vector<Int>& bottom() const;

  friend auto operator<=>(const InterlacingPattern&, const InterlacingPattern&) = default;

 private:
  int m_;
  Orientation orientation_;
  std::vector<Int> long_;
  std::vector<Int> short_;
};

/// "top=3,3,1;bottom=3,2".
[[nodiscard]] std::string to_string(const InterlacingPattern& p);

/// Parses the "top=..;bottom=.." form, inferring orientation from lengths.
[[nodiscard]] InterlacingPattern parse_pattern(const std::string& text);

/// Entrywise sum; orientations and ranks must agree.
[[nodiscard]] InterlacingPattern add(const InterlacingPattern& a, const InterlacingPattern& b);

/// Entrywise difference, or nullopt when the difference rows fail to
/// interlace or go negative.
[[nodiscard]] std::optional<InterlacingPattern> try_subtract(const InterlacingPattern& a,
                                                             const InterlacingPattern& b);

/// The witness pattern for a one-dimensional space of invariants in
/// V(lambda) x V(r omega_1) x V(eta), or nullopt when the space is zero.
/// Normal orientation: top row is the unique lift of dual(lambda) whose row
/// sum exceeds the bottom row sum eta by exactly r.
[[nodiscard]] std::optional<InterlacingPattern> build_pattern(const SlWeight& lambda, Int r,
                                                              const SlWeight& eta);

/// Dual-orientation witness for V(lambda) x V(s omega_{m-1}) x V(eta):
/// the short top row is dual(lambda), the long bottom row the unique lift of
/// eta whose sum exceeds it by s.
[[nodiscard]] std::optional<InterlacingPattern> build_dual_pattern(const SlWeight& lambda, Int s,
                                                                   const SlWeight& eta);

/// 1 when V(lambda) x V(r omega_1) x V(eta) has an invariant, else 0.
[[nodiscard]] int pieri_dim(const SlWeight& lambda, Int r, const SlWeight& eta);

/// 1 when V(lambda) x V(s omega_{m-1}) x V(eta) has an invariant, else 0.
/// Implemented directly from the long-bottom-row conditions, independently of
/// pieri_dim; the two are exchanged by dualizing all weights.
[[nodiscard]] int dual_pieri_dim(const SlWeight& lambda, Int s, const SlWeight& eta);

/// First boundary weight: the short-row content of the bottom row,
/// as an SL weight (reduced when the bottom row is the long one).
[[nodiscard]] SlWeight boundary_1(const InterlacingPattern& p);

/// Second boundary weight: dual of the top row's SL content. Gluing joins
/// boundary_1 of one pattern to the dual of boundary_2 of the next.
[[nodiscard]] SlWeight boundary_2(const InterlacingPattern& p);

/// The middle-leg degree of the pattern: long row sum minus short row sum.
[[nodiscard]] Int middle_degree(const InterlacingPattern& p);

/// The atomic pattern for a generator label: long row omega_{upper}, short
/// row omega_{lower} (as GL rows), oriented per the label.
[[nodiscard]] InterlacingPattern generator_pattern(const PieriGenerator& g);

/// The 2m-1 non-identity generator labels of one orientation:
/// [k,k] for k = 1..m-1 and [k+1,k] for k = 0..m-1.
[[nodiscard]] std::vector<PieriGenerator> pieri_generators(int m, Orientation orientation);

using GeneratorMultiset = std::map<PieriGenerator, Int>;

/// Unique decomposition of a pattern into non-identity generator patterns.
/// With long row a and short row b: [m,m-1] appears a_m times, [k,k] appears
/// b_k - a_{k+1} times, [k,k-1] appears a_k - b_k times; interlacing makes
/// every multiplicity nonnegative and the total equals a_1.
[[nodiscard]] GeneratorMultiset decompose(const InterlacingPattern& p);

/// Entrywise sum of generator patterns. All generators must share rank and
/// orientation; an empty multiset needs the explicit rank (and orientation)
/// to produce the all-zero pattern.
[[nodiscard]] InterlacingPattern recompose(const GeneratorMultiset& gens,
                                           std::optional<int> rank = std::nullopt,
                                           Orientation orientation = Orientation::normal);

}  // namespace pierichain
