#pragma once

// Glued caterpillar chains of interlacing patterns, and the residue tuples
// that index their level-1 generators. A chain for shape (a, b) has a-1
// pattern factors of normal orientation followed by b-1 of dual orientation
// (ends constrained in shape), consecutive factors agreeing across each
// junction: boundary_1 of the left factor equals the dual of boundary_2 of
// the right factor. Chains add factorwise; a leveled chain carries a shared
// bound added along with it.

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pierichain/kpieri.hpp"

namespace pierichain {

/// Junction mismatch when gluing; position is the 1-based junction index.
struct BoundaryMismatchError : std::invalid_argument {
  explicit BoundaryMismatchError(int position)
      : std::invalid_argument("boundary mismatch at junction " + std::to_string(position)),
        position(position) {}
  int position;
};

/// A factor's level exceeds the shared bound; position is 1-based.
struct LevelExceededError : std::invalid_argument {
  explicit LevelExceededError(int position)
      : std::invalid_argument("level bound exceeded at factor " + std::to_string(position)),
        position(position) {}
  int position;
};

/// Multidegree of a chain: the leg weights it consumes. r has a entries and
/// s has b entries; a leveled chain also records the shared bound.
struct WeightData {
  std::vector<Int> r;
  std::vector<Int> s;
  std::optional<Int> level;

  friend auto operator<=>(const WeightData&, const WeightData&) = default;
};

[[nodiscard]] std::string to_string(const WeightData& w);

/// Validated chain of glued factors. Shape (a, b) is recovered from the
/// factor orientations: a-1 normal factors then b-1 dual ones.
class ChainElement {
 public:
  [[nodiscard]] int rank() const { return m_; }
  [[nodiscard]] int arm_a() const { return a_; }
  [[nodiscard]] int arm_b() const { return b_; }
  [[nodiscard]] const std::vector<InterlacingPattern>& factors() const { return factors_; }
  [[nodiscard]] const std::optional<Int>& bound() const { return bound_; }

  /// Slot kind of the 1-based factor position.
  [[nodiscard]] FactorKind kind_of(int position) const;

  /// Leg weights consumed by the factors; level carried over from the bound.
  [[nodiscard]] WeightData weight_data() const;

  friend auto operator<=>(const ChainElement&, const ChainElement&) = default;

  friend ChainElement glue(std::vector<InterlacingPattern> factors, std::optional<Int> bound);
  friend ChainElement add(const ChainElement& x, const ChainElement& y);
  friend std::optional<ChainElement> try_subtract(const ChainElement& x, const ChainElement& y);

 private:
  ChainElement(int m, int a, int b, std::vector<InterlacingPattern> factors,
               std::optional<Int> bound);

  int m_;
  int a_;
  int b_;
  std::vector<InterlacingPattern> factors_;
  std::optional<Int> bound_;
};

/// Validates shape, end-factor form, junction agreement and (when a bound is
/// given) the level of every factor. Throws BoundaryMismatchError or
/// LevelExceededError with the offending 1-based position.
[[nodiscard]] ChainElement glue(std::vector<InterlacingPattern> factors,
                                std::optional<Int> bound = std::nullopt);

/// Factorwise sum; bounds add when both sides carry one.
[[nodiscard]] ChainElement add(const ChainElement& x, const ChainElement& y);

/// Factorwise difference, or nullopt when any factor difference is invalid
/// or the bound difference drops below a factor level.
[[nodiscard]] std::optional<ChainElement> try_subtract(const ChainElement& x,
                                                       const ChainElement& y);

/// Residue tuple indexing a level-1 chain generator: a+b-1 entries mod m,
/// both end entries in {0, m-1}, consecutive entries dropping by 0 or 1
/// (mod m) across the first a-1 steps and rising by 0 or 1 across the rest.
class GeneratorTuple {
 public:
  GeneratorTuple(int m, int a, int b, std::vector<int> entries);

  [[nodiscard]] int rank() const { return m_; }
  [[nodiscard]] int arm_a() const { return a_; }
  [[nodiscard]] int arm_b() const { return b_; }
  [[nodiscard]] const std::vector<int>& entries() const { return entries_; }
  [[nodiscard]] bool is_zero() const;

  friend auto operator<=>(const GeneratorTuple&, const GeneratorTuple&) = default;

 private:
  int m_;
  int a_;
  int b_;
  std::vector<int> entries_;
};

/// "2,1,2".
[[nodiscard]] std::string to_string(const GeneratorTuple& t);
[[nodiscard]] GeneratorTuple parse_tuple(int m, int a, int b, const std::string& text);

/// Whether the nonzero entries form one contiguous block (and exist at all).
[[nodiscard]] bool has_unbroken_support(const GeneratorTuple& t);

/// All residue tuples for the shape, lexicographically sorted. Throws
/// SizeGuardError when more than max_objects tuples would be produced.
[[nodiscard]] std::vector<GeneratorTuple> enumerate_X(int m, int a, int b,
                                                      Int max_objects = 1000000);

/// The subset of enumerate_X with nonzero unbroken support.
[[nodiscard]] std::vector<GeneratorTuple> enumerate_Y(int m, int a, int b,
                                                      Int max_objects = 1000000);

/// Leg weights of the tuple's chain: 0/1 indicators read off the residue
/// steps; level 1 when leveled.
[[nodiscard]] WeightData weights_of_tuple(const GeneratorTuple& t, bool leveled = true);

/// The chain element the tuple indexes: factor k is the generator pattern
/// labelled by the residue pair at step k. Leveled chains carry bound 1.
[[nodiscard]] ChainElement chain_of_tuple(const GeneratorTuple& t, bool leveled = true);

/// The generator labels of the tuple's factors, in slot order.
[[nodiscard]] std::vector<PieriGenerator> labels_of_tuple(const GeneratorTuple& t);

/// A single exchange of tails across a shared cut entry:
/// u + v = u' + v' as chain elements.
struct SwapRelation {
  GeneratorTuple u;
  GeneratorTuple v;
  GeneratorTuple u_swapped;
  GeneratorTuple v_swapped;
  int cut;  // 1-based entry position shared by u and v

  friend auto operator<=>(const SwapRelation&, const SwapRelation&) = default;
};

[[nodiscard]] std::string to_string(const SwapRelation& rel);

/// All nontrivial swap relations among the tuples of the shape: the leveled
/// set is enumerate_X, the unleveled set enumerate_Y (swaps must stay inside
/// the set). Relations are deduplicated up to reordering either side and
/// reported with the smallest witnessing cut.
[[nodiscard]] std::vector<SwapRelation> swap_relations(int m, int a, int b, bool leveled,
                                                       Int max_objects = 1000000);

/// Thrown by zero_split when no internal zero separates nonzero entries.
struct NoInternalZeroError : std::invalid_argument {
  NoInternalZeroError() : std::invalid_argument("tuple has no internal zero separating support") {}
};

/// Splits a tuple at its first internal zero run separating nonzero entries
/// into two zero-padded halves; their chain sum equals the original plus the
/// zero chain.
[[nodiscard]] std::pair<GeneratorTuple, GeneratorTuple> zero_split(const GeneratorTuple& t);

/// Tuple of the extremal generator indexed by an m-subset of {1..a} on the
/// normal side: unit drops at the chosen positions, dual side identically 0.
[[nodiscard]] GeneratorTuple weyl_tuple_I(int m, int a, int b, const std::vector<int>& I);

/// Mirror image: an m-subset of {1..b} on the dual side.
[[nodiscard]] GeneratorTuple weyl_tuple_J(int m, int a, int b, const std::vector<int>& J);

/// Crossing generator for a pair (i, j) in {1..a} x {1..b}: one drop on the
/// normal side, one rise on the dual side, support in between.
[[nodiscard]] GeneratorTuple weyl_tuple_pair(int m, int a, int b, int i, int j);

}  // namespace pierichain
