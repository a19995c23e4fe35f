#pragma once

// Dominant weights for SL(m) and GL(m) in partition coordinates, with the
// duality, reduction and lifting maps everything downstream is built from.
//
// An SL(m) weight is stored as m-1 weakly decreasing nonnegative integers
// (coefficients on the partition side, not the fundamental-weight side); a
// GL(m) weight carries m such entries. All arithmetic is exact 64-bit with
// overflow detection; any wrap-around throws instead of truncating.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pierichain {

using Int = std::int64_t;

/// Thrown when an exact integer computation would exceed 64 bits.
struct OverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

/// Thrown when an enumeration would exceed the configured object guard.
struct SizeGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

[[nodiscard]] Int checked_add(Int a, Int b);
[[nodiscard]] Int checked_sub(Int a, Int b);
[[nodiscard]] Int checked_mul(Int a, Int b);

/// Dominant SL(m) weight: m-1 weakly decreasing entries, all >= 0.
class SlWeight {
 public:
  /// Validates rank (m >= 2), length, monotonicity and sign.
  SlWeight(int m, std::vector<Int> entries);

  /// The zero weight of rank m.
  [[nodiscard]] static SlWeight zero(int m);

  [[nodiscard]] int rank() const { return m_; }
  [[nodiscard]] const std::vector<Int>& entries() const { return entries_; }
  [[nodiscard]] Int sum() const;
  [[nodiscard]] bool is_zero() const;

  friend auto operator<=>(const SlWeight&, const SlWeight&) = default;

 private:
  int m_;
  std::vector<Int> entries_;
};

/// Dominant GL(m) weight: m weakly decreasing entries, all >= 0.
class GlWeight {
 public:
  GlWeight(int m, std::vector<Int> entries);

  [[nodiscard]] static GlWeight zero(int m);

  [[nodiscard]] int rank() const { return m_; }
  [[nodiscard]] const std::vector<Int>& entries() const { return entries_; }
  [[nodiscard]] Int sum() const;

  friend auto operator<=>(const GlWeight&, const GlWeight&) = default;

 private:
  int m_;
  std::vector<Int> entries_;
};

/// Highest weight of the dual representation:
/// dual(w)_i = w_1 - w_{m+1-i} with the convention w_m = 0.
/// An involution; maps the k-th fundamental weight to the (m-k)-th.
[[nodiscard]] SlWeight dual(const SlWeight& w);

/// Restriction of a GL(m) weight to SL(m): drops the determinant part,
/// sl_reduce(w)_i = w_i - w_m.
[[nodiscard]] SlWeight sl_reduce(const GlWeight& w);

/// The GL(m) lift of an SL(m) weight with determinant shift c >= 0:
/// entries (w_1 + c, ..., w_{m-1} + c, c). Left inverse of sl_reduce.
[[nodiscard]] GlWeight gl_lift(const SlWeight& w, Int c);

/// k-th fundamental weight as a partition: k ones then zeros. k = 0 and
/// k = m both give the zero weight.
[[nodiscard]] SlWeight fundamental_weight(int m, int k);

/// GL(m) fundamental weight omega_k, 0 <= k <= m (k ones then zeros).
[[nodiscard]] GlWeight gl_fundamental_weight(int m, int k);

/// Multiple of a weight; checked.
[[nodiscard]] SlWeight scale(const SlWeight& w, Int c);

/// Entrywise sum; ranks must agree. Checked.
[[nodiscard]] SlWeight add(const SlWeight& a, const SlWeight& b);

/// Textual form "2,1,0"; the zero weight of any rank prints as "0".
[[nodiscard]] std::string to_string(const SlWeight& w);
[[nodiscard]] std::string to_string(const GlWeight& w);

/// Parses the textual form; "0" is accepted for the zero weight.
[[nodiscard]] SlWeight parse_sl_weight(int m, const std::string& text);

/// All dominant SL(m) weights with entries <= bound, in lexicographic order.
[[nodiscard]] std::vector<SlWeight> all_weights_up_to(int m, Int bound);

}  // namespace pierichain
