#include "pierichain/weights.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pierichain {

Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer overflow in addition");
  return out;
}

Int checked_sub(Int a, Int b) {
  Int out;
  if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("integer overflow in subtraction");
  return out;
}

Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer overflow in multiplication");
  return out;
}

namespace {

void validate_rows(int m, const std::vector<Int>& e, std::size_t expected, const char* what) {
  if (m < 2) throw std::invalid_argument(std::string(what) + ": rank must be at least 2");
  if (e.size() != expected)
    throw std::invalid_argument(std::string(what) + ": wrong number of entries for rank " +
                                std::to_string(m));
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0) throw std::invalid_argument(std::string(what) + ": negative entry");
    if (i + 1 < e.size() && e[i] < e[i + 1])
      throw std::invalid_argument(std::string(what) + ": entries must be weakly decreasing");
  }
}

std::string row_to_string(const std::vector<Int>& e) {
  if (std::all_of(e.begin(), e.end(), [](Int x) { return x == 0; })) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out << ',';
    out << e[i];
  }
  return out.str();
}

}  // namespace

SlWeight::SlWeight(int m, std::vector<Int> entries) : m_(m), entries_(std::move(entries)) {
  validate_rows(m_, entries_, static_cast<std::size_t>(m_ - 1), "SlWeight");
}

SlWeight SlWeight::zero(int m) { return SlWeight(m, std::vector<Int>(m - 1, 0)); }

Int SlWeight::sum() const {
  Int total = 0;
  for (Int e : entries_) total = checked_add(total, e);
  return total;
}

bool SlWeight::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](Int e) { return e == 0; });
}

GlWeight::GlWeight(int m, std::vector<Int> entries) : m_(m), entries_(std::move(entries)) {
  validate_rows(m_, entries_, static_cast<std::size_t>(m_), "GlWeight");
}

GlWeight GlWeight::zero(int m) { return GlWeight(m, std::vector<Int>(m, 0)); }

Int GlWeight::sum() const {
  Int total = 0;
  for (Int e : entries_) total = checked_add(total, e);
  return total;
}

SlWeight dual(const SlWeight& w) {
  const int m = w.rank();
  const auto& e = w.entries();
  const Int top = e.front();
  std::vector<Int> out(e.size());
  // dual(w)_i = w_1 - w_{m+1-i}, reading w_m as 0.
  out[0] = top;
  for (int i = 2; i <= m - 1; ++i)
    out[static_cast<std::size_t>(i - 1)] = checked_sub(top, e[static_cast<std::size_t>(m - i)]);
  return SlWeight(m, std::move(out));
}

SlWeight sl_reduce(const GlWeight& w) {
  const auto& e = w.entries();
  const Int last = e.back();
  std::vector<Int> out(e.size() - 1);
  for (std::size_t i = 0; i + 1 < e.size(); ++i) out[i] = checked_sub(e[i], last);
  return SlWeight(w.rank(), std::move(out));
}

GlWeight gl_lift(const SlWeight& w, Int c) {
  if (c < 0) throw std::invalid_argument("gl_lift: shift must be nonnegative");
  std::vector<Int> out;
  out.reserve(w.entries().size() + 1);
  for (Int e : w.entries()) out.push_back(checked_add(e, c));
  out.push_back(c);
  return GlWeight(w.rank(), std::move(out));
}

SlWeight fundamental_weight(int m, int k) {
  if (k < 0 || k > m) throw std::invalid_argument("fundamental_weight: index out of range");
  std::vector<Int> e(static_cast<std::size_t>(m - 1), 0);
  const int ones = (k == m) ? 0 : k;
  for (int i = 0; i < ones; ++i) e[static_cast<std::size_t>(i)] = 1;
  return SlWeight(m, std::move(e));
}

GlWeight gl_fundamental_weight(int m, int k) {
  if (k < 0 || k > m) throw std::invalid_argument("gl_fundamental_weight: index out of range");
  std::vector<Int> e(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < k; ++i) e[static_cast<std::size_t>(i)] = 1;
  return GlWeight(m, std::move(e));
}

SlWeight scale(const SlWeight& w, Int c) {
  if (c < 0) throw std::invalid_argument("scale: multiplier must be nonnegative");
  std::vector<Int> out;
  out.reserve(w.entries().size());
  for (Int e : w.entries()) out.push_back(checked_mul(e, c));
  return SlWeight(w.rank(), std::move(out));
}

SlWeight add(const SlWeight& a, const SlWeight& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("add: rank mismatch");
  std::vector<Int> out;
  out.reserve(a.entries().size());
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    out.push_back(checked_add(a.entries()[i], b.entries()[i]));
  return SlWeight(a.rank(), std::move(out));
}

std::string to_string(const SlWeight& w) { return row_to_string(w.entries()); }

std::string to_string(const GlWeight& w) { return row_to_string(w.entries()); }

SlWeight parse_sl_weight(int m, const std::string& text) {
  if (text == "0") return SlWeight::zero(m);
  std::vector<Int> entries;
  std::istringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    std::size_t used = 0;
    Int value = 0;
    try {
      value = std::stoll(piece, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_sl_weight: not an integer: '" + piece + "'");
    }
    if (used != piece.size())
      throw std::invalid_argument("parse_sl_weight: trailing characters in '" + piece + "'");
    entries.push_back(value);
  }
  return SlWeight(m, std::move(entries));
}

namespace {

void collect_weights(int m, Int bound, std::vector<Int>& prefix, std::vector<SlWeight>& out) {
  if (prefix.size() == static_cast<std::size_t>(m - 1)) {
    out.emplace_back(m, prefix);
    return;
  }
  const Int cap = prefix.empty() ? bound : prefix.back();
  for (Int v = cap; v >= 0; --v) {
    prefix.push_back(v);
    collect_weights(m, bound, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<SlWeight> all_weights_up_to(int m, Int bound) {
  if (bound < 0) throw std::invalid_argument("all_weights_up_to: negative bound");
  std::vector<SlWeight> out;
  std::vector<Int> prefix;
  collect_weights(m, bound, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pierichain
