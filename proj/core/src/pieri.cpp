#include "pierichain/pieri.hpp"

#include <algorithm>
#include <sstream>

namespace pierichain {

std::string to_string(Orientation o) { return o == Orientation::normal ? "normal" : "dual"; }

PieriGenerator::PieriGenerator(int m, int upper, int lower, Orientation orientation)
    : m_(m), upper_(upper), lower_(lower), orientation_(orientation) {
  if (m < 2) throw std::invalid_argument("PieriGenerator: rank must be at least 2");
  const bool identity = upper == 0 && lower == 0;
  const bool diagonal = upper >= 1 && upper <= m - 1 && lower == upper;
  const bool step = upper >= 1 && upper <= m && lower == upper - 1;
  if (!identity && !diagonal && !step)
    throw std::invalid_argument("PieriGenerator: invalid label [" + std::to_string(upper) + "," +
                                std::to_string(lower) + "] for rank " + std::to_string(m));
}

PieriGenerator PieriGenerator::identity(int m, Orientation orientation) {
  return PieriGenerator(m, 0, 0, orientation);
}

std::string to_string(const PieriGenerator& g) {
  std::string out = "[" + std::to_string(g.upper()) + "," + std::to_string(g.lower()) + "]";
  if (g.orientation() == Orientation::dual) out += "*";
  return out;
}

namespace {

bool interlaces(const std::vector<Int>& long_row, const std::vector<Int>& short_row) {
  for (std::size_t i = 0; i < short_row.size(); ++i) {
    if (long_row[i] < short_row[i]) return false;
    if (short_row[i] < long_row[i + 1]) return false;
  }
  return !long_row.empty() && long_row.back() >= 0;
}

std::string row_text(const std::vector<Int>& row) {
  std::ostringstream out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out << ',';
    out << row[i];
  }
  return out.str();
}

std::vector<Int> parse_row(const std::string& text) {
  std::vector<Int> out;
  std::istringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    std::size_t used = 0;
    Int value = 0;
    try {
      value = std::stoll(piece, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_pattern: not an integer: '" + piece + "'");
    }
    if (used != piece.size())
      throw std::invalid_argument("parse_pattern: trailing characters in '" + piece + "'");
    out.push_back(value);
  }
  if (out.empty()) throw std::invalid_argument("parse_pattern: empty row");
  return out;
}

Int row_sum(const std::vector<Int>& row) {
  Int total = 0;
  for (Int e : row) total = checked_add(total, e);
  return total;
}

}  // namespace

InterlacingPattern::InterlacingPattern(Orientation orientation, std::vector<Int> long_row,
                                       std::vector<Int> short_row)
    : m_(static_cast<int>(long_row.size())),
      orientation_(orientation),
      long_(std::move(long_row)),
      short_(std::move(short_row)) {
  if (m_ < 2) throw std::invalid_argument("InterlacingPattern: rank must be at least 2");
  if (short_.size() + 1 != long_.size())
    throw std::invalid_argument("InterlacingPattern: rows must have lengths m and m-1");
  for (Int e : long_)
    if (e < 0) throw std::invalid_argument("InterlacingPattern: negative entry");
  for (Int e : short_)
    if (e < 0) throw std::invalid_argument("InterlacingPattern: negative entry");
  if (!interlaces(long_, short_))
    throw std::invalid_argument("InterlacingPattern: rows do not interlace");
}

InterlacingPattern InterlacingPattern::from_rows(std::vector<Int> top, std::vector<Int> bottom) {
  if (top.size() == bottom.size() + 1)
    return InterlacingPattern(Orientation::normal, std::move(top), std::move(bottom));
  if (bottom.size() == top.size() + 1)
    return InterlacingPattern(Orientation::dual, std::move(bottom), std::move(top));
  throw std::invalid_argument("InterlacingPattern: row lengths must differ by one");
}

InterlacingPattern InterlacingPattern::zero(int m, Orientation orientation) {
  return InterlacingPattern(orientation, std::vector<Int>(static_cast<std::size_t>(m), 0),
                            std::vector<Int>(static_cast<std::size_t>(m - 1), 0));
}

const std::vector<Int>& InterlacingPattern::top() const {
  return orientation_ == Orientation::normal ? long_ : short_;
}

const std::vector<Int>& InterlacingPattern::bottom() const {
  return orientation_ == Orientation::normal ? short_ : long_;
}

std::string to_string(const InterlacingPattern& p) {
  return "top=" + row_text(p.top()) + ";bottom=" + row_text(p.bottom());
}

InterlacingPattern parse_pattern(const std::string& text) {
  const auto semi = text.find(';');
  if (semi == std::string::npos || text.rfind("top=", 0) != 0 ||
      text.compare(semi + 1, 7, "bottom=") != 0)
    throw std::invalid_argument("parse_pattern: expected 'top=..;bottom=..'");
  auto top = parse_row(text.substr(4, semi - 4));
  auto bottom = parse_row(text.substr(semi + 8));
  return InterlacingPattern::from_rows(std::move(top), std::move(bottom));
}

InterlacingPattern add(const InterlacingPattern& a, const InterlacingPattern& b) {
  if (a.rank() != b.rank() || a.orientation() != b.orientation())
    throw std::invalid_argument("add: pattern rank or orientation mismatch");
  std::vector<Int> long_row(a.long_row().size());
  std::vector<Int> short_row(a.short_row().size());
  for (std::size_t i = 0; i < long_row.size(); ++i)
    long_row[i] = checked_add(a.long_row()[i], b.long_row()[i]);
  for (std::size_t i = 0; i < short_row.size(); ++i)
    short_row[i] = checked_add(a.short_row()[i], b.short_row()[i]);
  return InterlacingPattern(a.orientation(), std::move(long_row), std::move(short_row));
}

std::optional<InterlacingPattern> try_subtract(const InterlacingPattern& a,
                                               const InterlacingPattern& b) {
  if (a.rank() != b.rank() || a.orientation() != b.orientation()) return std::nullopt;
  std::vector<Int> long_row(a.long_row().size());
  std::vector<Int> short_row(a.short_row().size());
  for (std::size_t i = 0; i < long_row.size(); ++i) {
    long_row[i] = checked_sub(a.long_row()[i], b.long_row()[i]);
    if (long_row[i] < 0) return std::nullopt;
  }
  for (std::size_t i = 0; i < short_row.size(); ++i) {
    short_row[i] = checked_sub(a.short_row()[i], b.short_row()[i]);
    if (short_row[i] < 0) return std::nullopt;
  }
  if (!interlaces(long_row, short_row)) return std::nullopt;
  return InterlacingPattern(a.orientation(), std::move(long_row), std::move(short_row));
}

std::optional<InterlacingPattern> build_pattern(const SlWeight& lambda, Int r,
                                                const SlWeight& eta) {
  if (lambda.rank() != eta.rank()) throw std::invalid_argument("build_pattern: rank mismatch");
  if (r < 0) throw std::invalid_argument("build_pattern: negative middle degree");
  const int m = lambda.rank();
  const SlWeight lambda_star = dual(lambda);
  // Top row sum must exceed the bottom row sum by exactly r, which pins the
  // lift constant: t = (r + sum(eta) - sum(dual(lambda))) / m.
  const Int numerator = checked_sub(checked_add(r, eta.sum()), lambda_star.sum());
  if (numerator < 0 || numerator % m != 0) return std::nullopt;
  const GlWeight top = gl_lift(lambda_star, numerator / m);
  if (!interlaces(top.entries(), eta.entries())) return std::nullopt;
  return InterlacingPattern(Orientation::normal, top.entries(), eta.entries());
}

std::optional<InterlacingPattern> build_dual_pattern(const SlWeight& lambda, Int s,
                                                     const SlWeight& eta) {
  if (lambda.rank() != eta.rank()) throw std::invalid_argument("build_dual_pattern: rank mismatch");
  if (s < 0) throw std::invalid_argument("build_dual_pattern: negative middle degree");
  const int m = lambda.rank();
  const SlWeight lambda_star = dual(lambda);
  // Bottom row sum exceeds the top row sum by s: c = (s + sum(dual(lambda)) - sum(eta)) / m.
  const Int numerator = checked_sub(checked_add(s, lambda_star.sum()), eta.sum());
  if (numerator < 0 || numerator % m != 0) return std::nullopt;
  const GlWeight bottom = gl_lift(eta, numerator / m);
  if (!interlaces(bottom.entries(), lambda_star.entries())) return std::nullopt;
  return InterlacingPattern(Orientation::dual, bottom.entries(), lambda_star.entries());
}

int pieri_dim(const SlWeight& lambda, Int r, const SlWeight& eta) {
  return build_pattern(lambda, r, eta) ? 1 : 0;
}

int dual_pieri_dim(const SlWeight& lambda, Int s, const SlWeight& eta) {
  return build_dual_pattern(lambda, s, eta) ? 1 : 0;
}

SlWeight boundary_1(const InterlacingPattern& p) {
  if (p.orientation() == Orientation::normal)
    return SlWeight(p.rank(), p.bottom());
  return sl_reduce(GlWeight(p.rank(), p.bottom()));
}

SlWeight boundary_2(const InterlacingPattern& p) {
  if (p.orientation() == Orientation::normal)
    return dual(sl_reduce(GlWeight(p.rank(), p.top())));
  return dual(SlWeight(p.rank(), p.top()));
}

Int middle_degree(const InterlacingPattern& p) {
  return checked_sub(row_sum(p.long_row()), row_sum(p.short_row()));
}

InterlacingPattern generator_pattern(const PieriGenerator& g) {
  const int m = g.rank();
  std::vector<Int> long_row(static_cast<std::size_t>(m), 0);
  std::vector<Int> short_row(static_cast<std::size_t>(m - 1), 0);
  for (int i = 0; i < g.upper(); ++i) long_row[static_cast<std::size_t>(i)] = 1;
  for (int i = 0; i < g.lower(); ++i) short_row[static_cast<std::size_t>(i)] = 1;
  return InterlacingPattern(g.orientation(), std::move(long_row), std::move(short_row));
}

std::vector<PieriGenerator> pieri_generators(int m, Orientation orientation) {
  std::vector<PieriGenerator> out;
  out.reserve(static_cast<std::size_t>(2 * m - 1));
  for (int upper = 1; upper <= m; ++upper) {
    out.emplace_back(m, upper, upper - 1, orientation);
    if (upper <= m - 1) out.emplace_back(m, upper, upper, orientation);
  }
  return out;
}

GeneratorMultiset decompose(const InterlacingPattern& p) {
  const int m = p.rank();
  const auto& a = p.long_row();
  const auto& b = p.short_row();
  GeneratorMultiset out;
  auto put = [&](int upper, int lower, Int count) {
    if (count != 0) out.emplace(PieriGenerator(m, upper, lower, p.orientation()), count);
  };
  put(m, m - 1, a[static_cast<std::size_t>(m - 1)]);
  for (int k = 1; k <= m - 1; ++k) {
    put(k, k - 1, checked_sub(a[static_cast<std::size_t>(k - 1)], b[static_cast<std::size_t>(k - 1)]));
    put(k, k, checked_sub(b[static_cast<std::size_t>(k - 1)], a[static_cast<std::size_t>(k)]));
  }
  return out;
}

InterlacingPattern recompose(const GeneratorMultiset& gens, std::optional<int> rank,
                             Orientation orientation) {
  if (gens.empty()) {
    if (!rank) throw std::invalid_argument("recompose: empty multiset needs an explicit rank");
    return InterlacingPattern::zero(*rank, orientation);
  }
  const int m = gens.begin()->first.rank();
  const Orientation o = gens.begin()->first.orientation();
  if (rank && *rank != m) throw std::invalid_argument("recompose: rank disagrees with generators");
  std::vector<Int> long_row(static_cast<std::size_t>(m), 0);
  std::vector<Int> short_row(static_cast<std::size_t>(m - 1), 0);
  for (const auto& [g, count] : gens) {
    if (g.rank() != m || g.orientation() != o)
      throw std::invalid_argument("recompose: mixed rank or orientation");
    if (count < 0) throw std::invalid_argument("recompose: negative multiplicity");
    for (int i = 0; i < g.upper(); ++i)
      long_row[static_cast<std::size_t>(i)] = checked_add(long_row[static_cast<std::size_t>(i)], count);
    for (int i = 0; i < g.lower(); ++i)
      short_row[static_cast<std::size_t>(i)] =
          checked_add(short_row[static_cast<std::size_t>(i)], count);
  }
  return InterlacingPattern(o, std::move(long_row), std::move(short_row));
}

}  // namespace pierichain
