#include "pierichain/chains.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace pierichain {

std::string to_string(const WeightData& w) {
  std::ostringstream out;
  out << "r=";
  for (std::size_t i = 0; i < w.r.size(); ++i) out << (i ? "," : "") << w.r[i];
  out << ";s=";
  for (std::size_t i = 0; i < w.s.size(); ++i) out << (i ? "," : "") << w.s[i];
  if (w.level) out << ";K=" << *w.level;
  return out.str();
}

ChainElement::ChainElement(int m, int a, int b, std::vector<InterlacingPattern> factors,
                           std::optional<Int> bound)
    : m_(m), a_(a), b_(b), factors_(std::move(factors)), bound_(bound) {}

FactorKind ChainElement::kind_of(int position) const {
  if (position < 1 || position > a_ + b_ - 2)
    throw std::invalid_argument("kind_of: factor position out of range");
  if (position == 1) return FactorKind::end_normal;
  if (position == a_ + b_ - 2) return FactorKind::end_dual;
  return position <= a_ - 1 ? FactorKind::middle_normal : FactorKind::middle_dual;
}

WeightData ChainElement::weight_data() const {
  WeightData out;
  const auto& first = factors_.front();
  const auto& last = factors_.back();
  // End factors consume two legs each: the outer leg is the spread of the
  // constant long row, the inner leg the row-sum difference.
  out.r.push_back(checked_sub(first.long_row().front(), first.long_row().back()));
  out.r.push_back(middle_degree(first));
  for (int pos = 2; pos <= a_ - 1; ++pos)
    out.r.push_back(middle_degree(factors_[static_cast<std::size_t>(pos - 1)]));
  for (int pos = a_; pos <= a_ + b_ - 3; ++pos)
    out.s.push_back(middle_degree(factors_[static_cast<std::size_t>(pos - 1)]));
  out.s.push_back(middle_degree(last));
  out.s.push_back(checked_sub(last.long_row().front(), last.long_row().back()));
  out.level = bound_;
  return out;
}

ChainElement glue(std::vector<InterlacingPattern> factors, std::optional<Int> bound) {
  if (factors.size() < 2)
    throw std::invalid_argument("glue: a chain needs at least two factors");
  const int m = factors.front().rank();
  for (const auto& f : factors)
    if (f.rank() != m) throw std::invalid_argument("glue: factor rank mismatch");
  std::size_t normal_count = 0;
  while (normal_count < factors.size() &&
         factors[normal_count].orientation() == Orientation::normal)
    ++normal_count;
  for (std::size_t i = normal_count; i < factors.size(); ++i)
    if (factors[i].orientation() != Orientation::dual)
      throw std::invalid_argument("glue: normal factors must precede dual factors");
  if (normal_count == 0 || normal_count == factors.size())
    throw std::invalid_argument("glue: chain needs both a normal and a dual arm");
  const int a = static_cast<int>(normal_count) + 1;
  const int b = static_cast<int>(factors.size() - normal_count) + 1;
  if (!fits_kind(factors.front(), FactorKind::end_normal))
    throw std::invalid_argument("glue: first factor lacks the end shape");
  if (!fits_kind(factors.back(), FactorKind::end_dual))
    throw std::invalid_argument("glue: last factor lacks the end shape");
  for (std::size_t j = 0; j + 1 < factors.size(); ++j) {
    if (boundary_1(factors[j]) != dual(boundary_2(factors[j + 1])))
      throw BoundaryMismatchError(static_cast<int>(j + 1));
  }
  if (bound) {
    if (*bound < 0) throw std::invalid_argument("glue: negative level bound");
    for (std::size_t i = 0; i < factors.size(); ++i)
      if (level(factors[i]) > *bound) throw LevelExceededError(static_cast<int>(i + 1));
  }
  return ChainElement(m, a, b, std::move(factors), bound);
}

ChainElement add(const ChainElement& x, const ChainElement& y) {
  if (x.rank() != y.rank() || x.arm_a() != y.arm_a() || x.arm_b() != y.arm_b())
    throw std::invalid_argument("add: chain shape mismatch");
  if (x.bound().has_value() != y.bound().has_value())
    throw std::invalid_argument("add: cannot mix leveled and unleveled chains");
  std::vector<InterlacingPattern> factors;
  factors.reserve(x.factors().size());
  for (std::size_t i = 0; i < x.factors().size(); ++i)
    factors.push_back(add(x.factors()[i], y.factors()[i]));
  std::optional<Int> bound;
  if (x.bound()) bound = checked_add(*x.bound(), *y.bound());
  return ChainElement(x.rank(), x.arm_a(), x.arm_b(), std::move(factors), bound);
}

std::optional<ChainElement> try_subtract(const ChainElement& x, const ChainElement& y) {
  if (x.rank() != y.rank() || x.arm_a() != y.arm_a() || x.arm_b() != y.arm_b())
    return std::nullopt;
  if (x.bound().has_value() != y.bound().has_value()) return std::nullopt;
  std::optional<Int> bound;
  if (x.bound()) {
    bound = checked_sub(*x.bound(), *y.bound());
    if (*bound < 0) return std::nullopt;
  }
  std::vector<InterlacingPattern> factors;
  factors.reserve(x.factors().size());
  for (std::size_t i = 0; i < x.factors().size(); ++i) {
    auto diff = try_subtract(x.factors()[i], y.factors()[i]);
    if (!diff) return std::nullopt;
    if (bound && level(*diff) > *bound) return std::nullopt;
    factors.push_back(std::move(*diff));
  }
  return ChainElement(x.rank(), x.arm_a(), x.arm_b(), std::move(factors), bound);
}

GeneratorTuple::GeneratorTuple(int m, int a, int b, std::vector<int> entries)
    : m_(m), a_(a), b_(b), entries_(std::move(entries)) {
  if (m_ < 2) throw std::invalid_argument("GeneratorTuple: rank must be at least 2");
  if (a_ < 2 || b_ < 2) throw std::invalid_argument("GeneratorTuple: both arms need length >= 2");
  if (entries_.size() != static_cast<std::size_t>(a_ + b_ - 1))
    throw std::invalid_argument("GeneratorTuple: expected a+b-1 entries");
  for (int e : entries_)
    if (e < 0 || e >= m_) throw std::invalid_argument("GeneratorTuple: entry out of range");
  if (entries_.front() != 0 && entries_.front() != m_ - 1)
    throw std::invalid_argument("GeneratorTuple: first entry must be 0 or m-1");
  if (entries_.back() != 0 && entries_.back() != m_ - 1)
    throw std::invalid_argument("GeneratorTuple: last entry must be 0 or m-1");
  for (int k = 1; k <= a_ + b_ - 2; ++k) {
    const int x = entries_[static_cast<std::size_t>(k - 1)];
    const int y = entries_[static_cast<std::size_t>(k)];
    const int diff = k <= a_ - 1 ? (x - y + m_) % m_ : (y - x + m_) % m_;
    if (diff != 0 && diff != 1)
      throw std::invalid_argument("GeneratorTuple: step " + std::to_string(k) +
                                  " must move by 0 or 1");
  }
}

bool GeneratorTuple::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e == 0; });
}

std::string to_string(const GeneratorTuple& t) {
  std::ostringstream out;
  for (std::size_t i = 0; i < t.entries().size(); ++i) out << (i ? "," : "") << t.entries()[i];
  return out.str();
}

GeneratorTuple parse_tuple(int m, int a, int b, const std::string& text) {
  std::vector<int> entries;
  std::istringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(piece, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_tuple: not an integer: '" + piece + "'");
    }
    if (used != piece.size())
      throw std::invalid_argument("parse_tuple: trailing characters in '" + piece + "'");
    entries.push_back(value);
  }
  return GeneratorTuple(m, a, b, std::move(entries));
}

bool has_unbroken_support(const GeneratorTuple& t) {
  const auto& e = t.entries();
  auto first = std::find_if(e.begin(), e.end(), [](int x) { return x != 0; });
  if (first == e.end()) return false;
  auto last = std::find_if(e.rbegin(), e.rend(), [](int x) { return x != 0; }).base();
  return std::all_of(first, last, [](int x) { return x != 0; });
}

namespace {

void extend_tuple(int m, int a, int b, std::vector<int>& entries, Int max_objects,
                  std::vector<GeneratorTuple>& out) {
  const int length = a + b - 1;
  if (entries.size() == static_cast<std::size_t>(length)) {
    if (entries.back() == 0 || entries.back() == m - 1) {
      if (static_cast<Int>(out.size()) >= max_objects)
        throw SizeGuardError("enumerate_X: more than " + std::to_string(max_objects) +
                             " tuples; raise the object guard to proceed");
      out.emplace_back(m, a, b, entries);
    }
    return;
  }
  const int k = static_cast<int>(entries.size());  // step index, 1-based
  const int cur = entries.back();
  const int held = cur;
  const int moved = k <= a - 1 ? (cur + m - 1) % m : (cur + 1) % m;
  for (int next : {held, moved}) {
    entries.push_back(next);
    extend_tuple(m, a, b, entries, max_objects, out);
    entries.pop_back();
  }
}

}  // namespace

std::vector<GeneratorTuple> enumerate_X(int m, int a, int b, Int max_objects) {
  if (max_objects <= 0) throw std::invalid_argument("enumerate_X: object guard must be positive");
  if (m < 2 || a < 2 || b < 2) throw std::invalid_argument("enumerate_X: invalid shape");
  std::vector<GeneratorTuple> out;
  std::vector<int> entries;
  for (int start : {0, m - 1}) {
    entries.assign(1, start);
    extend_tuple(m, a, b, entries, max_objects, out);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<GeneratorTuple> enumerate_Y(int m, int a, int b, Int max_objects) {
  auto all = enumerate_X(m, a, b, max_objects);
  std::erase_if(all, [](const GeneratorTuple& t) { return !has_unbroken_support(t); });
  return all;
}

WeightData weights_of_tuple(const GeneratorTuple& t, bool leveled) {
  const int m = t.rank();
  const int a = t.arm_a();
  const int b = t.arm_b();
  const auto& e = t.entries();
  WeightData out;
  out.r.push_back(e.front() == m - 1 ? 1 : 0);
  for (int k = 1; k <= a - 1; ++k) {
    const int diff = (e[static_cast<std::size_t>(k - 1)] - e[static_cast<std::size_t>(k)] + m) % m;
    out.r.push_back(diff == 1 ? 1 : 0);
  }
  for (int j = 1; j <= b - 1; ++j) {
    const int k = a + j - 1;
    const int diff = (e[static_cast<std::size_t>(k)] - e[static_cast<std::size_t>(k - 1)] + m) % m;
    out.s.push_back(diff == 1 ? 1 : 0);
  }
  out.s.push_back(e.back() == m - 1 ? 1 : 0);
  if (leveled) out.level = 1;
  return out;
}

std::vector<PieriGenerator> labels_of_tuple(const GeneratorTuple& t) {
  const int m = t.rank();
  const int a = t.arm_a();
  const int b = t.arm_b();
  const auto& e = t.entries();
  std::vector<PieriGenerator> out;
  out.reserve(e.size() - 1);
  for (int k = 1; k <= a + b - 2; ++k) {
    const int x = e[static_cast<std::size_t>(k - 1)];
    const int y = e[static_cast<std::size_t>(k)];
    if (k <= a - 1) {
      // Normal slot: the long row class is the left residue, lifted to m on wrap.
      if (((x - y + m) % m) == 0)
        out.push_back(x == 0 ? PieriGenerator::identity(m, Orientation::normal)
                             : PieriGenerator(m, x, x, Orientation::normal));
      else
        out.push_back(PieriGenerator(m, x == 0 ? m : x, y, Orientation::normal));
    } else {
      // Dual slot: the long row class is the right residue, lifted to m on wrap.
      if (((y - x + m) % m) == 0)
        out.push_back(x == 0 ? PieriGenerator::identity(m, Orientation::dual)
                             : PieriGenerator(m, x, x, Orientation::dual));
      else
        out.push_back(PieriGenerator(m, y == 0 ? m : y, x, Orientation::dual));
    }
  }
  return out;
}

ChainElement chain_of_tuple(const GeneratorTuple& t, bool leveled) {
  std::vector<InterlacingPattern> factors;
  for (const auto& label : labels_of_tuple(t)) factors.push_back(generator_pattern(label));
  return glue(std::move(factors), leveled ? std::optional<Int>(1) : std::nullopt);
}

std::string to_string(const SwapRelation& rel) {
  return "((" + to_string(rel.u) + "),(" + to_string(rel.v) + "))=((" + to_string(rel.u_swapped) +
         "),(" + to_string(rel.v_swapped) + "))";
}

std::vector<SwapRelation> swap_relations(int m, int a, int b, bool leveled, Int max_objects) {
  const auto gens = leveled ? enumerate_X(m, a, b, max_objects) : enumerate_Y(m, a, b, max_objects);
  std::set<GeneratorTuple> member(gens.begin(), gens.end());
  using Pair = std::pair<GeneratorTuple, GeneratorTuple>;
  std::map<std::pair<Pair, Pair>, SwapRelation> found;
  const int length = a + b - 1;
  auto splice = [&](const GeneratorTuple& head, const GeneratorTuple& tail, int cut) {
    std::vector<int> entries(head.entries().begin(), head.entries().begin() + cut);
    entries.insert(entries.end(), tail.entries().begin() + cut, tail.entries().end());
    return GeneratorTuple(m, a, b, std::move(entries));
  };
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const auto& u = gens[i];
      const auto& v = gens[j];
      for (int cut = 1; cut <= length - 1; ++cut) {
        if (u.entries()[static_cast<std::size_t>(cut - 1)] !=
            v.entries()[static_cast<std::size_t>(cut - 1)])
          continue;
        auto u_swapped = splice(u, v, cut);
        auto v_swapped = splice(v, u, cut);
        Pair lhs = std::minmax(u, v);
        Pair rhs = std::minmax(u_swapped, v_swapped);
        if (lhs == rhs) continue;  // trivial exchange
        if (!leveled && (!member.count(u_swapped) || !member.count(v_swapped)))
          continue;  // swap leaves the unbroken-support set
        if (rhs < lhs) std::swap(lhs, rhs);
        auto key = std::make_pair(lhs, rhs);
        SwapRelation rel{lhs.first, lhs.second, rhs.first, rhs.second, cut};
        auto [it, inserted] = found.emplace(std::move(key), rel);
        if (!inserted && cut < it->second.cut) it->second = rel;
        if (static_cast<Int>(found.size()) > max_objects)
          throw SizeGuardError("swap_relations: more than " + std::to_string(max_objects) +
                               " relations; raise the object guard to proceed");
      }
    }
  }
  std::vector<SwapRelation> out;
  out.reserve(found.size());
  for (auto& [key, rel] : found) out.push_back(std::move(rel));
  return out;
}

std::pair<GeneratorTuple, GeneratorTuple> zero_split(const GeneratorTuple& t) {
  const auto& e = t.entries();
  const int n = static_cast<int>(e.size());
  int split = -1;
  for (int z = 0; z < n && split < 0; ++z) {
    if (e[static_cast<std::size_t>(z)] != 0) continue;
    const bool before = std::any_of(e.begin(), e.begin() + z, [](int x) { return x != 0; });
    const bool after = std::any_of(e.begin() + z + 1, e.end(), [](int x) { return x != 0; });
    if (before && after) split = z;
  }
  if (split < 0) throw NoInternalZeroError();
  std::vector<int> left(e.begin(), e.begin() + split);
  left.resize(e.size(), 0);
  std::vector<int> right(static_cast<std::size_t>(split + 1), 0);
  right.insert(right.end(), e.begin() + split + 1, e.end());
  return {GeneratorTuple(t.rank(), t.arm_a(), t.arm_b(), std::move(left)),
          GeneratorTuple(t.rank(), t.arm_a(), t.arm_b(), std::move(right))};
}

namespace {

std::vector<int> checked_index_set(const std::vector<int>& raw, int limit, int m, const char* what) {
  std::vector<int> sorted = raw;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument(std::string(what) + ": repeated index");
  if (static_cast<int>(sorted.size()) != m)
    throw std::invalid_argument(std::string(what) + ": need exactly m indices");
  if (!sorted.empty() && (sorted.front() < 1 || sorted.back() > limit))
    throw std::invalid_argument(std::string(what) + ": index out of range");
  return sorted;
}

}  // namespace

GeneratorTuple weyl_tuple_I(int m, int a, int b, const std::vector<int>& I) {
  const auto idx = checked_index_set(I, a, m, "weyl_tuple_I");
  std::set<int> chosen(idx.begin(), idx.end());
  std::vector<int> e;
  e.reserve(static_cast<std::size_t>(a + b - 1));
  e.push_back(chosen.count(1) ? m - 1 : 0);
  for (int k = 2; k <= a; ++k) e.push_back((e.back() - (chosen.count(k) ? 1 : 0) + m) % m);
  for (int k = a + 1; k <= a + b - 1; ++k) e.push_back(e.back());
  return GeneratorTuple(m, a, b, std::move(e));
}

GeneratorTuple weyl_tuple_J(int m, int a, int b, const std::vector<int>& J) {
  const auto idx = checked_index_set(J, b, m, "weyl_tuple_J");
  std::set<int> chosen(idx.begin(), idx.end());
  std::vector<int> e(static_cast<std::size_t>(a), 0);
  for (int k = a + 1; k <= a + b - 1; ++k)
    e.push_back((e.back() + (chosen.count(k - a) ? 1 : 0)) % m);
  return GeneratorTuple(m, a, b, std::move(e));
}

GeneratorTuple weyl_tuple_pair(int m, int a, int b, int i, int j) {
  if (i < 1 || i > a) throw std::invalid_argument("weyl_tuple_pair: i out of range");
  if (j < 1 || j > b) throw std::invalid_argument("weyl_tuple_pair: j out of range");
  std::vector<int> e;
  e.reserve(static_cast<std::size_t>(a + b - 1));
  e.push_back(i == 1 ? m - 1 : 0);
  for (int k = 2; k <= a; ++k) e.push_back((e.back() - (k == i ? 1 : 0) + m) % m);
  for (int k = a + 1; k <= a + b - 1; ++k) e.push_back((e.back() + (k - a == j ? 1 : 0)) % m);
  return GeneratorTuple(m, a, b, std::move(e));
}

}  // namespace pierichain
