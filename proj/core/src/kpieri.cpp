#include "pierichain/kpieri.hpp"

#include <algorithm>

namespace pierichain {

Int level(const InterlacingPattern& p) { return p.long_row().front(); }

LeveledPattern::LeveledPattern(InterlacingPattern pattern, Int bound)
    : pattern_(std::move(pattern)), bound_(bound) {
  if (bound_ < level(pattern_))
    throw std::invalid_argument("LeveledPattern: bound below the pattern level");
}

int kpieri_dim(const SlWeight& lambda, Int r, const SlWeight& eta, Int K) {
  if (K < 0) throw std::invalid_argument("kpieri_dim: negative level");
  if (r > K) return 0;
  const auto witness = build_pattern(lambda, r, eta);
  if (!witness) return 0;
  return level(*witness) <= K ? 1 : 0;
}

int kpieri_dual_dim(const SlWeight& lambda, Int s, const SlWeight& eta, Int K) {
  if (K < 0) throw std::invalid_argument("kpieri_dual_dim: negative level");
  if (s > K) return 0;
  const auto witness = build_dual_pattern(lambda, s, eta);
  if (!witness) return 0;
  return level(*witness) <= K ? 1 : 0;
}

std::string to_string(FactorKind kind) {
  switch (kind) {
    case FactorKind::end_normal: return "end_normal";
    case FactorKind::middle_normal: return "middle_normal";
    case FactorKind::middle_dual: return "middle_dual";
    case FactorKind::end_dual: return "end_dual";
  }
  throw std::invalid_argument("to_string: unknown factor kind");
}

Orientation orientation_of(FactorKind kind) {
  return (kind == FactorKind::end_normal || kind == FactorKind::middle_normal)
             ? Orientation::normal
             : Orientation::dual;
}

bool fits_kind(const InterlacingPattern& p, FactorKind kind) {
  if (p.orientation() != orientation_of(kind)) return false;
  if (kind == FactorKind::middle_normal || kind == FactorKind::middle_dual) return true;
  const auto& long_row = p.long_row();
  const auto& short_row = p.short_row();
  for (std::size_t i = 0; i + 2 < long_row.size(); ++i)
    if (long_row[i] != long_row[i + 1]) return false;
  for (std::size_t i = 0; i + 2 < short_row.size(); ++i)
    if (short_row[i] != short_row[i + 1]) return false;
  return true;
}

std::vector<PieriGenerator> k_generators(int m, FactorKind kind) {
  const Orientation o = orientation_of(kind);
  std::vector<PieriGenerator> out;
  out.push_back(PieriGenerator::identity(m, o));
  if (kind == FactorKind::middle_normal || kind == FactorKind::middle_dual) {
    for (const auto& g : pieri_generators(m, o)) out.push_back(g);
  } else {
    out.emplace_back(m, m - 1, m - 2, o);
    out.emplace_back(m, m - 1, m - 1, o);
    out.emplace_back(m, m, m - 1, o);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pierichain
