#include "pierichain/verify.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>

namespace pierichain {

int lr_strip_oracle(const SlWeight& lambda, Int r, const SlWeight& eta) {
  if (lambda.rank() != eta.rank()) throw std::invalid_argument("lr_strip_oracle: rank mismatch");
  if (r < 0) throw std::invalid_argument("lr_strip_oracle: negative middle degree");
  const int m = lambda.rank();
  // mu is the m-row diagram of lambda itself; nu starts from the complement
  // diagram of eta (row i is eta_1 - eta_{m+1-i}, reading eta_m as 0),
  // computed locally rather than through the weight maps.
  std::vector<Int> mu(lambda.entries());
  mu.push_back(0);
  std::vector<Int> nu_base(static_cast<std::size_t>(m), 0);
  {
    const Int width = eta.entries().front();
    for (int i = 1; i <= m - 1; ++i) {
      const int j = m + 1 - i;  // 1-based source row, j = m contributing 0
      nu_base[static_cast<std::size_t>(i - 1)] =
          j <= m - 1 ? checked_sub(width, eta.entries()[static_cast<std::size_t>(j - 1)]) : width;
    }
  }
  Int mu_sum = 0, nu_sum = 0;
  for (Int x : mu) mu_sum = checked_add(mu_sum, x);
  for (Int x : nu_base) nu_sum = checked_add(nu_sum, x);
  const Int numerator = checked_sub(checked_add(mu_sum, r), nu_sum);
  if (numerator < 0 || numerator % m != 0) return 0;
  const Int c = numerator / m;
  std::vector<Int> nu = nu_base;
  for (auto& x : nu) x = checked_add(x, c);
  for (int i = 0; i < m; ++i)
    if (nu[static_cast<std::size_t>(i)] < mu[static_cast<std::size_t>(i)]) return 0;
  for (int i = 0; i + 1 < m; ++i)
    if (nu[static_cast<std::size_t>(i + 1)] > mu[static_cast<std::size_t>(i)]) return 0;
  return 1;
}

Int sl2_fusion_oracle(const std::vector<Int>& weights, Int K) {
  if (K < 0) throw std::invalid_argument("sl2_fusion_oracle: negative level");
  if (weights.size() < 2) throw std::invalid_argument("sl2_fusion_oracle: need at least two legs");
  for (Int w : weights) {
    if (w < 0) throw std::invalid_argument("sl2_fusion_oracle: negative weight");
    if (w > K) return 0;
  }
  auto admissible = [K](Int x, Int w, Int y) {
    if ((x + w + y) % 2 != 0) return false;
    if (y < std::max(x, w) - std::min(x, w) || y > x + w) return false;
    return x + w + y <= 2 * K;
  };
  std::vector<Int> state(static_cast<std::size_t>(K + 1), 0);
  state[static_cast<std::size_t>(weights.front())] = 1;
  for (std::size_t i = 1; i + 1 < weights.size(); ++i) {
    std::vector<Int> next(static_cast<std::size_t>(K + 1), 0);
    for (Int x = 0; x <= K; ++x) {
      const Int count = state[static_cast<std::size_t>(x)];
      if (count == 0) continue;
      for (Int y = 0; y <= K; ++y)
        if (admissible(x, weights[i], y))
          next[static_cast<std::size_t>(y)] =
              checked_add(next[static_cast<std::size_t>(y)], count);
    }
    state = std::move(next);
  }
  return state[static_cast<std::size_t>(weights.back())];
}

namespace {

std::vector<GeneratorTuple> generator_set(int m, int a, int b, bool leveled, Int max_objects) {
  return leveled ? enumerate_X(m, a, b, max_objects) : enumerate_Y(m, a, b, max_objects);
}

ChainElement multiset_sum(const TupleMultiset& tuples, bool leveled) {
  ChainElement sum = chain_of_tuple(tuples.front(), leveled);
  for (std::size_t i = 1; i < tuples.size(); ++i)
    sum = add(sum, chain_of_tuple(tuples[i], leveled));
  return sum;
}

// Single-swap neighbors inside the generator set; sums are preserved by the
// exchange so every neighbor stays in the fiber.
std::vector<TupleMultiset> swap_neighbors(const TupleMultiset& node, bool leveled,
                                          const std::set<GeneratorTuple>& member) {
  std::vector<TupleMultiset> out;
  const int length = static_cast<int>(node.front().entries().size());
  for (std::size_t p = 0; p < node.size(); ++p) {
    for (std::size_t q = p + 1; q < node.size(); ++q) {
      const auto& u = node[p];
      const auto& v = node[q];
      for (int cut = 1; cut <= length - 1; ++cut) {
        if (u.entries()[static_cast<std::size_t>(cut - 1)] !=
            v.entries()[static_cast<std::size_t>(cut - 1)])
          continue;
        std::vector<int> ue(u.entries().begin(), u.entries().begin() + cut);
        ue.insert(ue.end(), v.entries().begin() + cut, v.entries().end());
        std::vector<int> ve(v.entries().begin(), v.entries().begin() + cut);
        ve.insert(ve.end(), u.entries().begin() + cut, u.entries().end());
        GeneratorTuple us(u.rank(), u.arm_a(), u.arm_b(), std::move(ue));
        GeneratorTuple vs(v.rank(), v.arm_a(), v.arm_b(), std::move(ve));
        if (!leveled && (!member.count(us) || !member.count(vs))) continue;
        TupleMultiset next = node;
        next[p] = std::move(us);
        next[q] = std::move(vs);
        std::sort(next.begin(), next.end());
        if (next != node) out.push_back(std::move(next));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<FiberReport> markov_check(int m, int a, int b, bool leveled, int max_degree,
                                      Int max_objects) {
  if (max_degree < 1) throw std::invalid_argument("markov_check: max_degree must be positive");
  const auto gens = generator_set(m, a, b, leveled, max_objects);
  const std::set<GeneratorTuple> member(gens.begin(), gens.end());
  std::map<ChainElement, std::vector<TupleMultiset>> fibers;
  Int produced = 0;
  TupleMultiset stack;
  auto grow = [&](auto&& self, std::size_t from, int remaining) -> void {
    if (!stack.empty()) {
      if (++produced > max_objects)
        throw SizeGuardError("markov_check: multiset count exceeds the object guard");
      fibers[multiset_sum(stack, leveled)].push_back(stack);
    }
    if (remaining == 0) return;
    for (std::size_t i = from; i < gens.size(); ++i) {
      stack.push_back(gens[i]);
      self(self, i, remaining - 1);
      stack.pop_back();
    }
  };
  grow(grow, 0, max_degree);

  std::vector<FiberReport> out;
  for (auto& [key, nodes] : fibers) {
    std::sort(nodes.begin(), nodes.end());
    FiberReport report;
    report.multidegree = key.weight_data();
    report.degree = static_cast<int>(nodes.front().size());
    report.fiber_size = static_cast<Int>(nodes.size());
    if (nodes.size() == 1) {
      out.push_back(std::move(report));
      continue;
    }
    std::map<TupleMultiset, std::size_t> index;
    for (std::size_t i = 0; i < nodes.size(); ++i) index.emplace(nodes[i], i);
    std::vector<int> parent(nodes.size(), -1);
    std::vector<char> seen(nodes.size(), 0);
    std::deque<std::size_t> queue{0};
    seen[0] = 1;
    while (!queue.empty()) {
      const std::size_t cur = queue.front();
      queue.pop_front();
      for (const auto& next : swap_neighbors(nodes[cur], leveled, member)) {
        const auto it = index.find(next);
        if (it == index.end() || seen[it->second]) continue;
        seen[it->second] = 1;
        parent[it->second] = static_cast<int>(cur);
        queue.push_back(it->second);
      }
    }
    const auto unreachable = std::find(seen.begin(), seen.end(), 0);
    if (unreachable != seen.end()) {
      report.connected = false;
      report.disconnecting_pair = {nodes.front(),
                                   nodes[static_cast<std::size_t>(unreachable - seen.begin())]};
    } else {
      report.connected = true;
      std::vector<TupleMultiset> path;
      for (int at = static_cast<int>(nodes.size()) - 1; at != -1; at = parent[at])
        path.push_back(nodes[static_cast<std::size_t>(at)]);
      std::reverse(path.begin(), path.end());
      report.witness_path = std::move(path);
    }
    out.push_back(std::move(report));
  }
  std::stable_sort(out.begin(), out.end(), [](const FiberReport& x, const FiberReport& y) {
    return x.degree < y.degree;
  });
  return out;
}

namespace {

// Per-slot sum of the level-1 generators (unleveled: without the identity).
struct SlotSums {
  std::vector<InterlacingPattern> patterns;
  std::vector<Int> levels;  // leveled only: generator counts per slot
};

SlotSums slot_generator_sums(int m, int a, int b, bool leveled) {
  SlotSums out;
  for (int pos = 1; pos <= a + b - 2; ++pos) {
    FactorKind kind;
    if (pos == 1)
      kind = FactorKind::end_normal;
    else if (pos == a + b - 2)
      kind = FactorKind::end_dual;
    else
      kind = pos <= a - 1 ? FactorKind::middle_normal : FactorKind::middle_dual;
    InterlacingPattern sum = InterlacingPattern::zero(m, orientation_of(kind));
    Int count = 0;
    for (const auto& g : k_generators(m, kind)) {
      if (!leveled && g.is_identity()) continue;
      sum = add(sum, generator_pattern(g));
      ++count;
    }
    out.patterns.push_back(std::move(sum));
    if (leveled) out.levels.push_back(count);
  }
  return out;
}

bool slot_interior(const InterlacingPattern& slot, FactorKind kind, bool leveled,
                   std::optional<Int> total_bound) {
  const auto coeffs = decompose(slot);
  for (const auto& g : k_generators(slot.rank(), kind)) {
    if (g.is_identity()) continue;
    const auto it = coeffs.find(g);
    if (it == coeffs.end() || it->second < 1) return false;
  }
  if (leveled && checked_sub(*total_bound, level(slot)) < 1) return false;
  return true;
}

}  // namespace

GorensteinReport gorenstein_check(int m, int a, int b, bool leveled, int max_degree, Int samples,
                                  std::uint64_t seed, Int max_objects) {
  if (max_degree < 1) throw std::invalid_argument("gorenstein_check: max_degree must be positive");
  if (samples < 0) throw std::invalid_argument("gorenstein_check: negative sample count");
  GorensteinReport report;

  const SlotSums sums = slot_generator_sums(m, a, b, leveled);
  report.condition_holds = true;
  for (std::size_t j = 0; j + 1 < sums.patterns.size(); ++j) {
    JunctionImage image;
    image.position = static_cast<int>(j + 1);
    image.left = boundary_1(sums.patterns[j]);
    image.right = dual(boundary_2(sums.patterns[j + 1]));
    image.matches = image.left == image.right;
    if (leveled) {
      image.left_level = sums.levels[j];
      image.right_level = sums.levels[j + 1];
      image.matches = image.matches && sums.levels[j] == sums.levels[j + 1];
    }
    report.condition_holds = report.condition_holds && image.matches;
    report.junctions.push_back(std::move(image));
  }

  const auto gens = generator_set(m, a, b, leveled, max_objects);
  std::vector<std::pair<int, ChainElement>> interior;  // (degree, element)
  std::set<ChainElement> seen;
  Int produced = 0;
  TupleMultiset stack;
  auto grow = [&](auto&& self, std::size_t from, int remaining) -> void {
    if (!stack.empty()) {
      if (++produced > max_objects)
        throw SizeGuardError("gorenstein_check: multiset count exceeds the object guard");
      ChainElement sum = chain_of_tuple(stack.front(), leveled);
      for (std::size_t i = 1; i < stack.size(); ++i)
        sum = add(sum, chain_of_tuple(stack[i], leveled));
      if (seen.insert(sum).second) {
        bool ok = true;
        for (int pos = 1; ok && pos <= a + b - 2; ++pos)
          ok = slot_interior(sum.factors()[static_cast<std::size_t>(pos - 1)], sum.kind_of(pos),
                             leveled, sum.bound());
        if (ok) interior.emplace_back(static_cast<int>(stack.size()), sum);
      }
    }
    if (remaining == 0) return;
    for (std::size_t i = from; i < gens.size(); ++i) {
      stack.push_back(gens[i]);
      self(self, i, remaining - 1);
      stack.pop_back();
    }
  };
  grow(grow, 0, max_degree);
  std::sort(interior.begin(), interior.end());

  if (!interior.empty()) {
    report.witness_found = true;
    report.witness_degree = interior.front().first;
    report.witness = interior.front().second;
    // Deterministic sample of interior elements for the membership test.
    std::vector<std::size_t> picks;
    if (static_cast<Int>(interior.size()) <= samples) {
      picks.resize(interior.size());
      for (std::size_t i = 0; i < picks.size(); ++i) picks[i] = i;
    } else {
      std::mt19937_64 engine(seed);
      std::set<std::size_t> chosen;
      while (static_cast<Int>(chosen.size()) < samples)
        chosen.insert(static_cast<std::size_t>(engine() % interior.size()));
      picks.assign(chosen.begin(), chosen.end());
    }
    report.interior_sampled = static_cast<Int>(picks.size());
    for (std::size_t idx : picks) {
      if (!try_subtract(interior[idx].second, *report.witness)) {
        report.sampled_interior_ok = false;
        break;
      }
    }
  }
  return report;
}

}  // namespace pierichain
