#include "pierichain/enumerate.hpp"

#include <algorithm>
#include <map>

namespace pierichain {

namespace {

struct Legs {
  int m;
  int a;
  int b;
  std::vector<Int> r;
  std::vector<Int> s;
  Int cap;  // entry bound for junction weights
  std::optional<Int> K;
};

Legs make_legs(int m, const std::vector<Int>& r, const std::vector<Int>& s, std::optional<Int> K) {
  if (m < 2) throw std::invalid_argument("dimension count: rank must be at least 2");
  if (r.size() < 2 || s.size() < 2)
    throw std::invalid_argument("dimension count: both arms need at least two legs");
  Int total = 0;
  for (Int x : r) {
    if (x < 0) throw std::invalid_argument("dimension count: negative leg weight");
    total = checked_add(total, x);
  }
  for (Int x : s) {
    if (x < 0) throw std::invalid_argument("dimension count: negative leg weight");
    total = checked_add(total, x);
  }
  if (K && *K < 0) throw std::invalid_argument("dimension count: negative level");
  Legs legs{m, static_cast<int>(r.size()), static_cast<int>(s.size()), r, s, total, K};
  if (K && *K < legs.cap) legs.cap = *K;
  return legs;
}

// All eta with a nonzero Pieri space from lambda at middle degree d, entries
// bounded by cap, and (when leveled) witness level at most K.
std::vector<SlWeight> normal_successors(const Legs& legs, const SlWeight& lambda, Int d) {
  std::vector<SlWeight> out;
  if (legs.K && d > *legs.K) return out;
  const int m = legs.m;
  const SlWeight lambda_star = dual(lambda);
  const auto& ls = lambda_star.entries();
  for (Int t = 0;; ++t) {
    const Int top_first = checked_add(ls.front(), t);
    if (legs.K && top_first > *legs.K) break;
    if (t > legs.cap) break;  // eta_{m-1} >= t, so larger lifts cannot stay within cap
    const Int eta_sum = checked_sub(checked_add(lambda_star.sum(), checked_mul(t, m)), d);
    if (eta_sum < 0) continue;
    std::vector<Int> top(ls.begin(), ls.end());
    for (auto& e : top) e = checked_add(e, t);
    top.push_back(t);
    // Recursively place eta entries in [top_{i+1}, min(top_i, cap)] with the
    // exact remaining sum.
    std::vector<Int> eta;
    auto place = [&](auto&& self, std::size_t i, Int remaining) -> void {
      if (i == static_cast<std::size_t>(m - 1)) {
        if (remaining == 0) out.emplace_back(m, eta);
        return;
      }
      const Int lo = top[i + 1];
      const Int hi = std::min(top[i], legs.cap);
      for (Int v = lo; v <= hi; ++v) {
        if (v > remaining) break;
        eta.push_back(v);
        self(self, i + 1, remaining - v);
        eta.pop_back();
      }
    };
    place(place, 0, eta_sum);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Dual-orientation successors: all eta whose lifted bottom row interlaces
// below dual(lambda) with row-sum excess d.
std::vector<SlWeight> dual_successors(const Legs& legs, const SlWeight& lambda, Int d) {
  std::vector<SlWeight> out;
  if (legs.K && d > *legs.K) return out;
  const int m = legs.m;
  const SlWeight lambda_star = dual(lambda);
  const auto& ls = lambda_star.entries();
  const Int bottom_sum = checked_add(lambda_star.sum(), d);
  const Int first_max = legs.K ? std::min(checked_add(ls.front(), d), *legs.K)
                               : checked_add(ls.front(), d);
  std::vector<Int> bottom;
  auto place = [&](auto&& self, std::size_t i, Int remaining) -> void {
    if (i == static_cast<std::size_t>(m)) {
      if (remaining != 0) return;
      const SlWeight eta = sl_reduce(GlWeight(m, bottom));
      for (Int e : eta.entries())
        if (e > legs.cap) return;
      out.push_back(eta);
      return;
    }
    Int lo, hi;
    if (i == 0) {
      lo = ls.front();
      hi = first_max;
    } else if (i < static_cast<std::size_t>(m - 1)) {
      lo = ls[i];
      hi = ls[i - 1];
    } else {
      lo = 0;
      hi = ls[i - 1];
    }
    for (Int v = lo; v <= hi; ++v) {
      if (v > remaining) break;
      bottom.push_back(v);
      self(self, i + 1, remaining - v);
      bottom.pop_back();
    }
  };
  place(place, 0, bottom_sum);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int final_factor_dim(const Legs& legs, const SlWeight& lambda_last) {
  const SlWeight eta_end = scale(fundamental_weight(legs.m, legs.m - 1), legs.s.back());
  const Int d = legs.s[static_cast<std::size_t>(legs.b - 2)];
  if (legs.K) return kpieri_dual_dim(dual(lambda_last), d, eta_end, *legs.K);
  return dual_pieri_dim(dual(lambda_last), d, eta_end);
}

}  // namespace

LabellingCount count_labellings(int m, const std::vector<Int>& r, const std::vector<Int>& s,
                                std::optional<Int> K, bool list_witnesses, Int max_objects) {
  const Legs legs = make_legs(m, r, s, K);
  const int a = legs.a;
  const int b = legs.b;
  // Layered counts over the junction weights lambda_1 .. lambda_{a+b-3};
  // paths kept alongside when witnesses are requested.
  std::map<SlWeight, Int> layer;
  std::map<SlWeight, std::vector<std::vector<SlWeight>>> paths;
  const SlWeight start = scale(fundamental_weight(m, 1), legs.r.front());
  for (const SlWeight& w : normal_successors(legs, start, legs.r[1])) {
    layer.emplace(w, 1);
    if (list_witnesses) paths[w] = {{w}};
  }
  for (int pos = 2; pos <= a + b - 3; ++pos) {
    const Int d = pos <= a - 1 ? legs.r[static_cast<std::size_t>(pos)]
                               : legs.s[static_cast<std::size_t>(pos - a)];
    std::map<SlWeight, Int> next;
    std::map<SlWeight, std::vector<std::vector<SlWeight>>> next_paths;
    for (const auto& [w, count] : layer) {
      const auto succ = pos <= a - 1 ? normal_successors(legs, dual(w), d)
                                     : dual_successors(legs, dual(w), d);
      for (const SlWeight& nw : succ) {
        Int& cell = next[nw];
        cell = checked_add(cell, count);
        if (list_witnesses) {
          auto& bucket = next_paths[nw];
          for (const auto& path : paths[w]) {
            if (static_cast<Int>(bucket.size()) >= max_objects)
              throw SizeGuardError("count_labellings: witness list exceeds the object guard");
            auto extended = path;
            extended.push_back(nw);
            bucket.push_back(std::move(extended));
          }
        }
      }
    }
    layer = std::move(next);
    paths = std::move(next_paths);
  }
  LabellingCount out;
  for (const auto& [w, count] : layer) {
    if (!final_factor_dim(legs, w)) continue;
    out.dimension = checked_add(out.dimension, count);
    if (list_witnesses)
      for (const auto& path : paths[w]) {
        if (static_cast<Int>(out.witnesses.size()) >= max_objects)
          throw SizeGuardError("count_labellings: witness list exceeds the object guard");
        out.witnesses.push_back(path);
      }
  }
  return out;
}

Int dim_invariants(int m, const std::vector<Int>& r, const std::vector<Int>& s) {
  return count_labellings(m, r, s, std::nullopt).dimension;
}

Int dim_conformal_blocks(int m, const std::vector<Int>& r, const std::vector<Int>& s, Int K) {
  return count_labellings(m, r, s, K).dimension;
}

std::vector<ChainElement> labelled_chains(int m, const std::vector<Int>& r,
                                          const std::vector<Int>& s, std::optional<Int> K,
                                          Int max_objects) {
  const auto counted = count_labellings(m, r, s, K, true, max_objects);
  const int a = static_cast<int>(r.size());
  const int b = static_cast<int>(s.size());
  std::vector<ChainElement> out;
  out.reserve(counted.witnesses.size());
  for (const auto& path : counted.witnesses) {
    std::vector<InterlacingPattern> factors;
    SlWeight left = scale(fundamental_weight(m, 1), r.front());
    for (int pos = 1; pos <= a + b - 3; ++pos) {
      const SlWeight& target = path[static_cast<std::size_t>(pos - 1)];
      const SlWeight source = pos == 1 ? left : dual(path[static_cast<std::size_t>(pos - 2)]);
      const Int d = pos <= a - 1 ? r[static_cast<std::size_t>(pos)]
                                 : s[static_cast<std::size_t>(pos - a)];
      auto factor = pos <= a - 1 ? build_pattern(source, d, target)
                                 : build_dual_pattern(source, d, target);
      if (!factor) throw std::logic_error("labelled_chains: witness factor vanished");
      factors.push_back(std::move(*factor));
    }
    const SlWeight eta_end = scale(fundamental_weight(m, m - 1), s.back());
    auto last = build_dual_pattern(dual(path.back()), s[static_cast<std::size_t>(b - 2)], eta_end);
    if (!last) throw std::logic_error("labelled_chains: witness end factor vanished");
    factors.push_back(std::move(*last));
    out.push_back(glue(std::move(factors), K));
  }
  return out;
}

Int hilbert_level(int m, int a, int b, Int K, Int max_objects) {
  if (a < 2 || b < 2) throw std::invalid_argument("hilbert_level: both arms need length >= 2");
  if (K < 0) throw std::invalid_argument("hilbert_level: negative level");
  Int combinations = 1;
  for (int i = 0; i < a + b; ++i) {
    combinations = checked_mul(combinations, checked_add(K, 1));
    if (combinations > max_objects)
      throw SizeGuardError("hilbert_level: multidegree grid exceeds the object guard");
  }
  std::vector<Int> r(static_cast<std::size_t>(a), 0);
  std::vector<Int> s(static_cast<std::size_t>(b), 0);
  Int total = 0;
  auto sweep = [&](auto&& self, std::size_t i) -> void {
    if (i == r.size() + s.size()) {
      total = checked_add(total, dim_conformal_blocks(m, r, s, K));
      return;
    }
    Int& slot = i < r.size() ? r[i] : s[i - r.size()];
    for (Int v = 0; v <= K; ++v) {
      slot = v;
      self(self, i + 1);
    }
    slot = 0;
  };
  sweep(sweep, 0);
  return total;
}

}  // namespace pierichain
