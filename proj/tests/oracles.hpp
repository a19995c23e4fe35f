#pragma once

// Test-side oracles, deliberately sharing no logic with the library under
// test. Multiplicities come from the alternating Weyl-character sum over the
// weight multiset of the second tensor factor, with weights enumerated by
// triangular interlacing arrays; only plain vectors are used. Everything here
// is exponential and meant for desk-scale inputs only.

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace testoracles {

using Vec = std::vector<long long>;

// Weight vectors (row-sum differences) of all triangular interlacing arrays
// below the given top row, with multiplicity: the weight multiset of the
// polynomial representation labelled by the row.
inline void collect_weights(const Vec& row, Vec& diffs, std::vector<Vec>& out) {
  const std::size_t n = row.size();
  if (n == 1) {
    Vec weight;
    weight.push_back(row[0]);
    for (std::size_t i = diffs.size(); i-- > 0;) weight.push_back(diffs[i]);
    out.push_back(std::move(weight));
    return;
  }
  Vec next(n - 1);
  const long long row_sum = std::accumulate(row.begin(), row.end(), 0LL);
  auto place = [&](auto&& self, std::size_t i, long long partial) -> void {
    if (i == n - 1) {
      diffs.push_back(row_sum - partial);
      collect_weights(next, diffs, out);
      diffs.pop_back();
      return;
    }
    for (long long v = row[i + 1]; v <= row[i]; ++v) {
      next[i] = v;
      self(self, i + 1, partial + v);
    }
  };
  place(place, 0, 0);
}

inline std::vector<Vec> weight_multiset(const Vec& top_row) {
  std::vector<Vec> out;
  Vec diffs;
  collect_weights(top_row, diffs, out);
  return out;
}

// Multiplicities of V(mu) x V(row) as polynomial GL representations:
// for every weight w of V(row), mu + w + rho is either degenerate or sorts
// to a dominant candidate with the sign of the sorting permutation.
inline std::map<Vec, long long> tensor_decompose(const Vec& mu, const Vec& row) {
  const std::size_t m = mu.size();
  if (row.size() != m) throw std::invalid_argument("tensor_decompose: size mismatch");
  std::map<Vec, long long> out;
  for (const Vec& w : weight_multiset(row)) {
    Vec v(m);
    for (std::size_t i = 0; i < m; ++i)
      v[i] = mu[i] + w[i] + static_cast<long long>(m - 1 - i);
    Vec sorted = v;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    bool degenerate = false;
    for (std::size_t i = 0; i + 1 < m; ++i)
      if (sorted[i] == sorted[i + 1]) degenerate = true;
    if (degenerate) continue;
    // Parity of the sorting permutation via inversion count of v.
    int inversions = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (v[i] < v[j]) ++inversions;
    Vec cand(m);
    for (std::size_t i = 0; i < m; ++i)
      cand[i] = sorted[i] - static_cast<long long>(m - 1 - i);
    out[cand] += inversions % 2 == 0 ? 1 : -1;
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

// 1 when the invariant space of V(lambda) x V(r omega_1) x V(eta) is nonzero
// for the special linear group of rank m, else 0. lambda and eta carry m-1
// partition entries.
inline long long klimyk_pieri_dim(int m, const Vec& lambda, long long r, const Vec& eta) {
  const std::size_t n = static_cast<std::size_t>(m);
  Vec mu(lambda);
  mu.push_back(0);
  // Partition of the dual class of eta, then the unique lift whose size
  // matches sum(mu) + r.
  Vec target(n, 0);
  target[0] = eta[0];
  for (std::size_t i = 1; i + 1 < n; ++i) target[i] = eta[0] - eta[n - 1 - i];
  const long long mu_sum = std::accumulate(mu.begin(), mu.end(), 0LL);
  const long long target_sum = std::accumulate(target.begin(), target.end(), 0LL);
  const long long numerator = mu_sum + r - target_sum;
  if (numerator < 0 || numerator % m != 0) return 0;
  for (auto& x : target) x += numerator / m;
  Vec sym(n, 0);
  sym[0] = r;
  const auto product = tensor_decompose(mu, sym);
  const auto it = product.find(target);
  return it == product.end() ? 0 : it->second;
}

// Invariant dimension of the full caterpillar product
// V(r_1 omega_1) x .. x V(r_a omega_1) x V(s_b omega_{m-1}) x .. x V(s_1 omega_{m-1})
// by iterated tensor decomposition, tracking special-linear classes as
// partitions with last entry zero.
inline long long chain_invariant_dim(int m, const Vec& r, const Vec& s) {
  const std::size_t n = static_cast<std::size_t>(m);
  auto reduce = [n](const Vec& w) {
    Vec out(w);
    const long long last = out[n - 1];
    for (auto& x : out) x -= last;
    return out;
  };
  std::map<Vec, long long> classes;
  classes[Vec(n, 0)] = 1;
  auto absorb = [&](const Vec& row) {
    std::map<Vec, long long> next;
    for (const auto& [cls, mult] : classes)
      for (const auto& [cand, coeff] : tensor_decompose(cls, row))
        next[reduce(cand)] += mult * coeff;
    for (auto it = next.begin(); it != next.end();)
      it = it->second == 0 ? next.erase(it) : std::next(it);
    classes = std::move(next);
  };
  for (long long deg : r) {
    Vec row(n, 0);
    row[0] = deg;
    absorb(row);
  }
  for (std::size_t j = s.size(); j-- > 0;) {
    Vec row(n, s[j]);
    row[n - 1] = 0;
    absorb(row);
  }
  const auto it = classes.find(Vec(n, 0));
  return it == classes.end() ? 0 : it->second;
}

// The weight multiset of the dual representation is the negation of the
// original one. Both sides are compared through lift-independent coordinates
// m*w - |w|*(1,..,1).
inline std::vector<Vec> normalized_weights(const Vec& top_row) {
  const long long m = static_cast<long long>(top_row.size());
  std::vector<Vec> out;
  for (const Vec& w : weight_multiset(top_row)) {
    const long long total = std::accumulate(w.begin(), w.end(), 0LL);
    Vec norm(w);
    for (auto& x : norm) x = m * x - total;
    out.push_back(std::move(norm));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace testoracles
