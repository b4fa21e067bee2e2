// Brute-force reference implementations used only by the tests. Nothing
// here calls into the library's algorithms.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::map<u64, unsigned> factor(u64 n) {
  std::map<u64, unsigned> out;
  for (u64 d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      ++out[d];
      n /= d;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

inline u64 smooth_part(u64 n, u64 bound) {
  u64 s = 1;
  for (const auto& [p, e] : factor(n)) {
    for (unsigned i = 0; i < e && p <= bound; ++i) s *= p;
  }
  return s;
}

/// Smallest x in [0, prod m) with x = r (mod m) for all pairs.
inline u64 crt(const std::vector<std::pair<u64, u64>>& congruences) {
  u64 total = 1;
  for (const auto& [r, m] : congruences) total *= m;
  for (u64 x = 0; x < total; ++x) {
    bool ok = true;
    for (const auto& [r, m] : congruences) ok = ok && x % m == r;
    if (ok) return x;
  }
  return total;
}

/// F_1..F_count by plain addition.
inline std::vector<u64> fibonacci(unsigned count) {
  std::vector<u64> f{0, 1, 1};
  while (f.size() <= count) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
  return f;
}

/// Leibniz expansion over all permutations.
template <class Int>
Int determinant(const std::vector<std::vector<Int>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Int total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    Int term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Single greedy pass: keep b iff it adds a new a-neighbour.
inline std::vector<std::size_t> greedy_cover(std::size_t a_count, const std::vector<std::vector<std::size_t>>& adj) {
  std::vector<bool> seen(a_count, false);
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < adj.size(); ++b) {
    bool fresh = false;
    for (std::size_t a : adj[b]) {
      if (!seen[a]) fresh = true;
      seen[a] = true;
    }
    if (fresh) out.push_back(b);
  }
  return out;
}

/// A multigraph (self-loops ignored) has a cycle iff edges > vertices - components.
inline bool has_cycle(std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::vector<std::size_t>> adj(vertices);
  std::size_t proper = 0;
  for (const auto& [u, v] : edges) {
    if (u == v) continue;
    ++proper;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<bool> seen(vertices, false);
  std::size_t components = 0;
  for (std::size_t s = 0; s < vertices; ++s) {
    if (seen[s]) continue;
    ++components;
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y : adj[x]) {
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
  }
  return proper > vertices - components;
}

/// Max over all k-subsets of {1..n} of |{Fibonacci numbers} n B.B|, by bitmask.
inline std::size_t max_fib_count(unsigned n, unsigned k) {
  std::set<u64> fibs;
  for (u64 a = 1, b = 1; a <= u64{n} * n; b += a, a = b - a) fibs.insert(a);
  std::size_t best = 0;
  for (u64 mask = 0; mask < (u64{1} << n); ++mask) {
    if (static_cast<unsigned>(__builtin_popcountll(mask)) != k) continue;
    std::vector<u64> el;
    for (unsigned i = 0; i < n; ++i) {
      if (mask >> i & 1) el.push_back(i + 1);
    }
    std::set<u64> hit;
    for (u64 a : el) {
      for (u64 b : el) {
        if (fibs.count(a * b)) hit.insert(a * b);
      }
    }
    best = std::max(best, hit.size());
  }
  return best;
}

}  // namespace oracle
