// Extremal checks on how many sequence terms a product set can hold:
// exhaustive search for the Fibonacci maximum, the sharp construction
// {1, F_3, ..., F_{k+1}}, and the 2|B| + 30 count for Lucas sequences.
#pragma once

#include "prodseq/productset.hpp"
#include "prodseq/sequences.hpp"

#include <algorithm>
#include <cstdint>
#include <future>
#include <memory>
#include <vector>

namespace prodseq {

inline constexpr unsigned kMaxUniverse = 40;
inline constexpr unsigned kMaxSetSize = 6;

struct ExtremalResult {
  unsigned universe_max = 0;
  unsigned set_size = 0;
  std::size_t max_count = 0;
  BaseSet<Natural> witness;
  std::uint64_t sets_examined = 0;
};

namespace detail {

struct PrefixBest {
  std::size_t count = 0;
  std::vector<unsigned> combo;
  std::uint64_t examined = 0;
};

// Lexicographic enumeration of k-subsets of {1..N} whose smallest element is
// `first`; keeps the first maximizer.
inline PrefixBest search_prefix(unsigned universe, unsigned k, unsigned first, const std::vector<char>& is_fib) {
  PrefixBest best;
  std::vector<unsigned> c(k);
  c[0] = first;
  for (unsigned i = 1; i < k; ++i) c[i] = first + i;
  std::vector<std::uint64_t> hits;
  hits.reserve(k * (k + 1) / 2);
  while (true) {
    hits.clear();
    for (unsigned i = 0; i < k; ++i) {
      for (unsigned j = i; j < k; ++j) {
        const std::uint64_t v = std::uint64_t{c[i]} * c[j];
        if (is_fib[v] && std::find(hits.begin(), hits.end(), v) == hits.end()) hits.push_back(v);
      }
    }
    ++best.examined;
    if (best.combo.empty() || hits.size() > best.count) {
      best.count = hits.size();
      best.combo = c;
    }
    // Advance positions 1..k-1 only; position 0 stays at `first`.
    int pos = static_cast<int>(k) - 1;
    while (pos >= 1 && c[pos] == universe - (k - 1 - pos)) --pos;
    if (pos < 1) break;
    ++c[pos];
    for (unsigned i = pos + 1; i < k; ++i) c[i] = c[i - 1] + 1;
  }
  return best;
}

}  // namespace detail

/// Maximum of |Fibonacci n B.B| over all B in {1..N} with |B| = k, with the
/// lexicographically first maximizer. Work may be split across `workers`
/// threads by smallest element; the result does not depend on the split.
inline ExtremalResult max_fib_count(unsigned universe_max, unsigned set_size, unsigned workers = 1) {
  if (set_size < 1 || set_size > universe_max) throw DomainError("max_fib_count: need 1 <= k <= N");
  if (set_size > kMaxSetSize || universe_max > kMaxUniverse) {
    throw BudgetExceeded("max_fib_count: search limited to N <= 40, k <= 6");
  }
  const std::uint64_t top = std::uint64_t{universe_max} * universe_max;
  std::vector<char> is_fib(top + 1, 0);
  for (std::uint64_t a = 1, b = 1; a <= top; b += a, a = b - a) is_fib[a] = 1;

  const unsigned prefixes = universe_max - set_size + 1;
  workers = std::clamp(workers, 1u, prefixes);
  std::vector<std::future<std::vector<detail::PrefixBest>>> jobs;
  for (unsigned w = 0; w < workers; ++w) {
    jobs.push_back(std::async(workers == 1 ? std::launch::deferred : std::launch::async, [=, &is_fib] {
      std::vector<detail::PrefixBest> out;
      for (unsigned first = 1 + w; first <= prefixes; first += workers) {
        out.push_back(detail::search_prefix(universe_max, set_size, first, is_fib));
      }
      return out;
    }));
  }
  std::vector<detail::PrefixBest> by_prefix(prefixes);
  for (unsigned w = 0; w < workers; ++w) {
    auto part = jobs[w].get();
    for (std::size_t j = 0; j < part.size(); ++j) by_prefix[w + j * workers] = std::move(part[j]);
  }
  ExtremalResult result{universe_max, set_size, 0, {}, 0};
  const detail::PrefixBest* best = nullptr;
  for (const auto& b : by_prefix) {
    result.sets_examined += b.examined;
    if (!best || b.count > best->count) best = &b;
  }
  result.max_count = best->count;
  result.witness = BaseSet<Natural>(std::vector<Natural>(best->combo.begin(), best->combo.end()));
  return result;
}

/// {1, F_3, ..., F_{k+1}}: 1 = 1*1 and F_i = 1*F_i give k Fibonacci products.
inline BaseSet<Natural> sharp_example(unsigned k) {
  if (k < 1) throw DomainError("sharp_example: k must be at least 1");
  std::vector<Natural> el{1};
  for (unsigned i = 3; i <= k + 1; ++i) el.push_back(fib(i));
  return BaseSet<Natural>(std::move(el));
}

template <ExactNumber T>
std::size_t fibonacci_count(const BaseSet<T>& base) {
  return sequence_members(build_product_set(base), fibonacci_membership()).size();
}

inline constexpr unsigned kHighIndex = 31;

template <ExactNumber T>
struct LucasCountReport {
  std::size_t count = 0;
  std::size_t bound = 0;  // 2|B| + 30
  bool ok = false;        // count < bound
  std::size_t high_index_count = 0;  // terms of index >= 31
  std::size_t high_index_bound = 0;  // 2|B| - 1
  bool high_index_ok = false;
  std::vector<SequenceMember<T>> members;
};

/// Distinct terms of the sequence inside B.B against 2|B| + 30, and terms of
/// index >= 31 against 2|B| - 1.
template <ExactNumber T>
LucasCountReport<T> lucas_count_check(const BaseSet<T>& base, const SequenceId& seq) {
  const auto table = std::make_shared<const TermIndex>(seq, max_product(base));
  LucasCountReport<T> r;
  r.members = sequence_members(build_product_set(base), term_membership(table));
  r.count = r.members.size();
  r.bound = 2 * base.size() + 30;
  r.ok = r.count < r.bound;
  r.high_index_count = static_cast<std::size_t>(
      std::count_if(r.members.begin(), r.members.end(), [](const auto& m) { return m.index >= kHighIndex; }));
  r.high_index_bound = 2 * base.size() - 1;
  r.high_index_ok = r.high_index_count <= r.high_index_bound;
  return r;
}

}  // namespace prodseq
