// Fresh-neighbour cover sequences in bipartite graphs.
//
// Given a bipartite graph (A, B, E) in which every a has degree <= n and
// every b has degree >= 1, cover_sequence returns b_1, ..., b_k such that
// each V(b_i) contains a vertex outside V(b_1) u ... u V(b_{i-1}), with
// k * n >= |B|.
#pragma once

#include "prodseq/arith.hpp"

#include <algorithm>
#include <span>
#include <vector>

namespace prodseq {

class Bipartite {
 public:
  /// adjacency[b] lists the a-vertices adjacent to b (indices < a_count).
  Bipartite(std::size_t a_count, std::vector<std::vector<std::size_t>> adjacency)
      : a_count_(a_count), adjacency_(std::move(adjacency)) {
    std::vector<std::size_t> degree(a_count_, 0);
    for (auto& nbrs : adjacency_) {
      std::sort(nbrs.begin(), nbrs.end());
      nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
      for (std::size_t a : nbrs) {
        if (a >= a_count_) throw DomainError("Bipartite: a-vertex index out of range");
        ++degree[a];
      }
    }
    degree_bound_ = degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());
  }

  std::size_t a_count() const { return a_count_; }
  std::size_t b_count() const { return adjacency_.size(); }
  const std::vector<std::size_t>& neighbours(std::size_t b) const { return adjacency_[b]; }
  /// Maximum a-degree (the n of the cover bound).
  std::size_t degree_bound() const { return degree_bound_; }

 private:
  std::size_t a_count_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::size_t degree_bound_ = 0;
};

namespace detail {

// Keeps b iff it contributes an a-vertex not seen among earlier b's.
inline std::vector<std::size_t> fresh_pass(const Bipartite& g, std::span<const std::size_t> order) {
  std::vector<char> seen(g.a_count(), 0);
  std::vector<std::size_t> kept;
  for (std::size_t b : order) {
    bool fresh = false;
    for (std::size_t a : g.neighbours(b)) {
      if (!seen[a]) {
        seen[a] = 1;
        fresh = true;
      }
    }
    if (fresh) kept.push_back(b);
  }
  return kept;
}

}  // namespace detail

/// Follows the induction on the degree bound: keep the fresh-contributing
/// vertices K if |K| * n >= |B|, otherwise recurse on B \ K with bound n - 1.
inline std::vector<std::size_t> cover_sequence(const Bipartite& g) {
  for (std::size_t b = 0; b < g.b_count(); ++b) {
    if (g.neighbours(b).empty()) throw DomainError("cover_sequence: b-vertex of degree 0");
  }
  std::vector<std::size_t> active(g.b_count());
  for (std::size_t b = 0; b < active.size(); ++b) active[b] = b;
  std::size_t bound = g.degree_bound();
  while (true) {
    std::vector<std::size_t> kept = detail::fresh_pass(g, active);
    if (bound <= 1 || kept.size() * bound >= active.size()) return kept;
    std::vector<std::size_t> rest;
    std::set_difference(active.begin(), active.end(), kept.begin(), kept.end(), std::back_inserter(rest));
    active = std::move(rest);
    --bound;
  }
}

/// True iff seq is non-empty, repeat-free, and every element has a fresh neighbour.
inline bool verify_cover(const Bipartite& g, std::span<const std::size_t> seq) {
  if (seq.empty()) return false;
  std::vector<char> seen(g.a_count(), 0);
  std::vector<char> used(g.b_count(), 0);
  for (std::size_t b : seq) {
    if (b >= g.b_count() || used[b]) return false;
    used[b] = 1;
    bool fresh = false;
    for (std::size_t a : g.neighbours(b)) fresh = fresh || !seen[a];
    if (!fresh) return false;
    for (std::size_t a : g.neighbours(b)) seen[a] = 1;
  }
  return true;
}

}  // namespace prodseq
