// Representation graphs G(A, B.B) (two copies of B) and G'(A, B.B) (one
// copy of B, self-loops allowed). Each a in A contributes exactly one edge
// b1 -- b2 for a chosen representation a = b1 * b2.
#pragma once

#include "prodseq/productset.hpp"

#include <numeric>
#include <optional>
#include <ostream>
#include <queue>
#include <span>
#include <string>
#include <vector>

namespace prodseq {

enum class GraphMode { kTwoClass, kOneClass };

template <ExactNumber T>
struct AuxEdge {
  T b1;
  T b2;
  T value;
  std::size_t u = 0;  // vertex ids
  std::size_t v = 0;

  bool is_self_loop() const { return u == v; }
};

template <ExactNumber T>
class AuxGraph {
 public:
  AuxGraph(GraphMode mode, BaseSet<T> base) : mode_(mode), base_(std::move(base)) {}

  GraphMode mode() const { return mode_; }
  const BaseSet<T>& base() const { return base_; }
  const std::vector<AuxEdge<T>>& edges() const { return edges_; }

  std::size_t vertex_count() const {
    return mode_ == GraphMode::kTwoClass ? 2 * base_.size() : base_.size();
  }

  /// Label of a vertex id: the element of B, plus its side in two-class mode.
  std::string vertex_label(std::size_t id) const {
    const std::size_t n = base_.size();
    const std::string value = base_.elements()[id % n].str();
    if (mode_ == GraphMode::kOneClass) return value;
    return (id < n ? "L:" : "R:") + value;
  }

  void add_edge(const FactorPair<T>& pair, const T& value) {
    if (pair.low * pair.high != value) throw DomainError("build_aux_graph: factor pair does not multiply to value");
    const auto& el = base_.elements();
    const auto lo = std::lower_bound(el.begin(), el.end(), pair.low);
    const auto hi = std::lower_bound(el.begin(), el.end(), pair.high);
    if (lo == el.end() || *lo != pair.low || hi == el.end() || *hi != pair.high) {
      throw DomainError("build_aux_graph: factor outside the base set");
    }
    std::size_t u = static_cast<std::size_t>(lo - el.begin());
    std::size_t v = static_cast<std::size_t>(hi - el.begin());
    if (mode_ == GraphMode::kTwoClass) v += base_.size();
    edges_.push_back({pair.low, pair.high, value, u, v});
  }

 private:
  GraphMode mode_;
  BaseSet<T> base_;
  std::vector<AuxEdge<T>> edges_;
};

/// Canonical representation: the pair with smallest b1 (then b2).
template <ExactNumber T>
std::size_t canonical_representation(const std::vector<FactorPair<T>>& pairs) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    if (pairs[i].low < pairs[best].low || (pairs[i].low == pairs[best].low && pairs[i].high < pairs[best].high)) {
      best = i;
    }
  }
  return best;
}

/// Builds the graph with one edge per member. `choice[i]` selects the
/// representation of members[i]; when empty the canonical policy is used.
template <ExactNumber T>
AuxGraph<T> build_aux_graph(const BaseSet<T>& base, std::span<const SequenceMember<T>> members, GraphMode mode,
                            std::span<const std::size_t> choice = {}) {
  if (!choice.empty() && choice.size() != members.size()) {
    throw DomainError("build_aux_graph: one representation choice per value required");
  }
  AuxGraph<T> g(mode, base);
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto& m = members[i];
    if (m.pairs.empty()) throw DomainError("build_aux_graph: value has no factor pair over B");
    const std::size_t pick = choice.empty() ? canonical_representation(m.pairs) : choice[i];
    if (pick >= m.pairs.size()) throw DomainError("build_aux_graph: representation choice out of range");
    g.add_edge(m.pairs[pick], m.value);
  }
  return g;
}

template <ExactNumber T>
AuxGraph<T> build_aux_graph(const BaseSet<T>& base, const std::vector<SequenceMember<T>>& members, GraphMode mode,
                            std::span<const std::size_t> choice = {}) {
  return build_aux_graph(base, std::span<const SequenceMember<T>>(members), mode, choice);
}

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

/// A cycle through at least two distinct non-loop edges, as a vertex-id
/// list (closing edge implied). Parallel edges form a 2-cycle.
template <ExactNumber T>
std::optional<std::vector<std::size_t>> find_cycle(const AuxGraph<T>& g) {
  const std::size_t n = g.vertex_count();
  detail::DisjointSets sets(n);
  std::vector<std::vector<std::size_t>> forest(n);
  for (const auto& e : g.edges()) {
    if (e.is_self_loop()) continue;
    if (sets.unite(e.u, e.v)) {
      forest[e.u].push_back(e.v);
      forest[e.v].push_back(e.u);
      continue;
    }
    // e closes a cycle with the forest path v -> u.
    std::vector<std::size_t> prev(n, n);
    std::queue<std::size_t> todo;
    prev[e.v] = e.v;
    todo.push(e.v);
    while (!todo.empty()) {
      const std::size_t x = todo.front();
      todo.pop();
      if (x == e.u) break;
      for (std::size_t y : forest[x]) {
        if (prev[y] == n) {
          prev[y] = x;
          todo.push(y);
        }
      }
    }
    std::vector<std::size_t> cycle;
    for (std::size_t x = e.u;; x = prev[x]) {
      cycle.push_back(x);
      if (x == e.v) break;
    }
    return cycle;
  }
  return std::nullopt;
}

template <ExactNumber T>
std::size_t count_self_loops(const AuxGraph<T>& g) {
  if (g.mode() != GraphMode::kOneClass) throw DomainError("count_self_loops: graph has two color classes");
  return static_cast<std::size_t>(
      std::count_if(g.edges().begin(), g.edges().end(), [](const auto& e) { return e.is_self_loop(); }));
}

struct EdgeBoundReport {
  std::size_t edges = 0;
  std::size_t vertices = 0;
  std::size_t self_loops = 0;
  std::size_t components = 0;  // over non-loop edges, isolated vertices included
  bool acyclic = false;        // self-loops ignored
  /// acyclic implies (edges - self_loops) <= vertices - components <= vertices - 1.
  bool forest_bound_holds = false;
};

template <ExactNumber T>
EdgeBoundReport edge_bound_report(const AuxGraph<T>& g) {
  EdgeBoundReport r;
  r.edges = g.edges().size();
  r.vertices = g.vertex_count();
  detail::DisjointSets sets(r.vertices);
  std::size_t merges = 0;
  for (const auto& e : g.edges()) {
    if (e.is_self_loop()) {
      ++r.self_loops;
    } else if (sets.unite(e.u, e.v)) {
      ++merges;
    }
  }
  r.components = r.vertices - merges;
  r.acyclic = !find_cycle(g).has_value();
  const std::size_t proper = r.edges - r.self_loops;
  r.forest_bound_holds = !r.acyclic || (proper <= r.vertices - r.components && proper + 1 <= r.vertices);
  return r;
}

/// Edge list as "b1,b2,value" lines.
template <ExactNumber T>
void write_edge_csv(std::ostream& os, const AuxGraph<T>& g) {
  for (const auto& e : g.edges()) os << e.b1.str() << ',' << e.b2.str() << ',' << e.value.str() << '\n';
}

/// Number of distinct representation assignments (saturating at `cap` + 1).
template <ExactNumber T>
std::size_t assignment_count(std::span<const SequenceMember<T>> members, std::size_t cap) {
  std::size_t total = 1;
  for (const auto& m : members) {
    total *= m.pairs.size();
    if (total > cap) return cap + 1;
  }
  return total;
}

/// Calls fn(choice) for every representation assignment, in odometer order.
template <ExactNumber T, class Fn>
void for_each_assignment(std::span<const SequenceMember<T>> members, Fn&& fn) {
  std::vector<std::size_t> choice(members.size(), 0);
  while (true) {
    fn(std::span<const std::size_t>(choice));
    std::size_t i = 0;
    for (; i < members.size(); ++i) {
      if (++choice[i] < members[i].pairs.size()) break;
      choice[i] = 0;
    }
    if (i == members.size()) return;
  }
}

}  // namespace prodseq
