// Product sets B.B = {ab : a, b in B} with factor-pair provenance.
#pragma once

#include "prodseq/arith.hpp"
#include "prodseq/sequences.hpp"

#include <algorithm>
#include <concepts>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace prodseq {

template <class T>
concept ExactNumber = std::same_as<T, Natural> || std::same_as<T, Rational>;

/// Finite set of positive exact numbers, stored sorted.
template <ExactNumber T>
class BaseSet {
 public:
  BaseSet() = default;

  explicit BaseSet(std::vector<T> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end()) {
      throw DomainError("BaseSet: duplicate element");
    }
    if (!elements_.empty() && elements_.front() <= 0) throw DomainError("BaseSet: elements must be positive");
  }

  BaseSet(std::initializer_list<T> elements) : BaseSet(std::vector<T>(elements)) {}

  const std::vector<T>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(const T& v) const { return std::binary_search(elements_.begin(), elements_.end(), v); }

  friend bool operator==(const BaseSet&, const BaseSet&) = default;

 private:
  std::vector<T> elements_;
};

template <ExactNumber T>
struct FactorPair {
  T low;   // low <= high
  T high;

  friend bool operator==(const FactorPair&, const FactorPair&) = default;
};

template <ExactNumber T>
class ProductSet {
 public:
  using Pairs = std::vector<FactorPair<T>>;

  explicit ProductSet(const BaseSet<T>& base) : base_(base) {
    if (base.empty()) throw DomainError("build_product_set: empty base set");
    const auto& el = base.elements();
    for (std::size_t i = 0; i < el.size(); ++i) {
      for (std::size_t j = i; j < el.size(); ++j) {
        products_[el[i] * el[j]].push_back({el[i], el[j]});
      }
    }
    // Pairs for a value arrive in increasing low order already.
  }

  const BaseSet<T>& base() const { return base_; }
  const std::map<T, Pairs>& products() const { return products_; }
  std::size_t size() const { return products_.size(); }

  const Pairs* pairs_of(const T& value) const {
    const auto it = products_.find(value);
    return it == products_.end() ? nullptr : &it->second;
  }

 private:
  BaseSet<T> base_;
  std::map<T, Pairs> products_;
};

template <ExactNumber T>
ProductSet<T> build_product_set(const BaseSet<T>& base) {
  return ProductSet<T>(base);
}

/// Value of v as a positive integer, or nothing if v is not one.
inline std::optional<Natural> as_positive_integer(const Natural& v) {
  if (v <= 0) return std::nullopt;
  return v;
}

inline std::optional<Natural> as_positive_integer(const Rational& v) {
  if (v <= 0 || boost::multiprecision::denominator(v) != 1) return std::nullopt;
  return Natural(boost::multiprecision::numerator(v));
}

using Membership = std::function<std::optional<unsigned>(const Natural&)>;

inline Membership fibonacci_membership() {
  return [](const Natural& v) { return is_fibonacci(v); };
}

/// Membership backed by a precomputed term table; the table must cover every queried value.
inline Membership term_membership(std::shared_ptr<const TermIndex> table) {
  return [table = std::move(table)](const Natural& v) { return table->index_of(v); };
}

template <ExactNumber T>
struct SequenceMember {
  T value;
  unsigned index = 0;
  std::vector<FactorPair<T>> pairs;
};

/// Product-set values recognized by the membership predicate, ascending.
template <ExactNumber T>
std::vector<SequenceMember<T>> sequence_members(const ProductSet<T>& ps, const Membership& membership) {
  std::vector<SequenceMember<T>> out;
  for (const auto& [value, pairs] : ps.products()) {
    const auto as_int = as_positive_integer(value);
    if (!as_int) continue;
    if (const auto idx = membership(*as_int)) out.push_back({value, *idx, pairs});
  }
  return out;
}

/// Largest element of B.B as an integer bound (ceiling for rationals).
template <ExactNumber T>
Natural max_product(const BaseSet<T>& base) {
  const T& top = base.elements().back();
  if constexpr (std::same_as<T, Natural>) {
    return top * top;
  } else {
    const Rational sq = top * top;
    Natural num = boost::multiprecision::numerator(sq);
    Natural den = boost::multiprecision::denominator(sq);
    return (num + den - 1) / den;
  }
}

}  // namespace prodseq
