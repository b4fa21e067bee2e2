// Fibonacci numbers, Lucas numbers and general Lucas pairs U_n(P,Q), V_n(P,Q).
// Indexing starts at 1: F_1 = F_2 = 1, V_1 = P.
#pragma once

#include "prodseq/arith.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace prodseq {

struct LucasSpec {
  Integer p;
  Integer q;

  Integer discriminant() const { return p * p - 4 * q; }

  void validate() const {
    if (boost::multiprecision::gcd(p, q) != 1) throw DomainError("LucasSpec: gcd(P, Q) must be 1");
    if (discriminant() == 0) throw DomainError("LucasSpec: P^2 - 4Q must be nonzero");
  }

  friend bool operator==(const LucasSpec&, const LucasSpec&) = default;
};

inline const LucasSpec kFibonacciSpec{1, -1};

enum class SequenceKind { kU, kV };

/// Names one of the sequences U_n(P,Q) or V_n(P,Q).
struct SequenceId {
  LucasSpec spec;
  SequenceKind kind = SequenceKind::kU;

  static SequenceId fibonacci() { return {kFibonacciSpec, SequenceKind::kU}; }
  static SequenceId lucas_numbers() { return {kFibonacciSpec, SequenceKind::kV}; }

  bool is_fibonacci() const { return spec == kFibonacciSpec && kind == SequenceKind::kU; }

  std::string name() const {
    if (is_fibonacci()) return "fib";
    if (spec == kFibonacciSpec) return "lucasV";
    return std::string(kind == SequenceKind::kU ? "lucasU:" : "lucasV:") + spec.p.str() + "," +
           spec.q.str();
  }
};

struct SequenceTerm {
  unsigned index = 0;
  Integer value;
  SequenceId sequence;
};

namespace detail {

inline void require_index(unsigned n, const char* what) {
  if (n == 0) throw DomainError(std::string(what) + ": indices start at 1");
}

/// (U_n, U_{n+1}) style stepping for either sequence kind.
inline Integer lucas_term(const LucasSpec& spec, SequenceKind kind, unsigned n) {
  spec.validate();
  require_index(n, "lucas term");
  Integer prev = kind == SequenceKind::kU ? Integer(0) : Integer(2);
  Integer cur = kind == SequenceKind::kU ? Integer(1) : spec.p;
  for (unsigned k = 1; k < n; ++k) {
    Integer next = spec.p * cur - spec.q * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace detail

inline Integer lucas_u(const LucasSpec& spec, unsigned n) {
  return detail::lucas_term(spec, SequenceKind::kU, n);
}

inline Integer lucas_v(const LucasSpec& spec, unsigned n) {
  return detail::lucas_term(spec, SequenceKind::kV, n);
}

inline Integer term(const SequenceId& seq, unsigned n) { return detail::lucas_term(seq.spec, seq.kind, n); }

/// F_n by fast doubling.
inline Natural fib(unsigned n) {
  detail::require_index(n, "fib");
  Natural a = 0, b = 1;  // F_k, F_{k+1}
  for (int bit = 31; bit >= 0; --bit) {
    Natural c = a * (2 * b - a);
    Natural d = a * a + b * b;
    if ((n >> bit) & 1u) {
      a = d;
      b = c + d;
    } else {
      a = c;
      b = d;
    }
  }
  return a;
}

/// Smallest n with F_n = m, decided by the 5m^2 +- 4 square test.
inline std::optional<unsigned> is_fibonacci(const Natural& m) {
  detail::require_natural(m, "is_fibonacci");
  if (m == 0) return std::nullopt;
  const Natural t = 5 * m * m;
  if (!is_perfect_square(t + 4) && !is_perfect_square(t - 4)) return std::nullopt;
  Natural a = 1, b = 1;
  unsigned n = 1;
  while (a < m) {
    Natural next = a + b;
    a = std::move(b);
    b = std::move(next);
    ++n;
  }
  return n;
}

inline Natural fib_gcd(unsigned m, unsigned n) {
  return boost::multiprecision::gcd(fib(m), fib(n));
}

enum class DivisorPolicy {
  kIgnoreDiscriminant,   // p | U_n, p does not divide any earlier term
  kExcludeDiscriminant,  // additionally p does not divide P^2 - 4Q
};

/// Smallest primitive prime divisor of U_n(spec), if any.
inline std::optional<Natural> primitive_divisor(const LucasSpec& spec, unsigned n,
                                                DivisorPolicy policy = DivisorPolicy::kIgnoreDiscriminant) {
  const Integer un = lucas_u(spec, n);
  if (un == 0) throw DomainError("primitive_divisor: U_n is zero");
  const Natural magnitude = boost::multiprecision::abs(un);
  if (magnitude == 1) return std::nullopt;
  const Integer disc = spec.discriminant();
  for (const auto& [p, e] : factorize(magnitude).factors) {
    if (policy == DivisorPolicy::kExcludeDiscriminant && disc % p == 0) continue;
    const Integer pp = detail::floor_mod(spec.p, p);
    const Integer qq = detail::floor_mod(spec.q, p);
    Integer prev = 0, cur = 1;
    bool earlier = false;
    for (unsigned k = 1; k < n; ++k) {
      if (cur == 0) {
        earlier = true;
        break;
      }
      Integer next = detail::floor_mod(pp * cur - qq * prev, p);
      prev = std::move(cur);
      cur = std::move(next);
    }
    if (!earlier) return p;
  }
  return std::nullopt;
}

inline std::vector<unsigned> square_fibonacci_indices(unsigned limit_index) {
  detail::require_index(limit_index, "square_fibonacci_indices");
  std::vector<unsigned> out;
  Natural a = 1, b = 1;
  for (unsigned n = 1; n <= limit_index; ++n) {
    if (is_perfect_square(a)) out.push_back(n);
    Natural next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return out;
}

/// Positive terms of a sequence up to a value limit, keyed by value with
/// the smallest index. Generation stops once four consecutive terms exceed
/// the limit in absolute value, or at an index cap for degenerate pairs.
class TermIndex {
 public:
  static constexpr unsigned kIndexCap = 4096;

  TermIndex(SequenceId seq, const Natural& limit) : seq_(std::move(seq)), limit_(limit) {
    seq_.spec.validate();
    Integer prev = seq_.kind == SequenceKind::kU ? Integer(0) : Integer(2);
    Integer cur = seq_.kind == SequenceKind::kU ? Integer(1) : seq_.spec.p;
    unsigned above = 0;
    for (unsigned n = 1; n <= kIndexCap && above < 4; ++n) {
      if (cur > 0 && cur <= limit_) by_value_.try_emplace(cur, n);
      above = boost::multiprecision::abs(cur) > limit_ ? above + 1 : 0;
      Integer next = seq_.spec.p * cur - seq_.spec.q * prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
  }

  const SequenceId& sequence() const { return seq_; }
  const Natural& limit() const { return limit_; }

  std::optional<unsigned> index_of(const Integer& value) const {
    if (value > limit_) throw DomainError("TermIndex: value above the generated limit");
    const auto it = by_value_.find(value);
    if (it == by_value_.end()) return std::nullopt;
    return it->second;
  }

  const std::map<Integer, unsigned>& terms() const { return by_value_; }

 private:
  SequenceId seq_;
  Natural limit_;
  std::map<Integer, unsigned> by_value_;
};

}  // namespace prodseq
