// Exact integer arithmetic: primality, factorization, smooth parts, prime
// ranges, integer square roots and CRT.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace prodseq {

using Integer = boost::multiprecision::cpp_int;
/// Non-negative by contract; every public entry point rejects negatives.
using Natural = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A precondition of an operation was violated by the caller.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is valid but exceeds the desk-scale computation budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PrimePower {
  Natural prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  Natural subject;
  std::vector<PrimePower> factors;  // primes strictly increasing

  Natural product() const {
    Natural p = 1;
    for (const auto& f : factors) p *= boost::multiprecision::pow(f.prime, f.exponent);
    return p;
  }
};

namespace detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline constexpr std::uint32_t kTrialLimit = 1'000'000;
inline constexpr std::uint64_t kSieveHiLimit = 100'000'000;

inline void require_natural(const Integer& n, const char* what) {
  if (n < 0) throw DomainError(std::string(what) + ": negative argument");
}

inline bool fits_u64(const Natural& n) {
  return n >= 0 && n <= Natural(std::numeric_limits<u64>::max());
}

/// Primes up to kTrialLimit, sieved once (thread-safe static init).
inline const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (u64 j = u64{i} * i; j <= kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

inline bool is_small_prime(std::uint32_t n) {
  const auto& ps = small_primes();
  return std::binary_search(ps.begin(), ps.end(), n);
}

inline u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128{a} * b % m); }

inline u64 pow_mod(u64 base, u64 e, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return r;
}

// Bases 2..37 are deterministic for n < 3.3e24, which covers all of u64.
inline constexpr std::uint32_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

inline bool miller_rabin_u64(u64 n) {
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kWitnesses) {
    if (a % n == 0) continue;
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline bool miller_rabin(const Natural& n, const Natural& a) {
  Natural d = n - 1;
  unsigned s = 0;
  while (!boost::multiprecision::bit_test(d, 0)) {
    d >>= 1;
    ++s;
  }
  Natural x = boost::multiprecision::powm(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n - 1) return true;
  }
  return false;
}

inline Integer floor_mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

/// Jacobi symbol (a/n) for odd positive n.
inline int jacobi(Integer a, Integer n) {
  a = floor_mod(a, n);
  int t = 1;
  while (a != 0) {
    while (!boost::multiprecision::bit_test(a, 0)) {
      a >>= 1;
      const unsigned r = static_cast<unsigned>(n % 8);
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

/// Strong Lucas probable-prime test with Selfridge parameters.
inline bool strong_lucas(const Natural& n) {
  if (boost::multiprecision::sqrt(n) * boost::multiprecision::sqrt(n) == n) return false;
  Integer disc = 5;
  while (true) {
    const int j = jacobi(disc, n);
    if (j == -1) break;
    if (j == 0 && boost::multiprecision::abs(disc) != n) return false;
    disc = disc > 0 ? Integer(-(disc + 2)) : Integer(-(disc - 2));
  }
  const Integer q = (1 - disc) / 4;
  Natural d = n + 1;
  unsigned s = 0;
  while (!boost::multiprecision::bit_test(d, 0)) {
    d >>= 1;
    ++s;
  }
  // Binary ladder with P = 1: U_{2k} = U_k V_k, V_{2k} = V_k^2 - 2Q^k.
  const auto half = [&](Integer v) {
    if (boost::multiprecision::bit_test(v, 0)) v += n;
    return floor_mod(v / 2, n);
  };
  Integer u = 0, v = 2, qk = 1;
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(d));
  for (int i = static_cast<int>(bits); i >= 0; --i) {
    u = floor_mod(u * v, n);
    v = floor_mod(v * v - 2 * qk, n);
    qk = floor_mod(qk * qk, n);
    if (boost::multiprecision::bit_test(d, static_cast<unsigned>(i))) {
      const Integer nu = half(u + v);
      const Integer nv = half(disc * u + v);
      u = nu;
      v = nv;
      qk = floor_mod(qk * q, n);
    }
  }
  if (u == 0 || v == 0) return true;
  for (unsigned r = 1; r < s; ++r) {
    v = floor_mod(v * v - 2 * qk, n);
    qk = floor_mod(qk * qk, n);
    if (v == 0) return true;
  }
  return false;
}

inline u64 gcd_u64(u64 a, u64 b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

/// Brent's variant of Pollard rho. Returns a nontrivial factor of composite n.
inline u64 pollard_brent_u64(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    const u64 m = 128;
    u64 r = 1;
    const auto f = [&](u64 v) { return static_cast<u64>((u128{mul_mod(v, v, n)} + c) % n); };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = gcd_u64(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd_u64(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline Natural pollard_brent(const Natural& n) {
  if (fits_u64(n)) return Natural(pollard_brent_u64(static_cast<u64>(n)));
  if (!boost::multiprecision::bit_test(n, 0)) return 2;
  for (unsigned c = 1;; ++c) {
    Natural y = 2, x = 2, g = 1, q = 1, ys = 2;
    const unsigned m = 128;
    unsigned long long r = 1;
    const auto f = [&](const Natural& v) -> Natural { return (v * v + c) % n; };
    do {
      x = y;
      for (unsigned long long i = 0; i < r; ++i) y = f(y);
      unsigned long long k = 0;
      do {
        ys = y;
        for (unsigned long long i = 0; i < std::min<unsigned long long>(m, r - k); ++i) {
          y = f(y);
          q = q * (x > y ? x - y : y - x) % n;
        }
        g = boost::multiprecision::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = boost::multiprecision::gcd(x > ys ? Natural(x - ys) : Natural(ys - x), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

}  // namespace detail

/// Deterministic below 3.3e24; BPSW (no known counterexample) above.
inline bool is_prime(const Natural& n) {
  detail::require_natural(n, "is_prime");
  if (n < 2) return false;
  if (n <= detail::kTrialLimit) return detail::is_small_prime(static_cast<std::uint32_t>(n));
  for (std::uint32_t p : detail::kWitnesses) {
    if (n % p == 0) return false;
  }
  if (detail::fits_u64(n)) return detail::miller_rabin_u64(static_cast<std::uint64_t>(n));
  static const Natural kDeterministicBound("3317044064679887385961981");
  for (std::uint32_t a : detail::kWitnesses) {
    if (!detail::miller_rabin(n, Natural(a))) return false;
  }
  if (n < kDeterministicBound) return true;
  return detail::strong_lucas(n);
}

namespace detail {

inline void split_into(const Natural& n, std::map<Natural, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  const Natural d = pollard_brent(n);
  split_into(d, out);
  split_into(n / d, out);
}

}  // namespace detail

/// Trial division by primes up to 10^6, then Pollard-Brent on the cofactor.
inline Factorization factorize(const Natural& n) {
  detail::require_natural(n, "factorize");
  if (n == 0) throw DomainError("factorize: zero has no factorization");
  Factorization result{n, {}};
  std::map<Natural, unsigned> found;
  Natural m = n;
  for (std::uint32_t p : detail::small_primes()) {
    if (Natural(p) * p > m) break;
    if (detail::fits_u64(m)) {
      auto small = static_cast<std::uint64_t>(m);
      if (small % p != 0) continue;
      unsigned e = 0;
      while (small % p == 0) {
        small /= p;
        ++e;
      }
      found[p] += e;
      m = small;
    } else {
      if (m % p != 0) continue;
      unsigned e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      found[p] += e;
    }
  }
  if (m > 1) {
    const std::uint32_t last = detail::small_primes().back();
    if (Natural(last) * last >= m || is_prime(m)) {
      ++found[m];
    } else {
      detail::split_into(m, found);
    }
  }
  for (auto& [p, e] : found) result.factors.push_back({p, e});
  return result;
}

/// Largest divisor of n whose prime factors are all <= bound.
inline Natural smooth_part(const Natural& n, const Natural& bound) {
  detail::require_natural(n, "smooth_part");
  detail::require_natural(bound, "smooth_part");
  if (n == 0) throw DomainError("smooth_part: n must be positive");
  if (bound > detail::kTrialLimit) {
    Natural s = 1;
    for (const auto& [p, e] : factorize(n).factors) {
      if (p <= bound) s *= boost::multiprecision::pow(p, e);
    }
    return s;
  }
  Natural m = n;
  Natural s = 1;
  for (std::uint32_t p : detail::small_primes()) {
    if (p > bound || m == 1) break;
    while (m % p == 0) {
      m /= p;
      s *= p;
    }
  }
  return s;
}

inline Natural largest_prime_factor(const Natural& n) {
  detail::require_natural(n, "largest_prime_factor");
  if (n < 2) throw DomainError("largest_prime_factor: n must be at least 2");
  return factorize(n).factors.back().prime;
}

/// All primes p with lo < p <= hi, ascending.
inline std::vector<Natural> primes_in_range(const Natural& lo_exclusive, const Natural& hi_inclusive) {
  detail::require_natural(lo_exclusive, "primes_in_range");
  if (lo_exclusive >= hi_inclusive) throw DomainError("primes_in_range: need lo < hi");
  std::vector<Natural> out;
  if (hi_inclusive > detail::kSieveHiLimit) {
    if (hi_inclusive - lo_exclusive > detail::kTrialLimit) {
      throw BudgetExceeded("primes_in_range: range above 10^8 wider than 10^6");
    }
    for (Natural p = lo_exclusive + 1; p <= hi_inclusive; ++p) {
      if (is_prime(p)) out.push_back(p);
    }
    return out;
  }
  const auto hi = static_cast<std::uint64_t>(hi_inclusive);
  const std::uint64_t lo = static_cast<std::uint64_t>(lo_exclusive) + 1;
  const std::uint64_t root = static_cast<std::uint64_t>(boost::multiprecision::sqrt(hi_inclusive));
  constexpr std::uint64_t kSegment = 1 << 18;
  std::vector<char> composite;
  for (std::uint64_t seg_lo = std::max<std::uint64_t>(lo, 2); seg_lo <= hi; seg_lo += kSegment) {
    const std::uint64_t seg_hi = std::min(hi, seg_lo + kSegment - 1);
    composite.assign(seg_hi - seg_lo + 1, 0);
    for (std::uint32_t p : detail::small_primes()) {
      if (p > root) break;
      std::uint64_t start = std::max<std::uint64_t>(std::uint64_t{p} * p, (seg_lo + p - 1) / p * p);
      for (std::uint64_t j = start; j <= seg_hi; j += p) composite[j - seg_lo] = 1;
    }
    for (std::uint64_t v = seg_lo; v <= seg_hi; ++v) {
      if (!composite[v - seg_lo]) out.emplace_back(v);
    }
  }
  return out;
}

inline Natural integer_sqrt(const Natural& n) {
  detail::require_natural(n, "integer_sqrt");
  return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Natural& n) {
  if (n < 0) return false;
  const Natural r = integer_sqrt(n);
  return r * r == n;
}

struct Congruence {
  Natural residue;
  Natural modulus;
};

/// Inverse of a modulo m (gcd(a, m) must be 1).
inline Integer mod_inverse(const Integer& a, const Integer& m) {
  Integer old_r = detail::floor_mod(a, m), r = m;
  Integer old_s = 1, s = 0;
  while (r != 0) {
    const Integer q = old_r / r;
    old_r = old_r - q * r;
    std::swap(old_r, r);
    old_s = old_s - q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) throw DomainError("mod_inverse: not invertible");
  return detail::floor_mod(old_s, m);
}

/// Smallest non-negative x satisfying every congruence. Empty input gives 0.
inline Natural crt_solve(std::span<const Congruence> congruences) {
  for (std::size_t i = 0; i < congruences.size(); ++i) {
    const auto& c = congruences[i];
    if (c.modulus < 1) throw DomainError("crt_solve: modulus must be positive");
    if (c.residue < 0 || c.residue >= c.modulus) throw DomainError("crt_solve: residue out of range");
    for (std::size_t j = 0; j < i; ++j) {
      if (boost::multiprecision::gcd(c.modulus, congruences[j].modulus) != 1) {
        throw DomainError("crt_solve: moduli are not pairwise coprime");
      }
    }
  }
  Natural x = 0, m = 1;
  for (const auto& c : congruences) {
    const Integer t = detail::floor_mod((c.residue - x) * mod_inverse(m, c.modulus), c.modulus);
    x += m * t;
    m *= c.modulus;
  }
  return x;
}

inline Natural crt_solve(std::initializer_list<Congruence> congruences) {
  return crt_solve(std::span<const Congruence>(congruences.begin(), congruences.size()));
}

}  // namespace prodseq
