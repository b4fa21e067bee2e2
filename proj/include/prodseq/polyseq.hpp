// Integer polynomials and their value windows {P(r+1), ..., P(r+R)}:
// discriminants, content, admissible residues, positivity shifts, smooth-part
// statistics and the prime/term witness that bounds |B| when a window lies
// inside a product set.
#pragma once

#include "prodseq/arith.hpp"
#include "prodseq/coverlemma.hpp"

#include <cmath>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace prodseq {

/// Nonzero polynomial with integer coefficients, constant term first.
class PolynomialZ {
 public:
  explicit PolynomialZ(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty()) throw DomainError("PolynomialZ: zero polynomial");
  }
  PolynomialZ(std::initializer_list<Integer> coefficients) : PolynomialZ(std::vector<Integer>(coefficients)) {}

  std::size_t degree() const { return coeffs_.size() - 1; }
  const Integer& leading() const { return coeffs_.back(); }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  const Integer& operator[](std::size_t i) const { return coeffs_[i]; }

  Integer operator()(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
  }

  /// Comma-separated coefficients, constant term first.
  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) s += ',';
      s += coeffs_[i].str();
    }
    return s;
  }

  friend bool operator==(const PolynomialZ&, const PolynomialZ&) = default;

 private:
  std::vector<Integer> coeffs_;
};

inline Integer poly_eval(const PolynomialZ& f, const Integer& x) { return f(x); }

inline PolynomialZ poly_derivative(const PolynomialZ& f) {
  if (f.degree() == 0) throw DomainError("poly_derivative: derivative of a constant is zero");
  std::vector<Integer> d(f.degree());
  for (std::size_t i = 1; i <= f.degree(); ++i) d[i - 1] = f[i] * static_cast<unsigned>(i);
  return PolynomialZ(std::move(d));
}

inline PolynomialZ poly_product(std::span<const PolynomialZ> fs) {
  std::vector<Integer> acc{1};
  for (const auto& f : fs) {
    std::vector<Integer> next(acc.size() + f.degree(), 0);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      for (std::size_t j = 0; j <= f.degree(); ++j) next[i + j] += acc[i] * f[j];
    }
    acc = std::move(next);
  }
  return PolynomialZ(std::move(acc));
}

inline PolynomialZ poly_product(std::initializer_list<PolynomialZ> fs) {
  return poly_product(std::span<const PolynomialZ>(fs.begin(), fs.size()));
}

namespace detail {

/// Fraction-free Gaussian elimination (Bareiss); exact determinant.
inline Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace detail

/// Sylvester matrix of f (degree m) and g (degree n), size (m+n) x (m+n).
inline std::vector<std::vector<Integer>> sylvester_matrix(const PolynomialZ& f, const PolynomialZ& g) {
  const std::size_t m = f.degree(), n = g.degree(), size = m + n;
  std::vector<std::vector<Integer>> s(size, std::vector<Integer>(size, 0));
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t i = 0; i <= m; ++i) s[row][row + i] = f[m - i];
  }
  for (std::size_t row = 0; row < m; ++row) {
    for (std::size_t i = 0; i <= n; ++i) s[n + row][row + i] = g[n - i];
  }
  return s;
}

inline Integer resultant(const PolynomialZ& f, const PolynomialZ& g) {
  if (f.degree() + g.degree() == 0) return 1;
  return detail::bareiss_determinant(sylvester_matrix(f, g));
}

/// disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lead(f).
inline Integer discriminant(const PolynomialZ& f) {
  if (f.degree() < 1) throw DomainError("discriminant: constant polynomial");
  const std::size_t n = f.degree();
  Integer res = resultant(f, poly_derivative(f));
  if ((n * (n - 1) / 2) % 2 == 1) res = -res;
  return res / f.leading();
}

/// gcd of all values f(n); equals gcd of f(0), ..., f(deg f).
inline Natural content_d(const PolynomialZ& f) {
  if (f.degree() < 1) throw DomainError("content_d: constant polynomial");
  Natural d = 0;
  for (std::size_t x = 0; x <= f.degree(); ++x) d = boost::multiprecision::gcd(d, Natural(abs(f(Integer(x)))));
  return d;
}

inline constexpr std::uint64_t kRootScanLimit = 1'000'000;

/// Number of x in [0, p) with f(x) = 0 mod p, by direct scan.
inline std::size_t root_count_mod_p(const PolynomialZ& f, const Natural& p) {
  if (p > kRootScanLimit) throw BudgetExceeded("root_count_mod_p: prime above 10^6");
  if (!is_prime(p)) throw DomainError("root_count_mod_p: modulus is not prime");
  const auto mod = static_cast<std::int64_t>(p);
  std::vector<std::int64_t> c;
  for (const auto& a : f.coefficients()) c.push_back(static_cast<std::int64_t>(detail::floor_mod(a, p)));
  std::size_t count = 0;
  for (std::int64_t x = 0; x < mod; ++x) {
    std::int64_t acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (acc * x + *it) % mod;
    if (acc == 0) ++count;
  }
  return count;
}

/// rho(p) for every prime p <= bound.
inline std::map<Natural, std::size_t> rho_table(const PolynomialZ& f, const Natural& bound) {
  std::map<Natural, std::size_t> out;
  if (bound < 2) return out;
  for (const auto& p : primes_in_range(1, bound)) out.emplace(p, root_count_mod_p(f, p));
  return out;
}

/// The content-free quotient f1 = f / d evaluated exactly.
inline Integer reduced_value(const PolynomialZ& f, const Natural& d, const Integer& x) { return f(x) / d; }

/// No residue class avoids some p | M; the caller's irreducibility precondition failed.
class NoAdmissibleResidue : public DomainError {
 public:
  using DomainError::DomainError;
};

struct AdmissibleResidue {
  Integer discriminant;
  Natural content;  // d
  Natural modulus;  // M = |D| d^2
  Natural residue;  // a in [0, M)
};

inline constexpr std::uint64_t kResidueScanBudget = 50'000'000;

/// M = |D| d^2 and the smallest a (per prime power, combined by CRT) such that
/// f1(x) is coprime to M for every x = a mod M.
inline AdmissibleResidue admissible_residue(const PolynomialZ& f) {
  AdmissibleResidue out;
  out.discriminant = discriminant(f);
  if (out.discriminant == 0) throw DomainError("admissible_residue: repeated root, polynomial is not irreducible");
  out.content = content_d(f);
  out.modulus = abs(out.discriminant) * out.content * out.content;
  out.residue = 0;
  if (out.modulus == 1) return out;
  std::vector<Congruence> congruences;
  for (const auto& [p, e] : factorize(out.modulus).factors) {
    const Natural pe = boost::multiprecision::pow(p, e);
    // f1 mod p is periodic in x with period dividing p*d.
    const Natural period = p * out.content;
    if (pe * period > kResidueScanBudget) throw BudgetExceeded("admissible_residue: modulus too large to scan");
    std::optional<Natural> found;
    for (Natural a = 0; a < pe && !found; ++a) {
      bool ok = true;
      for (Natural j = 0; j < period && ok; ++j) {
        ok = reduced_value(f, out.content, Integer(a + j * pe)) % p != 0;
      }
      if (ok) found = a;
    }
    if (!found) throw NoAdmissibleResidue("admissible_residue: no residue class mod " + pe.str() + " avoids " + p.str());
    congruences.push_back({*found, pe});
  }
  out.residue = crt_solve(congruences);
  return out;
}

namespace detail {

using RationalPoly = std::vector<Rational>;  // constant first, trimmed

inline void trim(RationalPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline RationalPoly poly_rem(RationalPoly num, const RationalPoly& den) {
  while (num.size() >= den.size() && !num.empty()) {
    const Rational factor = num.back() / den.back();
    const std::size_t shift = num.size() - den.size();
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= factor * den[i];
    num.pop_back();
    trim(num);
  }
  return num;
}

inline Rational eval(const RationalPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline std::vector<RationalPoly> sturm_chain(const PolynomialZ& f) {
  std::vector<RationalPoly> chain;
  RationalPoly p0(f.coefficients().begin(), f.coefficients().end());
  chain.push_back(p0);
  if (f.degree() == 0) return chain;
  const auto d = poly_derivative(f);
  chain.emplace_back(d.coefficients().begin(), d.coefficients().end());
  while (chain.back().size() > 1) {
    RationalPoly r = poly_rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

inline int sign_changes(const std::vector<Rational>& values) {
  int changes = 0, last = 0;
  for (const auto& v : values) {
    const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

/// Distinct real roots of f in (a, +inf); requires f(a) != 0.
inline int roots_above(const PolynomialZ& f, const Rational& a) {
  const auto chain = sturm_chain(f);
  std::vector<Rational> at_a, at_inf;
  for (const auto& p : chain) {
    at_a.push_back(eval(p, a));
    at_inf.push_back(p.back());
  }
  return sign_changes(at_a) - sign_changes(at_inf);
}

}  // namespace detail

/// Distinct real roots of f strictly above a, for f(a) != 0 (Sturm).
inline int real_roots_above(const PolynomialZ& f, const Rational& a) {
  if (f(a) == 0) throw DomainError("real_roots_above: a is a root");
  return detail::roots_above(f, a);
}

/// Smallest l >= 0 with P(x + l) > 0 and P'(x + l) > 0 for every real x >= 1.
inline Natural positivity_shift(const PolynomialZ& p) {
  if (p.leading() <= 0) throw DomainError("positivity_shift: leading coefficient must be positive");
  if (p.degree() == 0) throw DomainError("positivity_shift: constant polynomial has zero derivative");
  const PolynomialZ dp = poly_derivative(p);
  // P(a) > 0 and P' > 0 on [a, inf) imply P > 0 on [a, inf).
  for (Natural l = 0;; ++l) {
    const Integer a = l + 1;
    if (p(a) <= 0 || dp(a) <= 0) continue;
    if (dp.degree() == 0 || detail::roots_above(dp, Rational(a)) == 0) return l;
  }
}

enum class PrimeFilter { kAboveR, kMidRange };

struct WindowRecord {
  std::size_t i = 0;  // offset in 1..R
  Natural value;      // term after residue filtering and division by d
  Natural largest_prime_factor;  // 1 for the term 1
  Natural smooth;     // R-smooth part
  bool has_prime_above_r = false;
  bool has_prime_in_mid = false;  // prime in (R/2, R]
  bool qualifies = false;         // per the requested filter
};

struct WindowStats {
  Integer r;
  std::size_t R = 0;
  PrimeFilter filter = PrimeFilter::kAboveR;
  std::optional<AdmissibleResidue> residue;
  std::vector<WindowRecord> records;
  std::size_t above_count = 0;
  std::size_t mid_count = 0;
  double log_smooth = 0;  // log S, S the R-smooth part of the product of terms

  std::size_t qualifying_count() const { return filter == PrimeFilter::kAboveR ? above_count : mid_count; }
};

inline constexpr std::size_t kMaxWindow = 1'000'000;
inline const Natural kFactorBudget = boost::multiprecision::pow(Natural(10), 24);

namespace detail {

inline Factorization budgeted_factorize(const Natural& n) {
  if (n > kFactorBudget) throw BudgetExceeded("factorization budget exceeded: " + n.str());
  return factorize(n);
}

}  // namespace detail

/// Factors every window term f(r+i) (or f1(r+i) restricted to r+i = a mod M
/// when `residue` is given) and tallies terms with a prime factor above R and
/// with a prime factor in (R/2, R].
inline WindowStats window_stats(const PolynomialZ& f, const Integer& r, std::size_t R, PrimeFilter filter,
                                const std::optional<AdmissibleResidue>& residue = std::nullopt) {
  if (R < 1) throw DomainError("window_stats: R must be at least 1");
  if (r < 0) throw DomainError("window_stats: r must be non-negative");
  if (R > kMaxWindow) throw BudgetExceeded("window_stats: window longer than 10^6");
  WindowStats stats{r, R, filter, residue, {}, 0, 0, 0.0};
  const Natural bound = R;
  for (std::size_t i = 1; i <= R; ++i) {
    const Integer x = r + i;
    Integer value = f(x);
    if (residue) {
      if (detail::floor_mod(x, residue->modulus) != residue->residue) continue;
      value /= residue->content;
    }
    if (value <= 0) throw DomainError("window_stats: non-positive term at i = " + std::to_string(i) + "; shift first");
    WindowRecord rec;
    rec.i = i;
    rec.value = value;
    rec.largest_prime_factor = 1;
    rec.smooth = 1;
    for (const auto& [p, e] : detail::budgeted_factorize(rec.value).factors) {
      rec.largest_prime_factor = p;
      if (p <= bound) {
        rec.smooth *= boost::multiprecision::pow(p, e);
        stats.log_smooth += e * std::log(p.convert_to<double>());
        if (2 * p > bound) rec.has_prime_in_mid = true;
      } else {
        rec.has_prime_above_r = true;
      }
    }
    rec.qualifies = filter == PrimeFilter::kAboveR ? rec.has_prime_above_r : rec.has_prime_in_mid;
    stats.above_count += rec.has_prime_above_r;
    stats.mid_count += rec.has_prime_in_mid;
    stats.records.push_back(std::move(rec));
  }
  return stats;
}

struct PolyFactor {
  PolynomialZ poly;
  unsigned multiplicity = 1;
};

/// Checks caller-supplied irreducible factors: degree >= 1 and, for degree 2,
/// no rational root. Higher degrees are accepted as given.
inline void validate_factors(std::span<const PolyFactor> factors) {
  if (factors.empty()) throw DomainError("window_witness: no factors");
  Integer sign = 1;
  for (const auto& f : factors) {
    if (f.multiplicity == 0) throw DomainError("window_witness: zero multiplicity");
    if (f.poly.degree() == 0) throw DomainError("window_witness: constant factor");
    if (f.poly.degree() == 2 && is_perfect_square(discriminant(f.poly))) {
      throw DomainError("window_witness: quadratic factor " + f.poly.str() + " is reducible");
    }
    if (f.poly.leading() < 0 && f.multiplicity % 2 == 1) sign = -sign;
  }
  if (sign < 0) throw DomainError("window_witness: product must have positive leading coefficient");
}

inline PolynomialZ expand(std::span<const PolyFactor> factors) {
  std::vector<PolynomialZ> all;
  for (const auto& f : factors) {
    for (unsigned m = 0; m < f.multiplicity; ++m) all.push_back(f.poly);
  }
  return poly_product(all);
}

struct WitnessTerm {
  std::size_t i = 0;  // window offset
  Natural value;      // P(r+i)
  std::vector<Natural> primes;  // qualifying primes dividing value, ascending
};

struct WitnessReport {
  int window_case = 0;  // 1, 2 or 3
  Integer r;
  std::size_t R = 0;
  double gamma = 2.0;
  std::size_t degree = 0;          // deg P
  std::size_t degree_bound = 0;    // observed max number of C-terms per prime
  std::vector<Natural> primes;     // A
  std::vector<WitnessTerm> terms;  // C
  std::vector<std::size_t> cover;  // C' as indices into terms
  std::vector<Natural> fresh_primes;  // for each C' element, a prime unused by earlier ones
  std::size_t k = 0;
  Natural b_lower_bound;  // ceil((k + 1) / 2)
};

namespace detail {

/// r > R^gamma, exact for integral gamma.
inline bool exceeds_power(const Integer& r, std::size_t R, double gamma) {
  if (gamma == std::floor(gamma) && gamma >= 0 && gamma < 64) {
    return r > boost::multiprecision::pow(Integer(R), static_cast<unsigned>(gamma));
  }
  return std::log(r.convert_to<long double>()) > static_cast<long double>(gamma) * std::log((long double)R);
}

}  // namespace detail

/// Builds the prime set A and term set C for the window, the prime/term
/// incidence graph, its cover sequence C', and the lower bound on |B| implied
/// by acyclicity of G(C', B.B) for any B whose product set contains the window.
inline WitnessReport window_witness(std::span<const PolyFactor> factors, const Integer& r, std::size_t R,
                                    double gamma = 2.0) {
  validate_factors(factors);
  if (R < 1) throw DomainError("window_witness: R must be at least 1");
  if (r < 0) throw DomainError("window_witness: r must be non-negative");
  if (R > kMaxWindow) throw BudgetExceeded("window_witness: window longer than 10^6");
  if (!(gamma > 1.0)) throw DomainError("window_witness: gamma must exceed 1");

  WitnessReport out;
  out.r = r;
  out.R = R;
  out.gamma = gamma;
  out.degree = expand(factors).degree();
  bool has_nonlinear = false;
  for (const auto& f : factors) has_nonlinear = has_nonlinear || f.poly.degree() >= 2;
  out.window_case = has_nonlinear ? 1 : (detail::exceeds_power(r, R, gamma) ? 2 : 3);

  const Natural bound = R;
  const auto qualifying = [&](const Natural& p) {
    return out.window_case == 3 ? (2 * p > bound && p <= bound) : p > bound;
  };

  std::map<Natural, std::size_t> prime_ids;
  std::vector<std::vector<std::size_t>> adjacency;
  std::map<Natural, std::size_t> seen_values;
  for (std::size_t i = 1; i <= R; ++i) {
    const Integer x = r + i;
    std::map<Natural, unsigned> merged;
    Natural value = 1;
    for (const auto& f : factors) {
      const Integer v = f.poly(x);
      if (v <= 0) throw DomainError("window_witness: non-positive factor value at i = " + std::to_string(i) + "; shift first");
      value *= boost::multiprecision::pow(Natural(v), f.multiplicity);
      for (const auto& [p, e] : detail::budgeted_factorize(v).factors) merged[p] += e * f.multiplicity;
    }
    if (seen_values.count(value)) continue;
    WitnessTerm t{i, value, {}};
    for (const auto& [p, e] : merged) {
      if (qualifying(p)) t.primes.push_back(p);
    }
    if (t.primes.empty()) continue;
    seen_values.emplace(value, out.terms.size());
    std::vector<std::size_t> nbrs;
    for (const auto& p : t.primes) nbrs.push_back(prime_ids.try_emplace(p, prime_ids.size()).first->second);
    adjacency.push_back(std::move(nbrs));
    out.terms.push_back(std::move(t));
  }
  // Renumber primes ascending.
  std::vector<std::size_t> remap(prime_ids.size());
  for (const auto& [p, id] : prime_ids) {
    remap[id] = out.primes.size();
    out.primes.push_back(p);
  }
  for (auto& nbrs : adjacency) {
    for (auto& a : nbrs) a = remap[a];
  }

  const Bipartite graph(out.primes.size(), adjacency);
  out.degree_bound = graph.degree_bound();
  out.cover = cover_sequence(graph);
  out.k = out.cover.size();
  out.b_lower_bound = (Natural(out.k) + 2) / 2;

  std::vector<char> used(out.primes.size(), 0);
  for (std::size_t c : out.cover) {
    std::optional<Natural> fresh;
    for (std::size_t a : graph.neighbours(c)) {
      if (!used[a] && !fresh) fresh = out.primes[a];
    }
    for (std::size_t a : graph.neighbours(c)) used[a] = 1;
    out.fresh_primes.push_back(*fresh);
  }
  return out;
}

inline WitnessReport window_witness(std::initializer_list<PolyFactor> factors, const Integer& r, std::size_t R,
                                    double gamma = 2.0) {
  return window_witness(std::span<const PolyFactor>(factors.begin(), factors.size()), r, R, gamma);
}

}  // namespace prodseq
