#include "prodseq/polyseq.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace prodseq {
namespace {

using I64 = std::int64_t;

// Discriminant from a hand-built Sylvester matrix expanded by permutations.
I64 discriminant_oracle(const std::vector<I64>& c) {
  const std::size_t n = c.size() - 1;
  std::vector<I64> d;
  for (std::size_t i = 1; i <= n; ++i) d.push_back(c[i] * static_cast<I64>(i));
  const std::size_t size = 2 * n - 1;
  std::vector<std::vector<I64>> s(size, std::vector<I64>(size, 0));
  for (std::size_t row = 0; row < n - 1; ++row) {
    for (std::size_t j = 0; j <= n; ++j) s[row][row + j] = c[n - j];
  }
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t j = 0; j < n; ++j) s[n - 1 + row][row + j] = d[n - 1 - j];
  }
  I64 res = oracle::determinant(s);
  if ((n * (n - 1) / 2) % 2) res = -res;
  return res / c[n];
}

PolynomialZ poly(const std::vector<I64>& c) { return PolynomialZ(std::vector<Integer>(c.begin(), c.end())); }

TEST(PolynomialZ, Basics) {
  const PolynomialZ f{1, 0, 1};
  EXPECT_EQ(poly_eval(f, 3), 10);
  EXPECT_EQ(poly_derivative(f), (PolynomialZ{0, 2}));
  EXPECT_EQ(poly_product({PolynomialZ{0, 1}, PolynomialZ{1, 1}}), (PolynomialZ{0, 1, 1}));
  EXPECT_EQ(PolynomialZ({3, 2, 0, 0}).degree(), 1u);
  EXPECT_EQ(f.str(), "1,0,1");
  EXPECT_EQ(f(Rational(1, 2)), Rational(5, 4));
  EXPECT_THROW(PolynomialZ({0, 0}), DomainError);
  EXPECT_THROW(poly_derivative(PolynomialZ{7}), DomainError);
}

TEST(Discriminant, Examples) {
  EXPECT_EQ(discriminant(PolynomialZ{1, 0, 1}), -4);
  EXPECT_EQ(discriminant(PolynomialZ{6, -5, 1}), 1);
  EXPECT_EQ(discriminant(PolynomialZ{0, -1, 0, 1}), 4);
  EXPECT_EQ(discriminant_oracle({0, -1, 0, 1}), 4);
  EXPECT_EQ(discriminant(PolynomialZ{5, 2, 0, 1}), -707);
  EXPECT_EQ(discriminant(PolynomialZ{-1, 7, -3, 2}), -1763);
  EXPECT_EQ(discriminant(PolynomialZ{1, 1, 0, 0, 1}), 229);
  EXPECT_EQ(discriminant(PolynomialZ{3, 2}), 1);
  EXPECT_EQ(discriminant(PolynomialZ{1, 2, 1}), 0);
  EXPECT_THROW(discriminant(PolynomialZ{4}), DomainError);
}

TEST(Discriminant, MatchesPermutationExpansion) {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (int t = 0; t < 300; ++t) {
    const std::size_t deg = 2 + t % 3;
    std::vector<I64> c(deg + 1);
    for (auto& x : c) x = coeff(rng);
    if (c.back() == 0) c.back() = 1 + t % 4;
    ASSERT_EQ(discriminant(poly(c)), discriminant_oracle(c));
  }
  // quadratic closed form
  for (I64 a = 1; a <= 4; ++a) {
    for (I64 b = -5; b <= 5; ++b) {
      for (I64 c = -5; c <= 5; ++c) EXPECT_EQ(discriminant(poly({c, b, a})), b * b - 4 * a * c);
    }
  }
}

TEST(Content, Examples) {
  EXPECT_EQ(content_d(PolynomialZ{0, 1, 1}), 2);
  EXPECT_EQ(content_d(PolynomialZ{1, 0, 1}), 1);
  EXPECT_EQ(content_d(PolynomialZ{4, 2}), 2);
  EXPECT_EQ(content_d(PolynomialZ{0, -1, 0, 1}), 6);  // x^3 - x
}

TEST(Content, AgreesWithGcdOfManyValues) {
  std::mt19937 rng(10);
  std::uniform_int_distribution<int> coeff(-6, 6);
  for (int t = 0; t < 100; ++t) {
    std::vector<I64> c(2 + t % 4);
    for (auto& x : c) x = coeff(rng);
    if (c.back() == 0) c.back() = 2;
    const auto f = poly(c);
    Natural g = 0;
    for (I64 x = 1; x <= 1000; ++x) g = boost::multiprecision::gcd(g, Natural(abs(f(Integer(x)))));
    ASSERT_EQ(content_d(f), g) << f.str();
  }
}

TEST(RootCount, Examples) {
  const PolynomialZ f{1, 0, 1};
  EXPECT_EQ(root_count_mod_p(f, 5), 2u);
  EXPECT_EQ(root_count_mod_p(f, 3), 0u);
  EXPECT_EQ(root_count_mod_p(f, 2), 1u);
  EXPECT_THROW(root_count_mod_p(f, 4), DomainError);
  EXPECT_THROW(root_count_mod_p(f, Natural(1'000'003)), BudgetExceeded);
  const auto rho = rho_table(f, 30);
  // x^2 + 1 has two roots mod p = 1 (mod 4), none mod p = 3 (mod 4).
  for (const auto& [p, count] : rho) {
    const std::size_t want = p == 2 ? 1 : (p % 4 == 1 ? 2 : 0);
    EXPECT_EQ(count, want) << p;
  }
  EXPECT_EQ(rho.size(), 10u);
}

// Every x = a (mod M) in a full period gives f1(x) coprime to M.
bool residue_valid(const PolynomialZ& f, const AdmissibleResidue& r) {
  const Natural span = r.modulus * r.content * r.modulus;
  for (Natural x = r.residue; x < r.residue + span; x += r.modulus) {
    if (boost::multiprecision::gcd(Natural(abs(f(Integer(x)) / r.content)), r.modulus) != 1) return false;
  }
  return true;
}

TEST(AdmissibleResidue, Examples) {
  const auto a = admissible_residue(PolynomialZ{1, 0, 1});
  EXPECT_EQ(a.modulus, 4);
  EXPECT_EQ(a.residue, 0);
  const auto b = admissible_residue(PolynomialZ{1, 1, 1});
  EXPECT_EQ(b.modulus, 3);
  EXPECT_EQ(b.residue, 0);
  const auto c = admissible_residue(PolynomialZ{0, 1});  // D = 1, d = 1
  EXPECT_EQ(c.modulus, 1);
  EXPECT_EQ(c.residue, 0);
  EXPECT_THROW(admissible_residue(PolynomialZ{1, 2, 1}), DomainError);
  EXPECT_THROW(admissible_residue(PolynomialZ{0, 0, 1}), DomainError);
}

TEST(AdmissibleResidue, ValidOnIrreducibleCorpus) {
  const std::vector<std::vector<I64>> corpus{
      {1, 0, 1}, {1, 1, 1}, {0, 1, 1}, {2, 0, 1}, {3, 1, 1}, {5, 2, 0, 1}, {1, 1, 0, 0, 1}, {2, 2}, {-2, 0, 1}, {7, 0, 3},
  };
  for (const auto& c : corpus) {
    const auto f = poly(c);
    const auto r = admissible_residue(f);
    EXPECT_EQ(r.modulus, abs(r.discriminant) * r.content * r.content);
    EXPECT_LT(r.residue, r.modulus);
    EXPECT_TRUE(residue_valid(f, r)) << f.str();
  }
  // x^2 + x: D = 1, d = 2, M = 4; f1 = x(x+1)/2 is odd for x = 1, 2 (mod 4).
  const auto r = admissible_residue(PolynomialZ{0, 1, 1});
  EXPECT_EQ(r.modulus, 4);
  EXPECT_EQ(r.residue, 1);
}

TEST(AdmissibleResidue, NontrivialContent) {
  const PolynomialZ f{2, -1, 1};  // x^2 - x + 2: every value even, D = -7
  const auto r = admissible_residue(f);
  EXPECT_EQ(r.content, 2);
  EXPECT_EQ(r.modulus, 28);
  EXPECT_TRUE(residue_valid(f, r));
}

// Smallest l with P(x+l) > 0 and P'(x+l) > 0 at integers x in [1, 2000].
unsigned integer_shift(const PolynomialZ& p) {
  const PolynomialZ dp = poly_derivative(p);
  for (unsigned l = 0;; ++l) {
    bool ok = true;
    for (I64 x = 1; x <= 2000 && ok; ++x) ok = p(Integer(x + l)) > 0 && dp(Integer(x + l)) > 0;
    if (ok) return l;
  }
}

TEST(PositivityShift, Examples) {
  EXPECT_EQ(positivity_shift(PolynomialZ{1, 0, 1}), 0);
  EXPECT_EQ(positivity_shift(PolynomialZ{-10, 1}), 10);
  EXPECT_EQ(positivity_shift(PolynomialZ{0, -6, 1}), 6);
  EXPECT_EQ(integer_shift(PolynomialZ{0, -6, 1}), 6u);
  EXPECT_THROW(positivity_shift(PolynomialZ{1, -1}), DomainError);
  EXPECT_THROW(positivity_shift(PolynomialZ{3}), DomainError);
}

TEST(PositivityShift, NeverBelowIntegerScan) {
  std::mt19937 rng(12);
  std::uniform_int_distribution<int> coeff(-20, 20);
  for (int t = 0; t < 60; ++t) {
    std::vector<I64> c(2 + t % 3);
    for (auto& x : c) x = coeff(rng);
    c.back() = 1 + t % 3;
    const auto p = poly(c);
    const Natural l = positivity_shift(p);
    EXPECT_GE(l, integer_shift(p)) << p.str();
    // Real condition at the returned shift: no critical point above 1 + l.
    const PolynomialZ dp = poly_derivative(p);
    EXPECT_GT(p(Integer(l + 1)), 0);
    EXPECT_GT(dp(Integer(l + 1)), 0);
    if (dp.degree() > 0) EXPECT_EQ(real_roots_above(dp, Rational(Integer(l + 1))), 0);
  }
}

TEST(WindowStats, LinearExamples) {
  const PolynomialZ x{0, 1};
  EXPECT_EQ(window_stats(x, 0, 10, PrimeFilter::kAboveR).qualifying_count(), 0u);
  const auto mid = window_stats(x, 0, 10, PrimeFilter::kMidRange);
  EXPECT_EQ(mid.qualifying_count(), 1u);
  std::vector<std::size_t> q;
  for (const auto& rec : mid.records) {
    if (rec.qualifies) q.push_back(rec.i);
  }
  EXPECT_EQ(q, std::vector<std::size_t>{7});
  EXPECT_EQ(mid.records.front().largest_prime_factor, 1);  // term 1
}

TEST(WindowStats, ResidueFilteredQuadraticMatchesOracle) {
  const PolynomialZ f{1, 0, 1};
  const auto res = admissible_residue(f);
  const auto stats = window_stats(f, 0, 50, PrimeFilter::kAboveR, res);
  std::size_t expected = 0, rows = 0;
  for (std::uint64_t x = 1; x <= 50; ++x) {
    if (x % 4 != 0) continue;
    ++rows;
    const auto fac = oracle::factor(x * x + 1);
    expected += fac.rbegin()->first > 50;
  }
  EXPECT_EQ(stats.records.size(), rows);
  EXPECT_EQ(stats.qualifying_count(), expected);
  EXPECT_EQ(expected, 8u);
  EXPECT_GE(stats.qualifying_count(), 5u);  // ceil(R / 3M)
}

TEST(WindowStats, SmoothDecomposition) {
  const PolynomialZ f{1, 1, 1};
  const auto stats = window_stats(f, 100, 200, PrimeFilter::kAboveR);
  double log_s = 0;
  for (const auto& rec : stats.records) {
    const auto value = static_cast<std::uint64_t>(rec.value);
    ASSERT_EQ(rec.smooth, oracle::smooth_part(value, 200));
    ASSERT_EQ(rec.value % rec.smooth, 0);
    const Natural rough = rec.value / rec.smooth;
    EXPECT_EQ(rec.has_prime_above_r, rough > 1);
    EXPECT_EQ(rec.largest_prime_factor, oracle::factor(value).rbegin()->first);
    log_s += std::log(rec.smooth.convert_to<double>());
  }
  EXPECT_NEAR(stats.log_smooth, log_s, 1e-6 * log_s);
}

TEST(WindowStats, Guards) {
  const PolynomialZ x{0, 1};
  EXPECT_THROW(window_stats(x, 0, 0, PrimeFilter::kAboveR), DomainError);
  EXPECT_THROW(window_stats(x, -1, 5, PrimeFilter::kAboveR), DomainError);
  EXPECT_THROW(window_stats(x, 0, 1'000'001, PrimeFilter::kAboveR), BudgetExceeded);
  EXPECT_THROW(window_stats(PolynomialZ{-5, 1}, 0, 10, PrimeFilter::kAboveR), DomainError);
  const PolynomialZ huge{0, 0, 0, 1};
  EXPECT_THROW(window_stats(huge, Integer("100000000000"), 2, PrimeFilter::kAboveR), BudgetExceeded);
}

// Independent checks of a witness report against trial division.
void check_witness(const WitnessReport& w) {
  EXPECT_EQ(w.k, w.cover.size());
  EXPECT_EQ(w.b_lower_bound, (w.k + 2) / 2);
  ASSERT_EQ(w.fresh_primes.size(), w.k);
  std::map<Natural, std::size_t> per_prime;
  for (const auto& t : w.terms) {
    for (const auto& p : t.primes) {
      EXPECT_EQ(t.value % p, 0);
      ++per_prime[p];
    }
  }
  std::size_t max_per_prime = 0;
  for (const auto& [p, c] : per_prime) max_per_prime = std::max(max_per_prime, c);
  EXPECT_EQ(w.degree_bound, max_per_prime);
  EXPECT_EQ(w.primes.size(), per_prime.size());
  EXPECT_GE(w.k * w.degree_bound, w.terms.size());
  for (std::size_t j = 0; j < w.k; ++j) {
    const auto& term = w.terms[w.cover[j]];
    EXPECT_EQ(term.value % w.fresh_primes[j], 0);
    for (std::size_t e = 0; e < j; ++e) EXPECT_NE(w.terms[w.cover[e]].value % w.fresh_primes[j], 0);
  }
}

TEST(WindowWitness, LinearSmallWindow) {
  const auto w = window_witness({{PolynomialZ{0, 1}, 1}}, 0, 10);
  EXPECT_EQ(w.window_case, 3);
  EXPECT_GE(w.k, 1u);
  EXPECT_GE(w.b_lower_bound, 1);
  ASSERT_EQ(w.terms.size(), 1u);
  EXPECT_EQ(w.terms[0].value, 7);
  check_witness(w);
}

TEST(WindowWitness, Quadratic) {
  const auto w = window_witness({{PolynomialZ{1, 0, 1}, 1}}, 0, 30);
  EXPECT_EQ(w.window_case, 1);
  EXPECT_EQ(w.degree, 2u);
  EXPECT_LE(w.degree_bound, 2u);
  check_witness(w);
  // Terms x^2+1 with a prime factor above 30, for x in 1..30.
  std::size_t terms = 0;
  for (std::uint64_t x = 1; x <= 30; ++x) terms += oracle::factor(x * x + 1).rbegin()->first > 30;
  EXPECT_EQ(w.terms.size(), terms);
}

TEST(WindowWitness, LinearFarWindow) {
  const auto w = window_witness({{PolynomialZ{0, 1}, 1}}, 1'000'000, 20);
  EXPECT_EQ(w.window_case, 2);
  std::size_t terms = 0;
  for (std::uint64_t x = 1'000'001; x <= 1'000'020; ++x) terms += oracle::factor(x).rbegin()->first > 20;
  EXPECT_EQ(w.terms.size(), terms);
  EXPECT_EQ(w.degree_bound, 1u);  // distinct large primes in a short window
  EXPECT_EQ(w.k, terms);
  check_witness(w);
}

TEST(WindowWitness, GammaMovesTheCaseSplit) {
  EXPECT_EQ(window_witness({{PolynomialZ{0, 1}, 1}}, 500, 20).window_case, 2);
  EXPECT_EQ(window_witness({{PolynomialZ{0, 1}, 1}}, 500, 20, 3.0).window_case, 3);
  EXPECT_EQ(window_witness({{PolynomialZ{0, 1}, 1}}, 500, 20, 2.5).window_case, 3);  // 20^2.5 ~ 1789
}

TEST(WindowWitness, MultipleFactors) {
  // x (x^2 + 1)^2
  const auto w = window_witness({{PolynomialZ{0, 1}, 1}, {PolynomialZ{1, 0, 1}, 2}}, 0, 25);
  EXPECT_EQ(w.window_case, 1);
  EXPECT_EQ(w.degree, 5u);
  check_witness(w);
}

TEST(WindowWitness, RejectsBadFactors) {
  EXPECT_THROW(window_witness({{PolynomialZ{-1, 0, 1}, 1}}, 0, 10), DomainError);  // x^2 - 1
  EXPECT_THROW(window_witness({{PolynomialZ{0, -1}, 1}}, 0, 10), DomainError);
  EXPECT_THROW(window_witness({{PolynomialZ{0, 1}, 0}}, 0, 10), DomainError);
  EXPECT_THROW(window_witness({{PolynomialZ{0, 1}, 1}}, -1, 10), DomainError);
  EXPECT_THROW(window_witness({{PolynomialZ{0, 1}, 1}}, 0, 10, 1.0), DomainError);
  EXPECT_THROW(window_witness({{PolynomialZ{-20, 1}, 1}}, 0, 10), DomainError);  // negative values
  EXPECT_THROW(window_witness(std::span<const PolyFactor>{}, 0, 10), DomainError);
  // Even multiplicity fixes the sign of the product, but each factor must be positive on the window.
  EXPECT_THROW(window_witness({{PolynomialZ{0, -1}, 2}}, 0, 5), DomainError);
}

}  // namespace
}  // namespace prodseq
