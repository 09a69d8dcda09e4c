#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "toricmld/oracle.hpp"
#include "toricmld/weighted_blowup.hpp"

using namespace toricmld;

namespace {

WeightVector blowup(std::vector<Int> w) {
  return WeightVector(LatticeVector(std::move(w)), WeightMode::blowup);
}

// Random primitive blowup weights.
WeightVector random_weights(std::mt19937_64& rng, int dim, int max_entry) {
  std::uniform_int_distribution<int> entry(1, max_entry);
  while (true) {
    std::vector<Int> w(dim);
    for (auto& x : w) x = entry(rng);
    Int g = gcd_vector(LatticeVector(w));
    for (auto& x : w) x /= g;
    if (is_primitive(LatticeVector(w))) return blowup(std::move(w));
  }
}

}  // namespace

TEST_CASE("decompose reproduces the worked examples") {
  const Decomposition dec = decompose({1, 1, 2}, blowup({10, 11, 19}));
  CHECK(dec.dropped_index == 2);
  CHECK(dec.ray_coeff == make_rational(1, 11));
  REQUIRE(dec.basis_coeffs.size() == 2);
  CHECK(dec.basis_coeffs[0] == make_rational(1, 11));
  CHECK(dec.basis_coeffs[1] == make_rational(3, 11));
  CHECK(dec.value == make_rational(5, 11));

  // m = n: the ray itself.
  const Decomposition ray = decompose({10, 11, 19}, blowup({10, 11, 19}));
  CHECK(ray.ray_coeff == Rational(1));
  CHECK(ray.value == Rational(1));
  for (const Rational& b : ray.basis_coeffs) CHECK(b == Rational(0));

  // m = e_1 on (2,3): a = 0, b_1 = 1.
  const Decomposition e1 = decompose({1, 0}, blowup({2, 3}));
  CHECK(e1.dropped_index == 2);
  CHECK(e1.ray_coeff == Rational(0));
  CHECK(e1.basis_coeffs[0] == Rational(1));
  CHECK(e1.value == Rational(1));
}

TEST_CASE("decompose rejects bad input") {
  const WeightVector n = blowup({2, 3});
  CHECK_THROWS_AS(decompose(LatticeVector::zero(2), n), ZeroVectorError);
  CHECK_THROWS_AS(decompose({1, 2, 3}, n), DimensionMismatchError);
  CHECK_THROWS_AS(decompose({-1, 2}, n), OutsideSupportError);
}

TEST_CASE("alpha examples") {
  CHECK(alpha({1, 1, 2}, blowup({10, 11, 19})) == make_rational(5, 11));
  CHECK(alpha({1, 1}, blowup({2, 3})) == make_rational(2, 3));
}

TEST_CASE("decompose recomposes and agrees across valid dropped indices") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> dim(2, 5);
  std::uniform_int_distribution<int> entry(0, 12);
  for (int iter = 0; iter < 1500; ++iter) {
    const int d = dim(rng);
    const WeightVector n = random_weights(rng, d, 25);
    std::vector<Int> mv(d);
    bool zero = true;
    for (auto& x : mv) {
      x = entry(rng);
      if (x != 0) zero = false;
    }
    if (zero) mv[0] = 1;
    const LatticeVector m(mv);
    const Decomposition dec = decompose(m, n);

    // Exact recomposition: a*n + sum b_i e_i == m.
    std::size_t pos = 0;
    for (std::size_t i = 0; i < m.dim(); ++i) {
      Rational coord = dec.ray_coeff * Rational(n[i]);
      if (i != dec.dropped_index - 1) coord += dec.basis_coeffs[pos++];
      CHECK(coord == Rational(m[i]));
    }
    CHECK(dec.value == dec.ray_coeff +
                           std::accumulate(dec.basis_coeffs.begin(), dec.basis_coeffs.end(),
                                           Rational(0)));

    // Every valid dropped index yields the same value: brute force all j.
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const Rational a = make_rational(m[j], n[j]);
      Rational value = a;
      bool ok = true;
      for (std::size_t i = 0; i < m.dim() && ok; ++i) {
        if (i == j) continue;
        const Rational b = Rational(m[i]) - a * Rational(n[i]);
        if (b < 0) ok = false;
        else value += b;
      }
      if (ok) CHECK(value == dec.value);
    }
  }
}

TEST_CASE("alpha is homogeneous and permutation equivariant") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> dim(2, 5);
  std::uniform_int_distribution<int> entry(0, 10);
  std::uniform_int_distribution<int> scale(1, 5);
  for (int iter = 0; iter < 800; ++iter) {
    const int d = dim(rng);
    const WeightVector n = random_weights(rng, d, 20);
    std::vector<Int> mv(d);
    bool zero = true;
    for (auto& x : mv) {
      x = entry(rng);
      if (x != 0) zero = false;
    }
    if (zero) mv[d - 1] = 1;

    const Rational base = alpha(LatticeVector(mv), n);

    const Int k = scale(rng);
    std::vector<Int> scaled = mv;
    for (auto& x : scaled) x *= k;
    CHECK(alpha(LatticeVector(scaled), n) == Rational(k) * base);

    std::vector<std::size_t> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Int> pm(d), pn(d);
    for (int i = 0; i < d; ++i) {
      pm[i] = mv[perm[i]];
      pn[i] = n[perm[i]];
    }
    CHECK(alpha(LatticeVector(pm), blowup(pn)) == base);
  }
}

TEST_CASE("mld examples") {
  const MldReport r23 = mld(blowup({2, 3}));
  CHECK(r23.value == make_rational(2, 3));
  REQUIRE(r23.witness.has_value());
  CHECK(*r23.witness == LatticeVector({1, 1}));
  REQUIRE(r23.witness_decomposition.has_value());
  CHECK(r23.witness_decomposition->value == r23.value);

  CHECK(mld(blowup({1, 7})).value == Rational(1));
  CHECK(mld(blowup({5, 4})).value == make_rational(2, 5));
  CHECK(mld(blowup({20, 57, 133, 210})).value == Rational(1));
  CHECK(mld(blowup({32, 41, 71, 102})).value == Rational(1));

  // All-ones weights have no box points; the minimum sits on the generators.
  const MldReport ones = mld(blowup({1, 1, 1}));
  CHECK(ones.value == Rational(1));
  CHECK_FALSE(ones.witness.has_value());
}

TEST_CASE("the (n,2n-1) family members n=2,3 fall below 2/n") {
  // Tracked exclusions from the reference table: the cone of index 2n-1
  // contains (1,1) with value n/(2n-1), which undercuts 2/n for n = 2, 3.
  const MldReport r35 = mld(blowup({3, 5}));
  CHECK(r35.value == make_rational(3, 5));
  REQUIRE(r35.witness.has_value());
  CHECK(*r35.witness == LatticeVector({1, 1}));
  CHECK(oracle::mld_bruteforce(blowup({3, 5}), 5).value == make_rational(3, 5));

  CHECK(mld(blowup({2, 3})).value == make_rational(2, 3));
  CHECK(oracle::mld_bruteforce(blowup({2, 3}), 3).value == make_rational(2, 3));

  for (int n = 4; n <= 10; ++n)
    CHECK(mld(blowup({n, 2 * n - 1})).value == make_rational(2, n));
}

TEST_CASE("mld range, lower bound and witness validity on random weights") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> dim(2, 5);
  for (int iter = 0; iter < 300; ++iter) {
    const WeightVector n = random_weights(rng, dim(rng), 15);
    const MldReport rep = mld(n);
    CHECK(rep.value > 0);
    CHECK(rep.value <= 1);
    CHECK(rep.value >= make_rational(1, n.min_entry()));
    if (n.min_entry() == 1) CHECK(rep.value == Rational(1));
    if (rep.witness) {
      CHECK(is_primitive(*rep.witness));
      CHECK(alpha(*rep.witness, n) == rep.value);
    } else {
      CHECK(rep.value == Rational(1));
    }
  }
}

TEST_CASE("mld is permutation invariant") {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<int> dim(2, 4);
  for (int iter = 0; iter < 100; ++iter) {
    const int d = dim(rng);
    const WeightVector n = random_weights(rng, d, 12);
    std::vector<Int> w(n.vec().entries());
    std::shuffle(w.begin(), w.end(), rng);
    CHECK(mld(blowup(w)).value == mld(n).value);
  }
}

TEST_CASE("is_elc") {
  CHECK(is_elc(blowup({2, 3}), make_rational(2, 3)));
  CHECK_FALSE(is_elc(blowup({2, 3}), make_rational(7, 10)));
  for (int n = 1; n <= 6; ++n) CHECK(is_elc(blowup({1, n}), Rational(1)));
  CHECK_THROWS_AS(is_elc(blowup({2, 3}), Rational(0)), NonpositiveEpsilonError);
  CHECK_THROWS_AS(is_elc(blowup({2, 3}), Rational(-1)), NonpositiveEpsilonError);
}

TEST_CASE("lct of hyperplane pullbacks") {
  CHECK(lct_hyperplane(blowup({2, 3}), 2) == make_rational(1, 3));
  for (std::size_t i = 1; i <= 3; ++i)
    CHECK(lct_hyperplane(blowup({1, 1, 1}), i) == Rational(1));
  for (int n = 1; n <= 5; ++n)
    CHECK(lct_hyperplane(blowup({n, n + 1, n * (n + 1)}), 3) ==
          make_rational(1, n * (n + 1)));
  CHECK_THROWS_AS(lct_hyperplane(blowup({2, 3}), 0), IndexOutOfRangeError);
  CHECK_THROWS_AS(lct_hyperplane(blowup({2, 3}), 3), IndexOutOfRangeError);
}

TEST_CASE("pullback multiplicities") {
  for (int n = 1; n <= 5; ++n) {
    const WeightVector w = blowup({n, n + 1, n * (n + 1)});
    CHECK(pullback_multiplicity(w, 1) == n);
    CHECK(pullback_multiplicity(w, 2) == n + 1);
    CHECK(pullback_multiplicity(w, 3) == n * (n + 1));
  }
  CHECK(pullback_multiplicity(blowup({1, 1, 1, 1}), 2) == 1);
  // decompose(n, n) gives a = 1, b = 0: the exceptional order of the ray.
  const Decomposition self = decompose({2, 3}, blowup({2, 3}));
  CHECK(self.ray_coeff == Rational(1));
  CHECK_THROWS_AS(pullback_multiplicity(blowup({2, 3}), 5), IndexOutOfRangeError);
}

TEST_CASE("relative divisor classes") {
  for (int n = 1; n <= 5; ++n) {
    const WeightVector w = blowup({n, n + 1, n * (n + 1)});
    CHECK(relative_class(0, {-(n + 1), 0, 1}, w) == 0);
    CHECK(relative_class(0, {0, -n, 1}, w) == 0);
    CHECK(relative_class(1, {0, 0, 0}, w) == 1);
  }
  CHECK_THROWS_AS(relative_class(0, {1, 2}, blowup({1, 2, 3})), DimensionMismatchError);
}
