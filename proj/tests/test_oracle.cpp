#include <doctest.h>

#include <vector>

#include "toricmld/oracle.hpp"

using namespace toricmld;

namespace {

WeightVector blowup(std::vector<Int> w) {
  return WeightVector(LatticeVector(std::move(w)), WeightMode::blowup);
}

WeightVector fibration(std::vector<Int> w) {
  return WeightVector(LatticeVector(std::move(w)), WeightMode::fibration);
}

}  // namespace

TEST_CASE("mld_bruteforce examples") {
  CHECK(oracle::mld_bruteforce(blowup({2, 3}), 3).value == make_rational(2, 3));
  CHECK(oracle::mld_bruteforce(blowup({1, 1}), 1).value == Rational(1));
  CHECK(oracle::mld_bruteforce(blowup({10, 11, 19}), 19).value ==
        mld(blowup({10, 11, 19})).value);
  CHECK_THROWS_AS(oracle::mld_bruteforce(blowup({2, 3}), 2), BoundTooSmallError);
}

TEST_CASE("mld_bruteforce witness attains the value") {
  const MldReport rep = oracle::mld_bruteforce(blowup({5, 4}), 5);
  CHECK(rep.value == make_rational(2, 5));
  REQUIRE(rep.witness.has_value());
  CHECK(oracle::alpha_value(*rep.witness, blowup({5, 4})) == rep.value);
  REQUIRE(rep.witness_decomposition.has_value());
  CHECK(rep.witness_decomposition->value == rep.value);
}

TEST_CASE("mld_prime_bruteforce examples") {
  CHECK(oracle::mld_prime_bruteforce(fibration({3, 1}), 5).value == make_rational(2, 3));
  CHECK(oracle::mld_prime_bruteforce(fibration({1, 4}), 6).value == Rational(1));
  CHECK(oracle::mld_prime_bruteforce(fibration({2, 3}), 7).value == Rational(1));
  CHECK_THROWS_AS(oracle::mld_prime_bruteforce(fibration({3, 1}), 4), BoundTooSmallError);
}

TEST_CASE("lct_bruteforce examples") {
  CHECK(oracle::lct_bruteforce(blowup({2, 3}), 2, 6) == make_rational(1, 3));
  for (std::size_t i = 1; i <= 3; ++i)
    CHECK(oracle::lct_bruteforce(blowup({1, 1, 1}), i, 3) == Rational(1));
  CHECK(oracle::lct_bruteforce(blowup({5, 4}), 1, 10) == make_rational(1, 5));
  CHECK_THROWS_AS(oracle::lct_bruteforce(blowup({5, 4}), 1, 4), BoundTooSmallError);
}

TEST_CASE("oracle results are bound-stable") {
  for (const auto& w : {std::vector<Int>{2, 3}, {5, 4}, {3, 5}, {4, 7}}) {
    const WeightVector n = blowup(w);
    const Rational at_min = oracle::mld_bruteforce(n, n.max_entry()).value;
    CHECK(oracle::mld_bruteforce(n, n.max_entry() + 1).value == at_min);
    CHECK(oracle::mld_bruteforce(n, n.max_entry() + 4).value == at_min);
  }
  for (const auto& w : {std::vector<Int>{3, 1}, {2, -3}, {4, 3}}) {
    const WeightVector n = fibration(w);
    const Int b = n.max_abs_entry() + Int(n.dim());
    const Rational at_min = oracle::mld_prime_bruteforce(n, b).value;
    CHECK(oracle::mld_prime_bruteforce(n, b + 1).value == at_min);
    CHECK(oracle::mld_prime_bruteforce(n, b + 3).value == at_min);
  }
  const WeightVector n = blowup({2, 3});
  CHECK(oracle::lct_bruteforce(n, 2, 3) == oracle::lct_bruteforce(n, 2, 8));
}

TEST_CASE("oracle point evaluators match the engines on spot values") {
  CHECK(oracle::alpha_value({1, 1, 2}, blowup({10, 11, 19})) == make_rational(5, 11));
  CHECK(oracle::alpha_prime_value({1, 0}, fibration({3, 1})) == make_rational(2, 3));
  CHECK(oracle::alpha_prime_value({1, 1}, fibration({2, 1})) == Rational(1));
}
