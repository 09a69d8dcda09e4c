#pragma once

#include <string>
#include <vector>

#include "toricmld/rational.hpp"

namespace toricmld {

/// One row of the reference-value table: a named computation checked for
/// exact equality against its expected value.
struct ExampleResult {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

ExampleResult check_rational(std::string name, const Rational& actual,
                             const Rational& expected);
ExampleResult check_int(std::string name, const Int& actual, const Int& expected);
ExampleResult check_bool(std::string name, bool actual, bool expected);

/// Run the built-in table of exact reference values: closed-form families
/// and hand-checked cases for both invariants, the lc-threshold and
/// multiplicity identities, and the relative-class identities.
std::vector<ExampleResult> run_reference_examples();

bool all_passed(const std::vector<ExampleResult>& results);

}  // namespace toricmld
