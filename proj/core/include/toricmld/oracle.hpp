#pragma once

#include <cstddef>

#include "toricmld/fibration.hpp"
#include "toricmld/weighted_blowup.hpp"

// Brute-force reference implementations used by tests and by the CLI --verify
// flag. They share no code with the engines they guard: decomposition is
// redone from the definition (every dropped index tried; cone membership by
// Cramer's rule), and the search is a plain grid walk rather than the
// half-open-box generators. Runtime is exponential in d.
namespace toricmld::oracle {

/// Value of the blowup log discrepancy at m: minimum of a + sum b_i over
/// every dropped index with nonnegative coefficients.
Rational alpha_value(const LatticeVector& m, const WeightVector& n);

/// Value of the fibration log discrepancy at m: minimum over the maximal
/// cones containing m.
Rational alpha_prime_value(const LatticeVector& m, const WeightVector& n);

/// Minimum of alpha over all nonzero lattice m with 0 <= m_i <= bound.
/// Requires bound >= max n_i, which makes the result equal mld(n).
MldReport mld_bruteforce(const WeightVector& n, const Int& bound);

/// Minimum of alpha_prime over nonzero lattice m with 0 <= m_1 <= n_1 and
/// |m_i| <= bound for i >= 2. Requires bound >= max |n_i| + d.
MldPrimeReport mld_prime_bruteforce(const WeightVector& n, const Int& bound);

/// Minimum of alpha(m)/m_axis over nonzero lattice m with entries <= bound
/// and m_axis >= 1 (axis 1-based). Requires bound >= max n_i.
Rational lct_bruteforce(const WeightVector& n, std::size_t axis, const Int& bound);

}  // namespace toricmld::oracle
