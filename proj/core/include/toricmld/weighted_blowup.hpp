#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toricmld/lattice.hpp"

namespace toricmld {

/// Coefficients of m = a*n + sum_{i != j} b_i e_i with a, b_i >= 0, together
/// with value = a + sum b_i. The coefficients double as an order calculator:
/// a is the order of the exceptional divisor along the valuation m and b_i is
/// the order of the strict transform of the i-th coordinate hyperplane.
struct Decomposition {
  std::size_t dropped_index = 0;       // j, 1-based
  Rational ray_coeff;                  // a
  std::vector<Rational> basis_coeffs;  // b_i for i != j, ascending i
  Rational value;                      // a + sum b_i
};

/// Decompose m over the maximal cones of the star subdivision of the positive
/// orthant at the ray n. The valid dropped indices j are exactly the
/// minimisers of m_i/n_i; all of them yield the same value, which is verified
/// at runtime rather than assumed. Returns the decomposition for the smallest
/// valid j.
///
/// Throws ZeroVectorError for m = 0, DimensionMismatchError on length
/// mismatch, OutsideSupportError when m has a negative entry.
Decomposition decompose(const LatticeVector& m, const WeightVector& n);

/// Log discrepancy of the valuation m on the weighted blowup with weights n:
/// the piecewise-linear function that is 1 on e_1,...,e_d and on n, linear on
/// each maximal cone. Equals decompose(m, n).value.
Rational alpha(const LatticeVector& m, const WeightVector& n);

/// Minimal log discrepancy report. `witness` is a primitive lattice point
/// attaining `value`; it is absent exactly when the minimum 1 is attained
/// only at the ray generators.
struct MldReport {
  Rational value;  // in (0, 1]
  std::optional<LatticeVector> witness;
  std::optional<Decomposition> witness_decomposition;
};

/// min(1, min of alpha over the nonzero half-open-box lattice points of all
/// maximal cones). The box points of the cone dropping j are generated
/// cyclically: a = k/n_j for k = 1..n_j-1, m_j = k, m_i = ceil(a n_i); every
/// candidate is verified before use and a verification failure aborts with
/// InternalConsistencyError. Witnesses are tie-broken lexicographically on
/// (value, j, k).
MldReport mld(const WeightVector& n);

/// true iff mld(n).value >= eps. Throws NonpositiveEpsilonError for eps <= 0.
bool is_elc(const WeightVector& n, const Rational& eps);

/// lc threshold of the pullback of the coordinate hyperplane H_axis
/// (axis 1-based). The function alpha - c * ord(pullback of H_axis) is linear
/// on every maximal cone, so its nonnegativity only needs checking on the
/// rays: e_i has alpha 1 and order delta_{i,axis}, n has alpha 1 and order
/// n_axis. Hence the threshold is 1/n_axis.
Rational lct_hyperplane(const WeightVector& n, std::size_t axis);

/// Multiplicity of the exceptional divisor in the pullback of H_axis: n_axis.
Int pullback_multiplicity(const WeightVector& n, std::size_t axis);

/// Class of exceptional_coeff * T + sum_i strict_coeffs[i] * H_i~ in the
/// relative divisor class group over the base, which is generated by the
/// exceptional divisor T. Each pullback H_i~ + n_i T is trivial there, so the
/// class is exceptional_coeff - sum_i strict_coeffs[i] * n_i; two
/// combinations are relatively linearly equivalent iff these integers agree.
Int relative_class(const Int& exceptional_coeff, const LatticeVector& strict_coeffs,
                   const WeightVector& n);

}  // namespace toricmld
