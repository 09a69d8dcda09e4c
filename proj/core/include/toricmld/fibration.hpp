#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toricmld/lattice.hpp"

namespace toricmld {

/// Cone spanned by `rays`. `index` is the absolute determinant of the ray
/// matrix, i.e. the lattice index of the subgroup the rays generate.
struct Cone {
  std::vector<LatticeVector> rays;
  Int index;
};

/// Fan on the half-space m_1 >= 0 generated by the boundary vectors
/// e_2,...,e_d, u_0 = -(e_2+...+e_d) and the weight ray n (n_1 >= 1).
/// The boundary generators are kept in the order e_2,...,e_d,u_0; maximal
/// cone t is spanned by n and all boundary generators except generator t,
/// and boundary cone t is its face in the hyperplane m_1 = 0. Every maximal
/// cone has index n_1; the boundary cones are unimodular.
struct FibrationFan {
  WeightVector weight;
  std::vector<LatticeVector> generators;  // the d boundary generators
  std::vector<Cone> maximal_cones;        // d cones
  std::vector<Cone> boundary_cones;       // d cones (index taken in the hyperplane lattice)
};

FibrationFan build_fan(const WeightVector& n);

/// "e2".."ed" for t < d-1, "u0" for t = d-1.
std::string generator_name(std::size_t t, std::size_t dim);

/// Coefficients of m = a*n + sum b_i u_i over one maximal cone, where the
/// u_i are the boundary generators other than the dropped one, plus
/// value = a + sum b_i.
struct PrimeDecomposition {
  std::size_t dropped_generator = 0;       // position in generator order
  Rational ray_coeff;                      // a
  std::vector<Rational> generator_coeffs;  // on the retained generators, in generator order
  Rational value;
};

/// Evaluate the log discrepancy function of the fibration fan at m
/// (m nonzero, m_1 >= 0): find every maximal cone containing m by exact
/// linear solves, check that all of them agree on the value, and return the
/// decomposition with the smallest dropped-generator position.
PrimeDecomposition alpha_prime(const LatticeVector& m, const WeightVector& n);
PrimeDecomposition alpha_prime(const LatticeVector& m, const FibrationFan& fan);

struct MldPrimeReport {
  Rational value;  // in (0, 1]
  std::optional<LatticeVector> witness;
  std::optional<PrimeDecomposition> witness_decomposition;
};

/// min(1, min of alpha_prime over the nonzero half-open-box lattice points of
/// the d maximal cones). Per cone the box points sit at a = k/n_1 for
/// k = 1..n_1-1 with the remaining coefficients the unique representatives in
/// [0,1) solving the congruences; each candidate is verified by recomposition
/// and integrality. The boundary cones are unimodular and contribute nothing
/// below 1. Tie-break on (value, cone, k).
MldPrimeReport mld_prime(const WeightVector& n);

/// true iff mld_prime(n).value >= eps. Throws NonpositiveEpsilonError.
bool is_elc_prime(const WeightVector& n, const Rational& eps);

/// Multiplicity of the reduced central fibre in the pullback of the origin:
/// the first weight entry.
Int fiber_multiplicity(const WeightVector& n);

}  // namespace toricmld
