#include "toricmld/weighted_blowup.hpp"

#include <utility>

namespace toricmld {

namespace {

void check_blowup_inputs(const LatticeVector& m, const WeightVector& n) {
  if (n.mode() != WeightMode::blowup)
    throw InvalidWeightError("blowup-mode weights required");
  if (m.dim() != n.dim())
    throw DimensionMismatchError("m has length " + std::to_string(m.dim()) +
                                 ", weights have length " + std::to_string(n.dim()));
  if (m.is_zero()) throw ZeroVectorError("m must be nonzero");
  if (!m.all_nonnegative())
    throw OutsideSupportError("m must have nonnegative entries");
}

Decomposition build_decomposition(const LatticeVector& m, const WeightVector& n,
                                  std::size_t j) {
  Decomposition dec;
  dec.dropped_index = j + 1;
  dec.ray_coeff = make_rational(m[j], n[j]);
  dec.value = dec.ray_coeff;
  dec.basis_coeffs.reserve(m.dim() - 1);
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (i == j) continue;
    Rational b = Rational(m[i]) - dec.ray_coeff * Rational(n[i]);
    if (b < 0) throw InternalConsistencyError("negative coefficient for a valid dropped index");
    dec.value += b;
    dec.basis_coeffs.push_back(std::move(b));
  }
  return dec;
}

}  // namespace

Decomposition decompose(const LatticeVector& m, const WeightVector& n) {
  check_blowup_inputs(m, n);
  const std::size_t d = m.dim();

  // b_i >= 0  <=>  m_i n_j >= m_j n_i, so the valid j are the minimisers of
  // m_i/n_i. Compare by cross-multiplication to stay in integers.
  std::vector<std::size_t> valid;
  for (std::size_t j = 0; j < d; ++j) {
    bool ok = true;
    for (std::size_t i = 0; i < d && ok; ++i)
      if (m[i] * n[j] < m[j] * n[i]) ok = false;
    if (ok) valid.push_back(j);
  }
  if (valid.empty())
    throw InternalConsistencyError("no valid dropped index for m=" + to_string(m));

  Decomposition first = build_decomposition(m, n, valid[0]);
  for (std::size_t k = 1; k < valid.size(); ++k) {
    if (build_decomposition(m, n, valid[k]).value != first.value)
      throw InternalConsistencyError("dropped indices disagree on the value at m=" +
                                     to_string(m));
  }
  return first;
}

Rational alpha(const LatticeVector& m, const WeightVector& n) {
  return decompose(m, n).value;
}

MldReport mld(const WeightVector& n) {
  if (n.mode() != WeightMode::blowup)
    throw InvalidWeightError("blowup-mode weights required");
  const std::size_t d = n.dim();

  std::optional<Rational> best;
  std::optional<LatticeVector> best_witness;

  for (std::size_t j = 0; j < d; ++j) {
    const Int& nj = n[j];
    for (Int k = 1; k < nj; ++k) {
      const Rational a = make_rational(k, nj);
      std::vector<Int> mv(d);
      mv[j] = k;
      Rational value = a;
      for (std::size_t i = 0; i < d; ++i) {
        if (i == j) continue;
        mv[i] = ceil_div(k * n[i], nj);
        Rational b = Rational(mv[i]) - a * Rational(n[i]);
        if (b < 0 || b >= 1)
          throw InternalConsistencyError("box coefficient out of [0,1)");
        value += b;
      }
      // Recomposition check: the dropped coordinate must be hit exactly.
      if (Rational(mv[j]) != a * Rational(nj))
        throw InternalConsistencyError("box candidate does not recompose");
      if (!best || value < *best) {
        best = value;
        best_witness = LatticeVector(std::move(mv));
      }
    }
  }

  MldReport rep;
  if (best && *best <= 1) {
    rep.value = *best;
    rep.witness = std::move(best_witness);
    if (!is_primitive(*rep.witness))
      throw InternalConsistencyError("mld witness is not primitive");
    rep.witness_decomposition = decompose(*rep.witness, n);
    if (rep.witness_decomposition->value != rep.value)
      throw InternalConsistencyError("mld witness does not attain the reported value");
  } else {
    rep.value = 1;  // attained at the ray generators only
  }
  return rep;
}

bool is_elc(const WeightVector& n, const Rational& eps) {
  if (eps <= 0) throw NonpositiveEpsilonError("eps must be > 0");
  return mld(n).value >= eps;
}

Rational lct_hyperplane(const WeightVector& n, std::size_t axis) {
  if (n.mode() != WeightMode::blowup)
    throw InvalidWeightError("blowup-mode weights required");
  if (axis < 1 || axis > n.dim())
    throw IndexOutOfRangeError("hyperplane index out of range");
  return make_rational(1, n[axis - 1]);
}

Int pullback_multiplicity(const WeightVector& n, std::size_t axis) {
  if (n.mode() != WeightMode::blowup)
    throw InvalidWeightError("blowup-mode weights required");
  if (axis < 1 || axis > n.dim())
    throw IndexOutOfRangeError("hyperplane index out of range");
  return n[axis - 1];
}

Int relative_class(const Int& exceptional_coeff, const LatticeVector& strict_coeffs,
                   const WeightVector& n) {
  if (n.mode() != WeightMode::blowup)
    throw InvalidWeightError("blowup-mode weights required");
  if (strict_coeffs.dim() != n.dim())
    throw DimensionMismatchError("coefficient vector has length " +
                                 std::to_string(strict_coeffs.dim()) +
                                 ", weights have length " + std::to_string(n.dim()));
  Int cls = exceptional_coeff;
  for (std::size_t i = 0; i < n.dim(); ++i) cls -= strict_coeffs[i] * n[i];
  return cls;
}

}  // namespace toricmld
