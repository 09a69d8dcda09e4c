#include "toricmld/fibration.hpp"

#include <utility>

#include "linalg.hpp"

namespace toricmld {

namespace {

void check_fibration_mode(const WeightVector& n) {
  if (n.mode() != WeightMode::fibration)
    throw InvalidWeightError("fibration-mode weights required");
}

detail::IntMatrix column_matrix(const std::vector<const LatticeVector*>& cols,
                                std::size_t first_row) {
  const std::size_t rows = cols[0]->dim() - first_row;
  detail::IntMatrix a(rows, std::vector<Int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) a[i][j] = (*cols[j])[first_row + i];
  return a;
}

}  // namespace

std::string generator_name(std::size_t t, std::size_t dim) {
  if (t + 1 == dim) return "u0";
  return "e" + std::to_string(t + 2);
}

FibrationFan build_fan(const WeightVector& n) {
  check_fibration_mode(n);
  const std::size_t d = n.dim();

  FibrationFan fan{n, {}, {}, {}};
  fan.generators.reserve(d);
  for (std::size_t t = 0; t + 1 < d; ++t)
    fan.generators.push_back(LatticeVector::unit(d, t + 1));
  {
    std::vector<Int> u0(d, Int(-1));
    u0[0] = 0;
    fan.generators.push_back(LatticeVector(std::move(u0)));
  }

  for (std::size_t t = 0; t < d; ++t) {
    Cone maximal;
    maximal.rays.push_back(n.vec());
    Cone boundary;
    for (std::size_t s = 0; s < d; ++s) {
      if (s == t) continue;
      maximal.rays.push_back(fan.generators[s]);
      boundary.rays.push_back(fan.generators[s]);
    }
    std::vector<const LatticeVector*> cols;
    for (const LatticeVector& r : maximal.rays) cols.push_back(&r);
    maximal.index = abs(detail::determinant(column_matrix(cols, 0)));
    if (maximal.index != n[0])
      throw InternalConsistencyError("maximal cone index differs from n_1");

    cols.clear();
    for (const LatticeVector& r : boundary.rays) cols.push_back(&r);
    boundary.index = abs(detail::determinant(column_matrix(cols, 1)));

    fan.maximal_cones.push_back(std::move(maximal));
    fan.boundary_cones.push_back(std::move(boundary));
  }
  return fan;
}

PrimeDecomposition alpha_prime(const LatticeVector& m, const FibrationFan& fan) {
  const std::size_t d = fan.weight.dim();
  if (m.dim() != d)
    throw DimensionMismatchError("m has length " + std::to_string(m.dim()) +
                                 ", weights have length " + std::to_string(d));
  if (m.is_zero()) throw ZeroVectorError("m must be nonzero");
  if (m[0] < 0) throw OutsideSupportError("m_1 must be ≥ 0");

  std::optional<PrimeDecomposition> first;
  for (std::size_t t = 0; t < d; ++t) {
    const Cone& cone = fan.maximal_cones[t];
    detail::RatMatrix a(d, std::vector<Rational>(d));
    std::vector<Rational> b(d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) a[i][j] = Rational(cone.rays[j][i]);
      b[i] = Rational(m[i]);
    }
    std::vector<Rational> x = detail::solve_linear(std::move(a), std::move(b));
    bool inside = true;
    for (const Rational& c : x)
      if (c < 0) {
        inside = false;
        break;
      }
    if (!inside) continue;

    PrimeDecomposition dec;
    dec.dropped_generator = t;
    dec.ray_coeff = x[0];
    dec.value = x[0];
    for (std::size_t j = 1; j < d; ++j) {
      dec.value += x[j];
      dec.generator_coeffs.push_back(std::move(x[j]));
    }
    if (!first) {
      first = std::move(dec);
    } else if (dec.value != first->value) {
      throw InternalConsistencyError("containing cones disagree on the value at m=" +
                                     to_string(m));
    }
  }
  if (!first)
    throw InternalConsistencyError("no cone contains m=" + to_string(m));
  return *first;
}

PrimeDecomposition alpha_prime(const LatticeVector& m, const WeightVector& n) {
  return alpha_prime(m, build_fan(n));
}

MldPrimeReport mld_prime(const WeightVector& n) {
  const FibrationFan fan = build_fan(n);
  const std::size_t d = n.dim();
  const Int& n1 = n[0];

  std::optional<Rational> best;
  std::optional<LatticeVector> best_witness;

  for (std::size_t t = 0; t < d; ++t) {
    std::vector<const LatticeVector*> retained;
    for (std::size_t s = 0; s < d; ++s)
      if (s != t) retained.push_back(&fan.generators[s]);

    // Coefficients scale linearly with a: solve V w = -n' once in the
    // hyperplane coordinates, then the box step k uses a*w with a = k/n_1.
    detail::RatMatrix v(d - 1, std::vector<Rational>(d - 1));
    std::vector<Rational> rhs(d - 1);
    for (std::size_t i = 0; i + 1 < d; ++i) {
      for (std::size_t j = 0; j + 1 < d; ++j) v[i][j] = Rational((*retained[j])[i + 1]);
      rhs[i] = Rational(-n[i + 1]);
    }
    const std::vector<Rational> w = detail::solve_linear(std::move(v), std::move(rhs));

    for (Int k = 1; k < n1; ++k) {
      const Rational a = make_rational(k, n1);
      Rational value = a;
      std::vector<Rational> coeffs(d - 1);
      for (std::size_t j = 0; j + 1 < d; ++j) {
        const Rational full = a * w[j];
        coeffs[j] = full - Rational(floor_rational(full));
        if (coeffs[j] < 0 || coeffs[j] >= 1)
          throw InternalConsistencyError("box coefficient out of [0,1)");
        value += coeffs[j];
      }
      // Recompose and require integrality of every coordinate.
      std::vector<Int> mv(d);
      bool ok = true;
      for (std::size_t i = 0; i < d && ok; ++i) {
        Rational coord = a * Rational(n[i]);
        for (std::size_t j = 0; j + 1 < d; ++j)
          coord += coeffs[j] * Rational((*retained[j])[i]);
        if (denominator(coord) != 1) ok = false;
        else mv[i] = numerator(coord);
      }
      if (!ok || mv[0] != k)
        throw InternalConsistencyError("box candidate does not recompose integrally");
      if (!best || value < *best) {
        best = value;
        best_witness = LatticeVector(std::move(mv));
      }
    }
  }

  MldPrimeReport rep;
  if (best && *best <= 1) {
    rep.value = *best;
    rep.witness = std::move(best_witness);
    if (!is_primitive(*rep.witness))
      throw InternalConsistencyError("mld' witness is not primitive");
    rep.witness_decomposition = alpha_prime(*rep.witness, fan);
    if (rep.witness_decomposition->value != rep.value)
      throw InternalConsistencyError("mld' witness does not attain the reported value");
  } else {
    rep.value = 1;
  }
  return rep;
}

bool is_elc_prime(const WeightVector& n, const Rational& eps) {
  if (eps <= 0) throw NonpositiveEpsilonError("eps must be > 0");
  return mld_prime(n).value >= eps;
}

Int fiber_multiplicity(const WeightVector& n) {
  check_fibration_mode(n);
  return n[0];
}

}  // namespace toricmld
