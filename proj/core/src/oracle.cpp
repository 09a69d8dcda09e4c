#include "toricmld/oracle.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace toricmld::oracle {

namespace {

// Grid walk over [lo_i, hi_i] boxes, lexicographic with the last coordinate
// fastest. Returns false once the box is exhausted.
bool advance(std::vector<Int>& v, const std::vector<Int>& lo, const std::vector<Int>& hi) {
  for (std::size_t p = v.size(); p-- > 0;) {
    if (v[p] < hi[p]) {
      ++v[p];
      for (std::size_t q = p + 1; q < v.size(); ++q) v[q] = lo[q];
      return true;
    }
  }
  return false;
}

bool all_zero(const std::vector<Int>& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

// Cofactor-expansion determinant. The engine uses elimination; the oracle
// intentionally does not.
Int det_cofactor(const std::vector<std::vector<Int>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  if (n == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
  Int det = 0;
  std::vector<std::vector<Int>> minor(n - 1, std::vector<Int>(n - 1));
  for (std::size_t col = 0; col < n; ++col) {
    if (a[0][col] == 0) continue;
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t mj = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == col) continue;
        minor[i - 1][mj++] = a[i][j];
      }
    }
    const Int term = a[0][col] * det_cofactor(minor);
    det += (col % 2 == 0) ? term : -term;
  }
  return det;
}

// Best (dropped index, value) over all valid decompositions of m.
struct AlphaCandidate {
  std::size_t dropped = 0;  // 0-based
  Rational ray_coeff;
  std::vector<Rational> coeffs;
  Rational value;
};

std::optional<AlphaCandidate> best_alpha(const LatticeVector& m, const WeightVector& n) {
  std::optional<AlphaCandidate> best;
  for (std::size_t j = 0; j < n.dim(); ++j) {
    AlphaCandidate cand;
    cand.dropped = j;
    cand.ray_coeff = Rational(m[j]) / Rational(n[j]);
    cand.value = cand.ray_coeff;
    bool ok = true;
    for (std::size_t i = 0; i < n.dim() && ok; ++i) {
      if (i == j) continue;
      Rational b = Rational(m[i]) - cand.ray_coeff * Rational(n[i]);
      if (b < 0) {
        ok = false;
        break;
      }
      cand.value += b;
      cand.coeffs.push_back(std::move(b));
    }
    if (ok && (!best || cand.value < best->value)) best = std::move(cand);
  }
  return best;
}

// One maximal cone of the fibration fan, solved by Cramer's rule: the
// adjugate of the ray matrix is precomputed so membership of m reduces to
// sign checks of adj * m against det.
struct OracleCone {
  std::vector<std::vector<Int>> rays;  // d columns: n then retained boundary generators
  Int det;
  std::vector<std::vector<Int>> adj;  // adjugate of the ray matrix
};

std::vector<OracleCone> make_oracle_cones(const WeightVector& n) {
  const std::size_t d = n.dim();
  std::vector<std::vector<Int>> gens;  // e_2..e_d then u_0
  for (std::size_t t = 0; t + 1 < d; ++t) {
    std::vector<Int> e(d, Int(0));
    e[t + 1] = 1;
    gens.push_back(std::move(e));
  }
  {
    std::vector<Int> u0(d, Int(-1));
    u0[0] = 0;
    gens.push_back(std::move(u0));
  }

  std::vector<OracleCone> cones;
  for (std::size_t t = 0; t < d; ++t) {
    OracleCone cone;
    cone.rays.push_back(n.vec().entries());
    for (std::size_t s = 0; s < d; ++s)
      if (s != t) cone.rays.push_back(gens[s]);

    std::vector<std::vector<Int>> a(d, std::vector<Int>(d));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) a[i][j] = cone.rays[j][i];
    cone.det = det_cofactor(a);
    if (cone.det == 0) throw InternalConsistencyError("degenerate oracle cone");

    cone.adj.assign(d, std::vector<Int>(d));
    std::vector<std::vector<Int>> minor(d - 1, std::vector<Int>(d - 1));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t r = 0, mr = 0; r < d; ++r) {
          if (r == j) continue;
          for (std::size_t c = 0, mc = 0; c < d; ++c) {
            if (c == i) continue;
            minor[mr][mc++] = a[r][c];
          }
          ++mr;
        }
        const Int cof = det_cofactor(minor);
        cone.adj[i][j] = ((i + j) % 2 == 0) ? cof : -cof;
      }
    }
    cones.push_back(std::move(cone));
  }
  return cones;
}

struct PrimeCandidate {
  std::size_t cone = 0;
  std::vector<Rational> solution;  // a then retained coefficients
  Rational value;
};

std::optional<PrimeCandidate> best_alpha_prime(const std::vector<Int>& m,
                                               const std::vector<OracleCone>& cones) {
  const std::size_t d = m.size();
  std::optional<PrimeCandidate> best;
  for (std::size_t t = 0; t < cones.size(); ++t) {
    const OracleCone& cone = cones[t];
    std::vector<Int> numer(d, Int(0));
    bool inside = true;
    Int numer_sum = 0;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) numer[i] += cone.adj[i][j] * m[j];
      if ((cone.det > 0 && numer[i] < 0) || (cone.det < 0 && numer[i] > 0)) {
        inside = false;
        break;
      }
      numer_sum += numer[i];
    }
    if (!inside) continue;
    Rational value = make_rational(numer_sum, cone.det);
    if (!best || value < best->value) {
      PrimeCandidate cand;
      cand.cone = t;
      cand.value = std::move(value);
      for (std::size_t i = 0; i < d; ++i)
        cand.solution.push_back(make_rational(numer[i], cone.det));
      best = std::move(cand);
    }
  }
  return best;
}

}  // namespace

Rational alpha_value(const LatticeVector& m, const WeightVector& n) {
  if (n.mode() != WeightMode::blowup)
    throw InvalidWeightError("blowup-mode weights required");
  if (m.dim() != n.dim()) throw DimensionMismatchError("length mismatch");
  if (m.is_zero()) throw ZeroVectorError("m must be nonzero");
  if (!m.all_nonnegative()) throw OutsideSupportError("m must have nonnegative entries");
  auto best = best_alpha(m, n);
  if (!best) throw InternalConsistencyError("no decomposition at m=" + to_string(m));
  return best->value;
}

Rational alpha_prime_value(const LatticeVector& m, const WeightVector& n) {
  if (n.mode() != WeightMode::fibration)
    throw InvalidWeightError("fibration-mode weights required");
  if (m.dim() != n.dim()) throw DimensionMismatchError("length mismatch");
  if (m.is_zero()) throw ZeroVectorError("m must be nonzero");
  if (m[0] < 0) throw OutsideSupportError("m_1 must be ≥ 0");
  auto best = best_alpha_prime(m.entries(), make_oracle_cones(n));
  if (!best) throw InternalConsistencyError("no cone contains m=" + to_string(m));
  return best->value;
}

MldReport mld_bruteforce(const WeightVector& n, const Int& bound) {
  if (n.mode() != WeightMode::blowup)
    throw InvalidWeightError("blowup-mode weights required");
  if (bound < n.max_entry())
    throw BoundTooSmallError("bound must be ≥ the largest weight entry");

  const std::size_t d = n.dim();
  const std::vector<Int> lo(d, Int(0));
  const std::vector<Int> hi(d, bound);
  std::vector<Int> v = lo;

  std::optional<Rational> best;
  std::optional<LatticeVector> witness;
  std::optional<AlphaCandidate> witness_cand;
  do {
    if (all_zero(v)) continue;
    const LatticeVector m(v);
    auto cand = best_alpha(m, n);
    if (!cand) throw InternalConsistencyError("no decomposition at m=" + to_string(m));
    if (!best || cand->value < *best) {
      best = cand->value;
      witness = m;
      witness_cand = std::move(cand);
    }
  } while (advance(v, lo, hi));

  MldReport rep;
  rep.value = *best;
  rep.witness = std::move(witness);
  Decomposition dec;
  dec.dropped_index = witness_cand->dropped + 1;
  dec.ray_coeff = witness_cand->ray_coeff;
  dec.basis_coeffs = witness_cand->coeffs;
  dec.value = witness_cand->value;
  rep.witness_decomposition = std::move(dec);
  return rep;
}

MldPrimeReport mld_prime_bruteforce(const WeightVector& n, const Int& bound) {
  if (n.mode() != WeightMode::fibration)
    throw InvalidWeightError("fibration-mode weights required");
  const std::size_t d = n.dim();
  if (bound < n.max_abs_entry() + Int(d))
    throw BoundTooSmallError("bound must be ≥ max |n_i| + d");

  std::vector<Int> lo(d, -bound);
  std::vector<Int> hi(d, bound);
  lo[0] = 0;
  hi[0] = n[0];
  std::vector<Int> v = lo;

  const std::vector<OracleCone> cones = make_oracle_cones(n);
  std::optional<Rational> best;
  std::optional<LatticeVector> witness;
  std::optional<PrimeCandidate> witness_cand;
  do {
    if (all_zero(v)) continue;
    auto cand = best_alpha_prime(v, cones);
    if (!cand)
      throw InternalConsistencyError("no cone contains m=" + to_string(LatticeVector(v)));
    if (!best || cand->value < *best) {
      best = cand->value;
      witness = LatticeVector(v);
      witness_cand = std::move(cand);
    }
  } while (advance(v, lo, hi));

  MldPrimeReport rep;
  rep.value = *best;
  rep.witness = std::move(witness);
  PrimeDecomposition dec;
  dec.dropped_generator = witness_cand->cone;
  dec.ray_coeff = witness_cand->solution[0];
  for (std::size_t j = 1; j < d; ++j)
    dec.generator_coeffs.push_back(witness_cand->solution[j]);
  dec.value = witness_cand->value;
  rep.witness_decomposition = std::move(dec);
  return rep;
}

Rational lct_bruteforce(const WeightVector& n, std::size_t axis, const Int& bound) {
  if (n.mode() != WeightMode::blowup)
    throw InvalidWeightError("blowup-mode weights required");
  if (axis < 1 || axis > n.dim())
    throw IndexOutOfRangeError("hyperplane index out of range");
  if (bound < n.max_entry())
    throw BoundTooSmallError("bound must be ≥ the largest weight entry");

  const std::size_t d = n.dim();
  const std::vector<Int> lo(d, Int(0));
  const std::vector<Int> hi(d, bound);
  std::vector<Int> v = lo;

  std::optional<Rational> best;
  do {
    if (v[axis - 1] < 1) continue;
    const LatticeVector m(v);
    auto cand = best_alpha(m, n);
    if (!cand) throw InternalConsistencyError("no decomposition at m=" + to_string(m));
    Rational ratio = cand->value / Rational(v[axis - 1]);
    if (!best || ratio < *best) best = std::move(ratio);
  } while (advance(v, lo, hi));

  return *best;
}

}  // namespace toricmld::oracle
