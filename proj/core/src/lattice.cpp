#include "toricmld/lattice.hpp"

#include <boost/multiprecision/integer.hpp>

#include <utility>

namespace toricmld {

LatticeVector::LatticeVector(std::vector<Int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw InputError("lattice vector needs at least one entry");
}

LatticeVector::LatticeVector(std::initializer_list<Int> entries)
    : LatticeVector(std::vector<Int>(entries)) {}

LatticeVector LatticeVector::zero(std::size_t dim) {
  return LatticeVector(std::vector<Int>(dim, Int(0)));
}

LatticeVector LatticeVector::unit(std::size_t dim, std::size_t axis) {
  if (axis >= dim) throw IndexOutOfRangeError("unit vector axis out of range");
  std::vector<Int> e(dim, Int(0));
  e[axis] = 1;
  return LatticeVector(std::move(e));
}

bool LatticeVector::is_zero() const {
  for (const Int& v : entries_)
    if (v != 0) return false;
  return true;
}

bool LatticeVector::all_nonnegative() const {
  for (const Int& v : entries_)
    if (v < 0) return false;
  return true;
}

Int gcd_vector(const LatticeVector& v) {
  Int g = 0;
  for (const Int& x : v.entries()) {
    g = boost::multiprecision::gcd(g, x);
    if (g == 1) break;
  }
  return g;  // gcd is taken on absolute values; 0 only for the zero vector
}

bool is_primitive(const LatticeVector& v) { return gcd_vector(v) == 1; }

std::string to_string(const LatticeVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out += ',';
    out += v[i].str();
  }
  return out;
}

WeightVector::WeightVector(LatticeVector entries, WeightMode mode)
    : entries_(std::move(entries)), mode_(mode) {
  if (mode_ == WeightMode::blowup) {
    for (std::size_t i = 0; i < entries_.dim(); ++i)
      if (entries_[i] < 1) throw InvalidWeightError("weights must be ≥ 1 in blowup mode");
  } else {
    if (entries_.dim() < 2)
      throw InvalidWeightError("fibration mode needs at least 2 weights");
    if (entries_[0] < 1)
      throw InvalidWeightError("first weight must be ≥ 1 in fibration mode");
  }
  if (!is_primitive(entries_))
    throw InvalidWeightError("weights must be primitive (gcd of entries = 1)");
}

Int WeightVector::min_entry() const {
  Int m = entries_[0];
  for (std::size_t i = 1; i < dim(); ++i)
    if (entries_[i] < m) m = entries_[i];
  return m;
}

Int WeightVector::max_entry() const {
  Int m = entries_[0];
  for (std::size_t i = 1; i < dim(); ++i)
    if (entries_[i] > m) m = entries_[i];
  return m;
}

Int WeightVector::max_abs_entry() const {
  Int m = abs(entries_[0]);
  for (std::size_t i = 1; i < dim(); ++i) {
    Int a = abs(entries_[i]);
    if (a > m) m = a;
  }
  return m;
}

}  // namespace toricmld
