#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "toricmld/rational.hpp"

namespace toricmld {

/// Integer vector with fixed length d >= 1. Immutable after construction.
class LatticeVector {
 public:
  explicit LatticeVector(std::vector<Int> entries);
  LatticeVector(std::initializer_list<Int> entries);

  static LatticeVector zero(std::size_t dim);
  static LatticeVector unit(std::size_t dim, std::size_t axis);  // axis 0-based

  std::size_t dim() const { return entries_.size(); }
  const Int& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Int>& entries() const { return entries_; }

  bool is_zero() const;
  bool all_nonnegative() const;

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;

 private:
  std::vector<Int> entries_;
};

/// gcd of the absolute values of the entries; 0 iff the vector is zero.
Int gcd_vector(const LatticeVector& v);

/// true iff gcd_vector(v) == 1. The zero vector is not primitive.
bool is_primitive(const LatticeVector& v);

/// Comma-separated entries, e.g. "1,1,2".
std::string to_string(const LatticeVector& v);

enum class WeightMode { blowup, fibration };

/// Weight vector (n_1,...,n_d), always primitive. Blowup mode requires every
/// entry >= 1. Fibration mode requires n_1 >= 1, entries 2..d arbitrary, and
/// d >= 2 (the boundary fan in the hyperplane needs at least one generator).
class WeightVector {
 public:
  WeightVector(LatticeVector entries, WeightMode mode);

  std::size_t dim() const { return entries_.dim(); }
  WeightMode mode() const { return mode_; }
  const Int& operator[](std::size_t i) const { return entries_[i]; }
  const LatticeVector& vec() const { return entries_; }

  Int min_entry() const;
  Int max_entry() const;
  Int max_abs_entry() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  LatticeVector entries_;
  WeightMode mode_;
};

}  // namespace toricmld
