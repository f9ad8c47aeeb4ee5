#pragma once

// Sparse elements of V^{⊗k} for a fixed d-dimensional V (in practice V = H).
//
// Entries are keyed by a flat index with leg 0 most significant, kept sorted
// and free of zeros, so equal tensors have equal entry lists.

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qhopf/cyclotomic.hpp"
#include "qhopf/linalg.hpp"

namespace qhopf {

/// Maximum number of stored entries in any tensor (default 5e6).
void set_entry_budget(std::size_t budget);
std::size_t entry_budget();

/// Sparse vector over basis indices.
using SparseVec = std::vector<std::pair<std::uint32_t, CycNumber>>;

class SparseTensor {
 public:
  using Entry = std::pair<std::uint64_t, CycNumber>;

  SparseTensor() = default;
  SparseTensor(std::uint32_t legs, std::uint32_t dim) : legs_(legs), dim_(dim) {}

  /// Sorts, merges duplicates, drops zeros.
  static SparseTensor from_entries(std::uint32_t legs, std::uint32_t dim, std::vector<Entry> entries);
  static SparseTensor from_vector(const std::vector<CycNumber>& v);
  static SparseTensor from_sparse(std::uint32_t dim, const SparseVec& v);
  static SparseTensor basis(std::uint32_t dim, std::uint32_t i);
  /// A scalar as a 0-leg tensor.
  static SparseTensor scalar(std::uint32_t dim, const CycNumber& s);

  std::uint32_t legs() const { return legs_; }
  std::uint32_t dim() const { return dim_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  std::uint64_t flat(const std::vector<std::uint32_t>& idx) const;
  std::vector<std::uint32_t> unflat(std::uint64_t flat) const;
  std::uint32_t digit(std::uint64_t flat, std::uint32_t leg) const;

  CycNumber at(std::uint64_t flat) const;
  CycNumber at(const std::vector<std::uint32_t>& idx) const { return at(flat(idx)); }
  /// Value of a 0-leg tensor.
  CycNumber scalar_value() const;
  /// Dense coefficient vector of a 1-leg tensor.
  std::vector<CycNumber> to_vector() const;

  SparseTensor operator-() const;
  SparseTensor& operator+=(const SparseTensor& rhs);
  SparseTensor& operator-=(const SparseTensor& rhs);
  SparseTensor& operator*=(const CycNumber& s);

  friend SparseTensor operator+(SparseTensor a, const SparseTensor& b) { return a += b; }
  friend SparseTensor operator-(SparseTensor a, const SparseTensor& b) { return a -= b; }
  friend SparseTensor operator*(SparseTensor a, const CycNumber& s) { return a *= s; }
  friend SparseTensor operator*(const CycNumber& s, SparseTensor a) { return a *= s; }
  friend bool operator==(const SparseTensor& a, const SparseTensor& b);
  friend bool operator!=(const SparseTensor& a, const SparseTensor& b) { return !(a == b); }

 private:
  std::uint32_t legs_ = 0;
  std::uint32_t dim_ = 0;
  std::vector<Entry> entries_;
};

/// Accumulates terms keyed by flat index; dense storage for small index spaces.
class TensorAccumulator {
 public:
  TensorAccumulator(std::uint32_t legs, std::uint32_t dim);
  void add(std::uint64_t flat, const CycNumber& c);
  void add_product(std::uint64_t flat, const CycNumber& a, const CycNumber& b);
  SparseTensor finish();

 private:
  CycNumber& slot(std::uint64_t flat);

  std::uint32_t legs_;
  std::uint32_t dim_;
  bool dense_;
  std::vector<std::int32_t> dense_slot_;
  std::unordered_map<std::uint64_t, std::uint32_t> sparse_slot_;
  std::vector<std::pair<std::uint64_t, CycNumber>> values_;
};

/// a ⊗ b
SparseTensor outer(const SparseTensor& a, const SparseTensor& b);

/// Pads t with copies of `unit` (a 1-leg tensor) to target_legs legs, t occupying
/// legs [position, position + t.legs()).
SparseTensor embed_factor(const SparseTensor& t, std::uint32_t target_legs, std::uint32_t position,
                          const SparseTensor& unit);

/// Applies a linear map to one leg; column j of `map` is the image of basis j.
SparseTensor apply_leg_map(const SparseTensor& t, std::uint32_t leg, const Matrix& map);

/// Applies a linear functional to one leg, removing it.
SparseTensor contract_leg(const SparseTensor& t, std::uint32_t leg, const std::vector<CycNumber>& functional);

/// Result leg i is input leg perm[i].
SparseTensor permute_legs(const SparseTensor& t, const std::vector<std::uint32_t>& perm);

/// Number of flat indices d^k; throws BudgetExceeded on overflow.
std::uint64_t index_space(std::uint32_t dim, std::uint32_t legs);

}  // namespace qhopf
