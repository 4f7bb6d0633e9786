#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "invar/ffield.hpp"

namespace invar::linalg {

/// Sparse vector over a finite field: strictly increasing indices, nonzero values.
struct SparseVec {
  std::vector<std::pair<std::uint32_t, Coeff>> entries;

  bool empty() const noexcept { return entries.empty(); }
  std::uint32_t lead() const { return entries.front().first; }
};

/// a + c*b
SparseVec axpy(const Field& k, const SparseVec& a, Coeff c, const SparseVec& b);
SparseVec scale(const Field& k, const SparseVec& a, Coeff c);

/// Basis of the kernel of the linear map sending the i-th domain basis vector
/// to images[i]. The basis is returned in reduced row echelon form with respect
/// to domain indices (pivot = smallest index, normalised to 1, zero in the
/// other rows' pivot columns), sorted by pivot.
std::vector<SparseVec> kernel(const Field& k, std::span<const SparseVec> images);

/// Reduced row echelon form of the span of `rows` (pivot = smallest index).
std::vector<SparseVec> rref(const Field& k, std::vector<SparseVec> rows);

/// Incremental echelon basis keyed by pivot; used for independence tests.
class Echelon {
 public:
  explicit Echelon(const Field& k) : k_(&k) {}

  /// Reduces v against the stored rows.
  SparseVec reduce(SparseVec v) const;
  /// Adds v when independent; returns whether it was.
  bool insert(SparseVec v);
  std::size_t rank() const noexcept { return rows_.size(); }
  /// Rows in pivot order, mutually reduced.
  std::vector<SparseVec> rows() const;

 private:
  const Field* k_;
  std::vector<std::pair<std::uint32_t, SparseVec>> rows_;  // sorted by pivot
};

/// Dense helpers for small matrices (group elements).
using Dense = std::vector<std::vector<Coeff>>;

std::size_t rank(const Field& k, Dense m);
/// Inverse of a square matrix; throws NotInvertible.
Dense inverse(const Field& k, const Dense& m);

}  // namespace invar::linalg
