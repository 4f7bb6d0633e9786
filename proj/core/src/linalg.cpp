#include "invar/linalg.hpp"

#include <algorithm>
#include <map>

#include "invar/errors.hpp"

namespace invar::linalg {

SparseVec axpy(const Field& k, const SparseVec& a, Coeff c, const SparseVec& b) {
  if (c == 0) return a;
  SparseVec out;
  out.entries.reserve(a.entries.size() + b.entries.size());
  auto x = a.entries.begin();
  auto y = b.entries.begin();
  while (x != a.entries.end() || y != b.entries.end()) {
    if (y == b.entries.end() || (x != a.entries.end() && x->first < y->first)) {
      out.entries.push_back(*x++);
    } else if (x == a.entries.end() || y->first < x->first) {
      out.entries.emplace_back(y->first, k.mul(c, y->second));
      ++y;
    } else {
      const Coeff v = k.add(x->second, k.mul(c, y->second));
      if (v != 0) out.entries.emplace_back(x->first, v);
      ++x;
      ++y;
    }
  }
  return out;
}

SparseVec scale(const Field& k, const SparseVec& a, Coeff c) {
  SparseVec out;
  if (c == 0) return out;
  out.entries.reserve(a.entries.size());
  for (const auto& [i, v] : a.entries) out.entries.emplace_back(i, k.mul(v, c));
  return out;
}

std::vector<SparseVec> kernel(const Field& k, std::span<const SparseVec> images) {
  // Column elimination: each stored pivot pairs a reduced image with the
  // combination of domain vectors producing it.
  struct Pivot {
    SparseVec image;
    SparseVec combo;
  };
  std::map<std::uint32_t, Pivot> pivots;
  std::vector<SparseVec> ker;
  for (std::uint32_t i = 0; i < images.size(); ++i) {
    SparseVec v = images[i];
    SparseVec c;
    c.entries.emplace_back(i, 1);
    while (!v.empty()) {
      auto it = pivots.find(v.lead());
      if (it == pivots.end()) break;
      const Coeff f = k.neg(v.entries.front().second);
      v = axpy(k, v, f, it->second.image);
      c = axpy(k, c, f, it->second.combo);
    }
    if (v.empty()) {
      ker.push_back(std::move(c));
    } else {
      const Coeff inv = k.inv(v.entries.front().second);
      const std::uint32_t lead = v.lead();
      pivots.emplace(lead, Pivot{scale(k, v, inv), scale(k, c, inv)});
    }
  }
  return rref(k, std::move(ker));
}

std::vector<SparseVec> rref(const Field& k, std::vector<SparseVec> rows) {
  Echelon ech(k);
  for (auto& r : rows) ech.insert(std::move(r));
  return ech.rows();
}

SparseVec Echelon::reduce(SparseVec v) const {
  // Eliminate every entry of v that sits in a pivot column.
  std::size_t pos = 0;
  while (pos < v.entries.size()) {
    const std::uint32_t idx = v.entries[pos].first;
    auto it = std::lower_bound(rows_.begin(), rows_.end(), idx,
                               [](const auto& r, std::uint32_t x) { return r.first < x; });
    if (it != rows_.end() && it->first == idx) {
      const Coeff f = k_->neg(v.entries[pos].second);
      v = axpy(*k_, v, f, it->second);
      // entries before pos are unchanged since pivot rows are zero left of their pivot
      // and zero in other pivot columns
      continue;
    }
    ++pos;
  }
  return v;
}

bool Echelon::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const Coeff inv = k_->inv(v.entries.front().second);
  v = scale(*k_, v, inv);
  const std::uint32_t piv = v.lead();
  // Clear the new pivot column from existing rows.
  for (auto& [p, row] : rows_) {
    auto it = std::lower_bound(row.entries.begin(), row.entries.end(), piv,
                               [](const auto& e, std::uint32_t x) { return e.first < x; });
    if (it != row.entries.end() && it->first == piv) {
      row = axpy(*k_, row, k_->neg(it->second), v);
    }
  }
  auto at = std::lower_bound(rows_.begin(), rows_.end(), piv,
                             [](const auto& r, std::uint32_t x) { return r.first < x; });
  rows_.insert(at, {piv, std::move(v)});
  return true;
}

std::vector<SparseVec> Echelon::rows() const {
  std::vector<SparseVec> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.second);
  return out;
}

std::size_t rank(const Field& k, Dense m) {
  std::size_t r = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    const Coeff inv = k.inv(m[r][c]);
    for (auto& x : m[r]) x = k.mul(x, inv);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Coeff f = m[i][c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) m[i][j] = k.sub(m[i][j], k.mul(f, m[r][j]));
    }
    ++r;
  }
  return r;
}

Dense inverse(const Field& k, const Dense& m) {
  const std::size_t n = m.size();
  Dense a = m;
  Dense inv(n, std::vector<Coeff>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw Error(ErrorCode::DimensionMismatch, "matrix is not square");
    inv[i][i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw Error(ErrorCode::NotInvertible, "singular matrix");
    std::swap(a[c], a[piv]);
    std::swap(inv[c], inv[piv]);
    const Coeff s = k.inv(a[c][c]);
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] = k.mul(a[c][j], s);
      inv[c][j] = k.mul(inv[c][j], s);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Coeff f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] = k.sub(a[i][j], k.mul(f, a[c][j]));
        inv[i][j] = k.sub(inv[i][j], k.mul(f, inv[c][j]));
      }
    }
  }
  return inv;
}

}  // namespace invar::linalg
