#include "invar/gaction.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "invar/errors.hpp"

namespace invar {

GroupElement::GroupElement(FieldPtr field, std::size_t n, std::vector<Coeff> entries)
    : field_(std::move(field)), n_(n), m_(std::move(entries)) {
  if (m_.size() != n_ * n_) throw Error(ErrorCode::DimensionMismatch, "matrix entry count");
}

GroupElement::GroupElement(FieldPtr field, const linalg::Dense& rows) : field_(std::move(field)), n_(rows.size()) {
  m_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw Error(ErrorCode::DimensionMismatch, "matrix is not square");
    m_.insert(m_.end(), r.begin(), r.end());
  }
}

GroupElement GroupElement::identity(FieldPtr field, std::size_t n) {
  std::vector<Coeff> e(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
  return GroupElement(std::move(field), n, std::move(e));
}

linalg::Dense GroupElement::rows() const {
  linalg::Dense d(n_, std::vector<Coeff>(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) d[i][j] = at(i, j);
  }
  return d;
}

GroupElement operator*(const GroupElement& g, const GroupElement& h) {
  if (g.n_ != h.n_) throw Error(ErrorCode::DimensionMismatch, "composing elements of different dimension");
  const Field& k = *g.field_;
  const std::size_t n = g.n_;
  std::vector<Coeff> out(n * n, 0);
  // (g h).x_i = g.(sum_j H[i][j] x_j) = sum_j H[i][j] sum_l G[j][l] x_l
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Coeff hij = h.at(i, j);
      if (hij == 0) continue;
      for (std::size_t l = 0; l < n; ++l) {
        const Coeff gjl = g.at(j, l);
        if (gjl != 0) out[i * n + l] = k.add(out[i * n + l], k.mul(hij, gjl));
      }
    }
  }
  return GroupElement(g.field_, n, std::move(out));
}

GroupElement GroupElement::inverse() const { return GroupElement(field_, linalg::inverse(*field_, rows())); }

bool GroupElement::is_identity() const noexcept {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (at(i, j) != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

bool GroupElement::is_lower_unitriangular() const noexcept {
  for (std::size_t i = 0; i < n_; ++i) {
    if (at(i, i) != 1) return false;
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (at(i, j) != 0) return false;
    }
  }
  return true;
}

namespace {

linalg::Dense minus_identity(const GroupElement& g) {
  linalg::Dense d = g.rows();
  const Field& k = *g.field();
  for (std::size_t i = 0; i < g.dim(); ++i) d[i][i] = k.sub(d[i][i], 1);
  return d;
}

linalg::Dense matmul(const Field& k, const linalg::Dense& a, const linalg::Dense& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.empty() ? 0 : b[0].size();
  linalg::Dense c(n, std::vector<Coeff>(m, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < b.size(); ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] = k.add(c[i][j], k.mul(a[i][l], b[l][j]));
    }
  }
  return c;
}

}  // namespace

bool GroupElement::is_unipotent() const {
  const Field& k = *field_;
  const linalg::Dense n1 = minus_identity(*this);
  linalg::Dense acc = n1;
  for (std::size_t i = 1; i < n_; ++i) acc = matmul(k, acc, n1);
  return std::all_of(acc.begin(), acc.end(),
                     [](const auto& r) { return std::all_of(r.begin(), r.end(), [](Coeff c) { return c == 0; }); });
}

std::size_t GroupElement::displacement_rank() const { return linalg::rank(*field_, minus_identity(*this)); }

Polynomial GroupElement::image_of_variable(const RingPtr& ring, std::size_t i) const {
  if (ring->nvars() != n_) throw Error(ErrorCode::DimensionMismatch, "ring and group element dimensions differ");
  std::vector<Term> terms;
  for (std::size_t j = 0; j < n_; ++j) {
    if (at(i, j) != 0) terms.push_back({Monomial::variable(j), at(i, j)});
  }
  return Polynomial(ring, std::move(terms));
}

std::size_t GroupElement::hash() const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (const auto c : m_) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

namespace {

struct ElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept { return g.hash(); }
};

bool is_power_of(std::size_t n, std::uint32_t p) {
  while (n > 1 && n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

GroupTable trivial_group(FieldPtr field, std::size_t n) {
  GroupTable t;
  t.elements.push_back(GroupElement::identity(std::move(field), n));
  return t;
}

GroupTable group_closure(std::span<const GroupElement> gens, std::size_t cap) {
  if (gens.empty()) throw Error(ErrorCode::DimensionMismatch, "closure of an empty set needs trivial_group()");
  const std::size_t n = gens.front().dim();
  for (const auto& g : gens) {
    if (g.dim() != n || !(*g.field() == *gens.front().field())) {
      throw Error(ErrorCode::DimensionMismatch, "generators disagree on dimension or field");
    }
    (void)g.inverse();  // throws NotInvertible
  }
  GroupTable table;
  table.gens.assign(gens.begin(), gens.end());
  std::unordered_set<GroupElement, ElementHash> seen;
  const GroupElement id = GroupElement::identity(gens.front().field(), n);
  table.elements.push_back(id);
  seen.insert(id);
  for (std::size_t head = 0; head < table.elements.size(); ++head) {
    for (const auto& g : gens) {
      GroupElement next = table.elements[head] * g;
      if (seen.count(next)) continue;
      if (table.elements.size() >= cap) {
        throw Error(ErrorCode::CapExceeded, "group has more than " + std::to_string(cap) + " elements");
      }
      seen.insert(next);
      table.elements.push_back(std::move(next));
    }
  }
  if (!is_power_of(table.order(), gens.front().field()->characteristic())) {
    throw Error(ErrorCode::NotAPGroup, "order " + std::to_string(table.order()) + " is not a power of p");
  }
  return table;
}

std::vector<GroupElement> small_generating_set(std::span<const GroupElement> candidates, std::size_t cap) {
  std::vector<GroupElement> chosen;
  std::unordered_set<GroupElement, ElementHash> span;
  for (const auto& c : candidates) {
    if (c.is_identity() || span.count(c)) continue;
    chosen.push_back(c);
    const GroupTable t = group_closure(chosen, cap);
    span.clear();
    span.insert(t.elements.begin(), t.elements.end());
  }
  return chosen;
}

Polynomial act(const GroupElement& g, const Polynomial& f) {
  const RingPtr& ring = f.ring();
  if (ring->nvars() != g.dim()) throw Error(ErrorCode::DimensionMismatch, "action on a ring of another dimension");
  std::vector<Polynomial> images;
  images.reserve(g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) images.push_back(g.image_of_variable(ring, i));
  return f.substitute(images);
}

bool is_invariant(const Polynomial& f, std::span<const GroupElement> gens) {
  return std::all_of(gens.begin(), gens.end(), [&](const GroupElement& g) { return act(g, f) == f; });
}

Polynomial trace(const Polynomial& f, const GroupTable& group) {
  Polynomial sum(f.ring());
  for (const auto& g : group.elements) sum += act(g, f);
  return sum;
}

Polynomial orbit_product(const RingPtr& ring, std::size_t var, const GroupTable& group) {
  if (var >= ring->nvars()) throw Error(ErrorCode::IndexOutOfRange, "variable " + std::to_string(var));
  std::vector<Polynomial> orbit;
  for (const auto& g : group.elements) {
    Polynomial img = g.image_of_variable(ring, var);
    if (std::find(orbit.begin(), orbit.end(), img) == orbit.end()) orbit.push_back(std::move(img));
  }
  Polynomial prod = Polynomial::constant(ring, 1);
  for (const auto& l : orbit) prod = prod * l;
  return prod;
}

GroupElement conjugate(const GroupElement& g, const linalg::Dense& change) {
  const Field& k = *g.field();
  // g.y_i = sum_j B[i][j] g.x_j, coordinates in x are (B M)[i]; in y: (B M B^-1)[i].
  const linalg::Dense bm = matmul(k, change, g.rows());
  return GroupElement(g.field(), matmul(k, bm, linalg::inverse(k, change)));
}

Triangularization triangularize(std::span<const GroupElement> gens) {
  Triangularization out;
  if (gens.empty()) return out;
  const FieldPtr& field = gens.front().field();
  const Field& k = *field;
  const std::size_t n = gens.front().dim();
  for (const auto& g : gens) {
    if (g.dim() != n) throw Error(ErrorCode::DimensionMismatch, "generators disagree on dimension");
    if (!g.is_unipotent()) throw Error(ErrorCode::NotUnipotent, "generator has an eigenvalue other than 1");
  }

  // Flag built so far, kept in reduced echelon form (pivot = first nonzero coordinate).
  linalg::Echelon flag(k);
  linalg::Dense basis;
  std::vector<linalg::Dense> minus_one;
  for (const auto& g : gens) minus_one.push_back(minus_identity(g));

  auto to_sparse = [](const std::vector<Coeff>& v) {
    linalg::SparseVec s;
    for (std::uint32_t i = 0; i < v.size(); ++i) {
      if (v[i] != 0) s.entries.emplace_back(i, v[i]);
    }
    return s;
  };

  while (basis.size() < n) {
    // Domain vector e_c maps to the stacked reductions of (g - 1) e_c modulo the flag.
    // Columns are visited from x_n down to x_1 so the kernel echelon favours
    // vectors ending early, which keeps triangular input untouched.
    std::vector<linalg::SparseVec> images;
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t col = n - 1 - c;
      linalg::SparseVec stacked;
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        std::vector<Coeff> v(n);
        // (g - 1) applied to the linear form x_col: row col of (M - I)
        for (std::size_t j = 0; j < n; ++j) v[j] = minus_one[gi][col][j];
        const linalg::SparseVec red = flag.reduce(to_sparse(v));
        for (const auto& [idx, val] : red.entries) {
          stacked.entries.emplace_back(static_cast<std::uint32_t>(gi * n + idx), val);
        }
      }
      images.push_back(std::move(stacked));
    }
    const auto ker = linalg::kernel(k, images);
    // Candidates: kernel vectors (in reversed coordinates) not already in the flag.
    bool extended = false;
    for (auto it = ker.rbegin(); it != ker.rend() && !extended; ++it) {
      std::vector<Coeff> v(n, 0);
      for (const auto& [idx, val] : it->entries) v[n - 1 - idx] = val;
      linalg::SparseVec red = flag.reduce(to_sparse(v));
      if (red.empty()) continue;
      std::vector<Coeff> dense(n, 0);
      for (const auto& [idx, val] : red.entries) dense[idx] = val;
      // normalise the last nonzero coordinate to 1
      std::size_t last = n;
      while (last-- > 0 && dense[last] == 0) {
      }
      const Coeff inv = k.inv(dense[last]);
      for (auto& x : dense) x = k.mul(x, inv);
      flag.insert(to_sparse(dense));
      basis.push_back(std::move(dense));
      extended = true;
    }
    if (!extended) throw Error(ErrorCode::NotUnipotent, "no common fixed vector on a quotient");
  }

  out.basis_change = basis;
  for (std::size_t i = 0; i < n && out.is_identity; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (basis[i][j] != (i == j ? 1 : 0)) {
        out.is_identity = false;
        break;
      }
    }
  }
  for (const auto& g : gens) {
    GroupElement c = out.is_identity ? g : conjugate(g, basis);
    if (!c.is_lower_unitriangular()) throw Error(ErrorCode::NotUnipotent, "triangularization failed");
    out.generators.push_back(std::move(c));
  }
  return out;
}

PseudoReflectionReport pseudo_reflections(const GroupTable& group) {
  PseudoReflectionReport r;
  std::vector<GroupElement> refl;
  for (const auto& g : group.elements) {
    const bool flag = g.displacement_rank() == 1;
    r.is_reflection.push_back(flag);
    if (flag) refl.push_back(g);
  }
  r.count = refl.size();
  r.generated_order = refl.empty() ? 1 : group_closure(refl).order();
  r.generated_by_reflections = r.generated_order == group.order();
  return r;
}

GroupElement restrict_to_prefix(const GroupElement& g, std::size_t m) {
  if (m > g.dim()) throw Error(ErrorCode::IndexOutOfRange, "prefix longer than dimension");
  std::vector<Coeff> e;
  e.reserve(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) e.push_back(g.at(i, j));
  }
  return GroupElement(g.field(), m, std::move(e));
}

}  // namespace invar
