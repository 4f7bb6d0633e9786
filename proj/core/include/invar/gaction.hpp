#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "invar/ffield.hpp"
#include "invar/linalg.hpp"
#include "invar/mpoly.hpp"

namespace invar {

inline constexpr std::size_t kDefaultClosureCap = 2'000'000;

/// Linear automorphism of V* given by the images of the basis: row i holds
/// the coordinates of g.x_i, so g.x_i = sum_j at(i, j) x_j.
class GroupElement {
 public:
  GroupElement(FieldPtr field, std::size_t n, std::vector<Coeff> entries);
  GroupElement(FieldPtr field, const linalg::Dense& rows);
  static GroupElement identity(FieldPtr field, std::size_t n);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return n_; }
  Coeff at(std::size_t i, std::size_t j) const noexcept { return m_[i * n_ + j]; }
  const std::vector<Coeff>& entries() const noexcept { return m_; }
  linalg::Dense rows() const;

  /// Composition: (g * h).x = g.(h.x). In matrix terms the product is H*G.
  friend GroupElement operator*(const GroupElement& g, const GroupElement& h);
  GroupElement inverse() const;

  bool is_identity() const noexcept;
  /// Row i equals x_i plus a combination of x_1..x_{i-1}.
  bool is_lower_unitriangular() const noexcept;
  /// (g - 1)^n = 0.
  bool is_unipotent() const;
  /// rank(g - 1).
  std::size_t displacement_rank() const;

  /// g.x_i as a polynomial of the given ring.
  Polynomial image_of_variable(const RingPtr& ring, std::size_t i) const;

  friend bool operator==(const GroupElement& a, const GroupElement& b) noexcept {
    return a.n_ == b.n_ && a.m_ == b.m_;
  }
  std::size_t hash() const noexcept;

 private:
  FieldPtr field_;
  std::size_t n_;
  std::vector<Coeff> m_;
};

/// Every element of a finite group, in breadth-first discovery order from the
/// identity, together with the generators it was built from.
struct GroupTable {
  std::vector<GroupElement> elements;
  std::vector<GroupElement> gens;

  std::size_t order() const noexcept { return elements.size(); }
  std::size_t dim() const noexcept { return elements.front().dim(); }
  const FieldPtr& field() const noexcept { return elements.front().field(); }
};

/// Breadth-first closure. Throws CapExceeded, NotAPGroup, DimensionMismatch.
/// An empty generator list needs the field and dimension of the trivial group.
GroupTable group_closure(std::span<const GroupElement> gens, std::size_t cap = kDefaultClosureCap);
GroupTable trivial_group(FieldPtr field, std::size_t n);

/// A subset of `candidates` generating the same group, chosen greedily in order.
std::vector<GroupElement> small_generating_set(std::span<const GroupElement> candidates,
                                               std::size_t cap = kDefaultClosureCap);

/// Graded algebra automorphism x_i -> g.x_i.
Polynomial act(const GroupElement& g, const Polynomial& f);

bool is_invariant(const Polynomial& f, std::span<const GroupElement> gens);

/// Sum of g.f over all elements.
Polynomial trace(const Polynomial& f, const GroupTable& group);

/// Product of the distinct images g.x_var.
Polynomial orbit_product(const RingPtr& ring, std::size_t var, const GroupTable& group);

struct Triangularization {
  /// Row i gives the new basis vector y_i in the old coordinates x.
  linalg::Dense basis_change;
  /// Generators rewritten in the new basis, all lower unitriangular.
  std::vector<GroupElement> generators;
  bool is_identity = true;
};

/// Finds a flag of V* stable under the generators by repeatedly extending with
/// a common fixed vector of the successive quotients. Throws NotUnipotent.
Triangularization triangularize(std::span<const GroupElement> gens);

/// Rewrites g in a new basis (rows of `change` are new basis vectors).
GroupElement conjugate(const GroupElement& g, const linalg::Dense& change);

struct PseudoReflectionReport {
  /// One flag per element of the table, in table order.
  std::vector<bool> is_reflection;
  std::size_t count = 0;
  /// Order of the subgroup generated by all pseudo-reflections.
  std::size_t generated_order = 1;
  bool generated_by_reflections = false;
};

PseudoReflectionReport pseudo_reflections(const GroupTable& group);

/// Restriction to x_1..x_m (well defined for lower unitriangular elements).
GroupElement restrict_to_prefix(const GroupElement& g, std::size_t m);

}  // namespace invar
