#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "invar/mpoly.hpp"

namespace invar {

enum class OrderKind { lex, degrevlex };

struct MonomialOrder {
  OrderKind kind = OrderKind::degrevlex;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const noexcept {
    return kind == OrderKind::lex ? lex_compare(a, b) : degrevlex_compare(a, b);
  }
  bool greater(const Monomial& a, const Monomial& b) const noexcept {
    return compare(a, b) == std::strong_ordering::greater;
  }
};

/// Reduced Groebner basis: monic, no term of any element divisible by another
/// element's leading monomial. Elements are sorted by ascending leading monomial.
class GroebnerBasis {
 public:
  const RingPtr& ring() const noexcept { return ring_; }
  MonomialOrder order() const noexcept { return order_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  const std::vector<Monomial>& leading_monomials() const noexcept { return leads_; }
  const std::vector<Polynomial>& source() const noexcept { return source_; }
  bool is_unit() const noexcept { return leads_.size() == 1 && leads_.front().is_one(); }

 private:
  friend GroebnerBasis groebner(const RingPtr&, std::span<const Polynomial>, MonomialOrder);

  RingPtr ring_;
  MonomialOrder order_;
  std::vector<Polynomial> gens_;
  std::vector<Monomial> leads_;
  std::vector<Polynomial> source_;
};

/// Buchberger's algorithm with the coprime and chain criteria; pairs are
/// processed lowest lcm first (ties by the order, then by index) so the
/// output is reproducible. Throws ZeroGenerator / RingMismatch.
GroebnerBasis groebner(const RingPtr& ring, std::span<const Polynomial> gens, MonomialOrder order = {});
GroebnerBasis groebner(std::span<const Polynomial> gens, MonomialOrder order = {});

/// Fully reduced remainder of f modulo the basis.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

inline bool ideal_member(const Polynomial& f, const GroebnerBasis& gb) { return normal_form(f, gb).is_zero(); }

struct Colength {
  /// Number of standard monomials; empty when the staircase is unbounded.
  std::optional<std::uint64_t> count;
  /// Largest degree of a standard monomial (only meaningful when finite).
  unsigned socle_degree = 0;

  bool finite() const noexcept { return count.has_value(); }
};

Colength colength(const GroebnerBasis& gb);

/// Krull dimension of S/I read off the leading-term ideal.
std::size_t krull_dimension(const GroebnerBasis& gb);

/// True iff each list's generators reduce to zero modulo the other's basis.
/// Zero generators are ignored.
bool ideal_equal(std::span<const Polynomial> lhs, std::span<const Polynomial> rhs);

/// Minimal homogeneous generating subset (graded Nakayama): in each degree,
/// keeps the inputs that are independent modulo the ideal of lower degrees.
/// Input order decides which representatives survive. Throws NonHomogeneousInput.
std::vector<Polynomial> minimal_generators(std::span<const Polynomial> gens);

/// Minimal generator count equals height. Throws NonHomogeneousInput.
bool is_complete_intersection(std::span<const Polynomial> gens);

}  // namespace invar
