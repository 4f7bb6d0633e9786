#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "invar/ffield.hpp"

namespace invar {

inline constexpr std::size_t kMaxVars = 16;
using Exponent = std::uint16_t;

/// Exponent vector of fixed capacity; entries past the ring's variable count stay zero.
/// Variable indices are 0-based: index i is x_{i+1}.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::initializer_list<unsigned> exps);
  explicit Monomial(std::span<const unsigned> exps);

  static Monomial variable(std::size_t i, unsigned e = 1);

  Exponent operator[](std::size_t i) const noexcept { return e_[i]; }
  void set(std::size_t i, unsigned e);
  unsigned degree() const noexcept { return deg_; }
  bool is_one() const noexcept { return deg_ == 0; }

  bool divides(const Monomial& other) const noexcept;
  /// Requires divides(other); returns other / *this.
  Monomial quotient_of(const Monomial& other) const;
  bool coprime(const Monomial& other) const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.deg_ == b.deg_ && a.e_ == b.e_;
  }

  std::size_t hash() const noexcept;

 private:
  std::array<Exponent, kMaxVars> e_{};
  std::uint32_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Variables are ranked x_n > x_{n-1} > ... > x_1 in every order below, so that
/// x_j^d leads any homogeneous polynomial of k[x_1..x_j] containing it.
std::strong_ordering degrevlex_compare(const Monomial& a, const Monomial& b) noexcept;
std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) noexcept;

/// Order on trailing exponent vectors: a > b iff at the largest index where they
/// differ, a has the larger entry. Reproduces (0,..,0,1) > (0,..,1,0) > ... > (1,0,..,0).
std::strong_ordering trailing_revlex_compare(std::span<const unsigned> a, std::span<const unsigned> b);

/// Polynomial ring k[x_1..x_n] over a finite field.
class Ring {
 public:
  static std::shared_ptr<const Ring> create(FieldPtr field, std::size_t n,
                                            std::vector<std::string> names = {});

  Ring(FieldPtr field, std::size_t n, std::vector<std::string> names);

  const FieldPtr& field() const noexcept { return field_; }
  const Field& k() const noexcept { return *field_; }
  std::size_t nvars() const noexcept { return n_; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  friend bool operator==(const Ring& a, const Ring& b) noexcept {
    return a.n_ == b.n_ && *a.field_ == *b.field_;
  }

 private:
  FieldPtr field_;
  std::size_t n_;
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

struct Term {
  Monomial mono;
  Coeff coeff;
};

/// Sparse polynomial. Terms are kept sorted descending in degrevlex with no
/// zero coefficients, so equality is structural.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  /// Takes arbitrary terms; sorts, merges duplicates and drops zeros.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, Coeff c);
  static Polynomial variable(RingPtr ring, std::size_t i);
  static Polynomial monomial(RingPtr ring, const Monomial& m, Coeff c = 1);

  const RingPtr& ring() const noexcept { return ring_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Total degree; throws ZeroPolynomialDegree on the zero polynomial.
  unsigned degree() const;
  bool is_homogeneous() const noexcept;
  const Term& leading_term() const;
  Coeff coefficient(const Monomial& m) const noexcept;
  /// True iff every term only involves x_1..x_j (the subring S^{(j)}).
  bool in_prefix_subring(std::size_t j) const noexcept;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  Polynomial scaled(Coeff c) const;
  Polynomial times(const Monomial& m, Coeff c = 1) const;
  Polynomial pow(unsigned e) const;
  /// Divides by the leading coefficient.
  Polynomial monic() const;

  /// Ring homomorphism x_i -> images[i].
  Polynomial substitute(std::span<const Polynomial> images) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) noexcept;

  /// `2*x1^3*x2 + x3` style; extension field coefficients are written in `w`.
  std::string to_string() const;

 private:
  void check_ring(const Polynomial& other) const;
  Polynomial combine(const Polynomial& other, bool subtract) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Parses the text form; accepts + - * ^, parentheses, integers, `w` for the
/// field generator and variables x1..xn.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

/// Binomial coefficient reduced mod p via Lucas' theorem.
std::uint32_t binomial_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p) noexcept;

/// Hasse derivative: coefficient of t^order in f(x_var -> x_var + t).
Polynomial hasse_derivative(const Polynomial& f, std::size_t var, unsigned order);

/// Composite of Hasse derivatives Delta_{j+1}^{(a_{j+1})} o ... o Delta_n^{(a_n)} for
/// an exponent vector supported on variables with index >= prefix.
Polynomial hasse_composite(const Polynomial& f, std::size_t prefix, const Monomial& alpha);

/// Membership in (x_1..x_j)S: every term divisible by some x_i, i <= j.
bool monomial_ideal_member(const Polynomial& f, std::size_t j) noexcept;

/// All monomials of total degree d in n variables, descending degrevlex.
std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d);

}  // namespace invar
