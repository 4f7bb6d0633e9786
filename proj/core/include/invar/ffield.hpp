#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace invar {

/// Field elements are stored as small integer codes: the element
/// c_0 + c_1 t + ... + c_{k-1} t^{k-1} has code c_0 + c_1 p + ... + c_{k-1} p^{k-1}.
/// Zero is code 0 and one is code 1 in every field.
using Coeff = std::uint16_t;

/// Largest field order accepted; arithmetic is table driven.
inline constexpr std::uint32_t kMaxFieldOrder = 1024;

/// F_p or F_{p^k} = F_p[t]/(modulus). Immutable once created.
class Field {
 public:
  /// Builds F_p (empty modulus) or F_p[t]/(modulus). The modulus is a
  /// coefficient list, low degree first, monic of degree >= 2 and
  /// irreducible over F_p.
  static std::shared_ptr<const Field> create(std::uint32_t p,
                                             std::vector<std::uint32_t> modulus = {});

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  std::uint32_t order() const noexcept { return q_; }
  bool is_prime_field() const noexcept { return k_ == 1; }
  /// Empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Coeff add(Coeff a, Coeff b) const noexcept { return add_[index(a, b)]; }
  Coeff neg(Coeff a) const noexcept { return neg_[a]; }
  Coeff sub(Coeff a, Coeff b) const noexcept { return add_[index(a, neg_[b])]; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Coeff inv(Coeff a) const;
  Coeff div(Coeff a, Coeff b) const;
  Coeff pow(Coeff a, std::uint64_t e) const noexcept;

  /// Image of an integer under Z -> F_p.
  Coeff from_int(std::int64_t v) const noexcept;
  /// Coordinates in the power basis; shorter lists are zero padded.
  Coeff from_coords(std::span<const std::int64_t> coords) const;
  std::vector<std::uint32_t> coords(Coeff a) const;
  /// Residue class of t. Prime fields have no generator; 1 is returned.
  Coeff generator() const noexcept { return k_ == 1 ? Coeff{1} : static_cast<Coeff>(p_); }

  /// Integers print as-is; extension elements as polynomials in `w`.
  std::string format(Coeff a) const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.p_ == b.p_ && a.modulus_ == b.modulus_;
  }

  Field(std::uint32_t p, std::vector<std::uint32_t> modulus);

 private:
  std::size_t index(Coeff a, Coeff b) const noexcept { return std::size_t{a} * q_ + b; }
  Coeff mul_slow(Coeff a, Coeff b) const;

  std::uint32_t p_;
  unsigned k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Coeff> add_;
  std::vector<Coeff> neg_;
  std::vector<std::uint32_t> log_;
  std::vector<Coeff> exp_;  // doubled so log sums need no reduction
};

using FieldPtr = std::shared_ptr<const Field>;

/// Same as Field::create.
inline FieldPtr field_create(std::uint32_t p, std::vector<std::uint32_t> modulus = {}) {
  return Field::create(p, std::move(modulus));
}

bool is_prime(std::uint32_t n) noexcept;

/// Irreducibility over F_p by exhaustive search for monic factors of degree <= k/2.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic_poly);

/// Value type pairing a code with its field; arithmetic checks field agreement.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Coeff code) : field_(std::move(field)), code_(code) {}
  static FieldElement from_coords(FieldPtr field, std::span<const std::int64_t> coords);

  const FieldPtr& field() const noexcept { return field_; }
  Coeff code() const noexcept { return code_; }
  std::vector<std::uint32_t> coeffs() const { return field_->coords(code_); }
  bool is_zero() const noexcept { return code_ == 0; }

  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const { return {field_, field_->pow(code_, e)}; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const { return {field_, field_->neg(code_)}; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
    return a.code_ == b.code_ && *a.field_ == *b.field_;
  }

  std::string to_string() const { return field_->format(code_); }

 private:
  FieldPtr field_;
  Coeff code_;
};

enum class ArithOp { add, sub, mul, div };

FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op);

}  // namespace invar
