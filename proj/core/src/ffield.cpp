#include "invar/ffield.hpp"

#include <algorithm>
#include <sstream>

#include "invar/errors.hpp"

namespace invar {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients mod p, low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m over F_p.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + p - (lead * m[i]) % p) % p;
    }
    trim(a);
  }
  return a;
}

}  // namespace

bool is_prime(std::uint32_t n) noexcept {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic_poly) {
  Poly f(monic_poly.begin(), monic_poly.end());
  for (auto& c : f) c %= p;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t k = f.size() - 1;
  // Try every monic candidate factor of degree 1..k/2.
  for (std::size_t d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::shared_ptr<const Field> Field::create(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  return std::make_shared<const Field>(p, std::move(modulus));
}

Field::Field(std::uint32_t p, std::vector<std::uint32_t> modulus) : p_(p), k_(1), q_(p) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
  }
  if (!modulus.empty()) {
    for (auto& c : modulus) c %= p;
    trim(modulus);
    if (modulus.size() < 3 || modulus.back() != 1) {
      throw Error(ErrorCode::BadModulus, "extension modulus must be monic of degree >= 2");
    }
    k_ = static_cast<unsigned>(modulus.size() - 1);
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k_; ++i) {
      q *= p;
      if (q > kMaxFieldOrder) {
        throw Error(ErrorCode::FieldTooLarge, "field order exceeds " + std::to_string(kMaxFieldOrder));
      }
    }
    if (!is_irreducible(p, modulus)) {
      throw Error(ErrorCode::ReducibleModulus, "modulus factors over F_" + std::to_string(p));
    }
    q_ = static_cast<std::uint32_t>(q);
    modulus_ = std::move(modulus);
  }
  if (q_ > kMaxFieldOrder) {
    throw Error(ErrorCode::FieldTooLarge, "field order exceeds " + std::to_string(kMaxFieldOrder));
  }

  add_.resize(std::size_t{q_} * q_);
  neg_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    const auto ca = coords(static_cast<Coeff>(a));
    std::vector<std::int64_t> n(k_);
    for (unsigned i = 0; i < k_; ++i) n[i] = (p_ - ca[i]) % p_;
    neg_[a] = from_coords(n);
    for (std::uint32_t b = 0; b < q_; ++b) {
      const auto cb = coords(static_cast<Coeff>(b));
      std::vector<std::int64_t> s(k_);
      for (unsigned i = 0; i < k_; ++i) s[i] = (ca[i] + cb[i]) % p_;
      add_[index(static_cast<Coeff>(a), static_cast<Coeff>(b))] = from_coords(s);
    }
  }

  // Log/exp tables from a primitive element.
  log_.assign(q_, 0);
  exp_.assign(2 * std::size_t{q_}, 0);
  for (std::uint32_t cand = (q_ == 2 ? 1 : 2); cand < q_; ++cand) {
    Coeff x = 1;
    std::uint32_t ord = 0;
    do {
      x = mul_slow(x, static_cast<Coeff>(cand));
      ++ord;
    } while (x != 1 && ord < q_);
    if (ord != q_ - 1) continue;
    x = 1;
    for (std::uint32_t i = 0; i < 2 * (q_ - 1); ++i) {
      exp_[i] = x;
      if (i < q_ - 1) log_[x] = i;
      x = mul_slow(x, static_cast<Coeff>(cand));
    }
    break;
  }
}

Coeff Field::mul_slow(Coeff a, Coeff b) const {
  const auto ca = coords(a);
  const auto cb = coords(b);
  Poly prod(2 * k_, 0);
  for (unsigned i = 0; i < k_; ++i) {
    for (unsigned j = 0; j < k_; ++j) {
      prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
    }
  }
  if (k_ > 1) prod = poly_mod(prod, modulus_, p_);
  prod.resize(k_);
  std::vector<std::int64_t> out(prod.begin(), prod.end());
  return from_coords(out);
}

Coeff Field::inv(Coeff a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Coeff Field::div(Coeff a, Coeff b) const { return mul(a, inv(b)); }

Coeff Field::pow(Coeff a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(std::uint64_t{log_[a]} * (e % (q_ - 1))) % (q_ - 1)];
}

Coeff Field::from_int(std::int64_t v) const noexcept {
  const std::int64_t p = p_;
  return static_cast<Coeff>(((v % p) + p) % p);
}

Coeff Field::from_coords(std::span<const std::int64_t> coords) const {
  if (coords.size() > k_) {
    throw Error(ErrorCode::LengthMismatch, "element has more coordinates than the extension degree");
  }
  std::uint32_t code = 0;
  std::uint32_t scale = 1;
  const std::int64_t p = p_;
  for (const auto c : coords) {
    code += static_cast<std::uint32_t>(((c % p) + p) % p) * scale;
    scale *= p_;
  }
  return static_cast<Coeff>(code);
}

std::vector<std::uint32_t> Field::coords(Coeff a) const {
  std::vector<std::uint32_t> out(k_);
  std::uint32_t v = a;
  for (unsigned i = 0; i < k_; ++i) {
    out[i] = v % p_;
    v /= p_;
  }
  return out;
}

std::string Field::format(Coeff a) const {
  if (k_ == 1) return std::to_string(a);
  const auto c = coords(a);
  std::ostringstream os;
  bool first = true;
  for (unsigned i = k_; i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c[i];
      continue;
    }
    if (c[i] != 1) os << c[i] << '*';
    os << 'w';
    if (i > 1) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

FieldElement FieldElement::from_coords(FieldPtr field, std::span<const std::int64_t> coords) {
  const Coeff c = field->from_coords(coords);
  return {std::move(field), c};
}

FieldElement FieldElement::inverse() const { return {field_, field_->inv(code_)}; }

FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
  if (!(*a.field() == *b.field())) {
    throw Error(ErrorCode::FieldMismatch, "operands live in different fields");
  }
  const Field& f = *a.field();
  switch (op) {
    case ArithOp::add: return {a.field(), f.add(a.code(), b.code())};
    case ArithOp::sub: return {a.field(), f.sub(a.code(), b.code())};
    case ArithOp::mul: return {a.field(), f.mul(a.code(), b.code())};
    case ArithOp::div: return {a.field(), f.div(a.code(), b.code())};
  }
  return a;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) { return arith(a, b, ArithOp::add); }
FieldElement operator-(const FieldElement& a, const FieldElement& b) { return arith(a, b, ArithOp::sub); }
FieldElement operator*(const FieldElement& a, const FieldElement& b) { return arith(a, b, ArithOp::mul); }
FieldElement operator/(const FieldElement& a, const FieldElement& b) { return arith(a, b, ArithOp::div); }

}  // namespace invar
