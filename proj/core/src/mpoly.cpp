#include "invar/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "invar/errors.hpp"

namespace invar {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::initializer_list<unsigned> exps)
    : Monomial(std::span<const unsigned>(exps.begin(), exps.size())) {}

Monomial::Monomial(std::span<const unsigned> exps) {
  if (exps.size() > kMaxVars) {
    throw Error(ErrorCode::IndexOutOfRange, "too many variables for a monomial");
  }
  for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
}

Monomial Monomial::variable(std::size_t i, unsigned e) {
  Monomial m;
  m.set(i, e);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= kMaxVars) throw Error(ErrorCode::IndexOutOfRange, "variable index " + std::to_string(i));
  if (e > std::numeric_limits<Exponent>::max()) {
    throw Error(ErrorCode::ExponentOverflow, "exponent " + std::to_string(e));
  }
  deg_ = deg_ - e_[i] + e;
  e_[i] = static_cast<Exponent>(e);
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (deg_ > other.deg_) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial q;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (e_[i] > other.e_[i]) throw Error(ErrorCode::IndexOutOfRange, "monomial does not divide");
    q.e_[i] = static_cast<Exponent>(other.e_[i] - e_[i]);
  }
  q.deg_ = other.deg_ - deg_;
  return q;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (e_[i] != 0 && other.e_[i] != 0) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const unsigned s = unsigned{a.e_[i]} + b.e_[i];
    if (s > std::numeric_limits<Exponent>::max()) throw Error(ErrorCode::ExponentOverflow, "product");
    m.e_[i] = static_cast<Exponent>(s);
  }
  m.deg_ = a.deg_ + b.deg_;
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    m.e_[i] = std::max(a.e_[i], b.e_[i]);
    d += m.e_[i];
  }
  m.deg_ = d;
  return m;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (const auto x : e_) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

std::strong_ordering degrevlex_compare(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) noexcept {
  for (std::size_t i = kMaxVars; i-- > 0;) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering trailing_revlex_compare(std::span<const unsigned> a, std::span<const unsigned> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::LengthMismatch, "trailing vectors of different length");
  }
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Ring

std::shared_ptr<const Ring> Ring::create(FieldPtr field, std::size_t n, std::vector<std::string> names) {
  return std::make_shared<const Ring>(std::move(field), n, std::move(names));
}

Ring::Ring(FieldPtr field, std::size_t n, std::vector<std::string> names)
    : field_(std::move(field)), n_(n), names_(std::move(names)) {
  if (n == 0 || n > kMaxVars) {
    throw Error(ErrorCode::IndexOutOfRange, "ring needs 1.." + std::to_string(kMaxVars) + " variables");
  }
  if (names_.empty()) {
    for (std::size_t i = 0; i < n; ++i) names_.push_back("x" + std::to_string(i + 1));
  }
  if (names_.size() != n) throw Error(ErrorCode::LengthMismatch, "variable name count");
  auto sorted = names_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::ParseError, "duplicate variable names");
  }
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

bool term_greater(const Term& a, const Term& b) noexcept {
  return degrevlex_compare(a.mono, b.mono) == std::strong_ordering::greater;
}

void normalize(const Field& k, std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Term t = terms[i];
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].mono == t.mono) {
      t.coeff = k.add(t.coeff, terms[j].coeff);
      ++j;
    }
    if (t.coeff != 0) terms[out++] = t;
    i = j;
  }
  terms.resize(out);
}

}  // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  normalize(ring_->k(), terms_);
}

Polynomial Polynomial::constant(RingPtr ring, Coeff c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  if (i >= ring->nvars()) throw Error(ErrorCode::IndexOutOfRange, "variable " + std::to_string(i));
  return monomial(std::move(ring), Monomial::variable(i), 1);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, Coeff c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

unsigned Polynomial::degree() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomialDegree, "degree of the zero polynomial");
  return terms_.front().mono.degree();
}

bool Polynomial::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  const unsigned d = terms_.front().mono.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.mono.degree() == d; });
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomialDegree, "leading term of zero");
  return terms_.front();
}

Coeff Polynomial::coefficient(const Monomial& m) const noexcept {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{m, 0}, term_greater);
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

bool Polynomial::in_prefix_subring(std::size_t j) const noexcept {
  for (const auto& t : terms_) {
    for (std::size_t i = j; i < kMaxVars; ++i) {
      if (t.mono[i] != 0) return false;
    }
  }
  return true;
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (ring_ != other.ring_ && !(*ring_ == *other.ring_)) {
    throw Error(ErrorCode::RingMismatch, "polynomials from different rings");
  }
}

Polynomial Polynomial::combine(const Polynomial& other, bool subtract) const {
  check_ring(other);
  const Field& k = ring_->k();
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && term_greater(*a, *b))) {
      out.terms_.push_back(*a++);
    } else if (a == terms_.end() || term_greater(*b, *a)) {
      out.terms_.push_back({b->mono, subtract ? k.neg(b->coeff) : b->coeff});
      ++b;
    } else {
      const Coeff c = subtract ? k.sub(a->coeff, b->coeff) : k.add(a->coeff, b->coeff);
      if (c != 0) out.terms_.push_back({a->mono, c});
      ++a;
      ++b;
    }
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) { return *this = combine(other, false); }
Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this = combine(other, true); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  const Field& k = a.ring_->k();
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, k.mul(s.coeff, t.coeff)});
  }
  return Polynomial(a.ring_, std::move(prod));
}

Polynomial Polynomial::operator-() const { return scaled(ring_->k().neg(1)); }

Polynomial Polynomial::scaled(Coeff c) const {
  Polynomial out(ring_);
  if (c == 0) return out;
  const Field& k = ring_->k();
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.mono, k.mul(t.coeff, c)});
  return out;
}

Polynomial Polynomial::times(const Monomial& m, Coeff c) const {
  // Multiplying by a monomial preserves degrevlex order.
  Polynomial out(ring_);
  if (c == 0) return out;
  const Field& k = ring_->k();
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.mono * m, k.mul(t.coeff, c)});
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(ring_->k().inv(terms_.front().coeff));
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  const std::size_t n = ring_->nvars();
  if (images.size() != n) throw Error(ErrorCode::DimensionMismatch, "substitution needs one image per variable");
  if (terms_.empty()) return Polynomial(images.empty() ? ring_ : images[0].ring());
  const RingPtr& target = images[0].ring();
  const Field& k = target->k();
  // powers[i][e] = images[i]^e, filled lazily
  std::vector<std::vector<Polynomial>> powers(n);
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  std::vector<Term> acc;
  for (const auto& t : terms_) {
    Polynomial prod = constant(target, t.coeff);
    for (std::size_t i = 0; i < n; ++i) {
      if (t.mono[i] != 0) prod = prod * power(i, t.mono[i]);
    }
    acc.insert(acc.end(), prod.terms_.begin(), prod.terms_.end());
  }
  (void)k;
  return Polynomial(target, std::move(acc));
}

bool operator==(const Polynomial& a, const Polynomial& b) noexcept {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.ring_ != b.ring_ && !(*a.ring_ == *b.ring_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coeff != b.terms_[i].coeff || !(a.terms_[i].mono == b.terms_[i].mono)) return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const Field& k = ring_->k();
  const auto& names = ring_->names();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    std::string c = k.format(t.coeff);
    const bool compound = c.find('+') != std::string::npos;
    if (t.mono.is_one()) {
      os << (compound ? "(" + c + ")" : c);
      continue;
    }
    if (t.coeff != 1) os << (compound ? "(" + c + ")" : c) << '*';
    bool first_var = true;
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!first_var) os << '*';
      first_var = false;
      os << names[i];
      if (t.mono[i] > 1) os << '^' << t.mono[i];
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Text parser: expr := term (('+'|'-') term)* ; term := factor ('*' factor)* ;
// factor := unary ('^' int)? ; unary := '-' unary | atom ; atom := int | name | '(' expr ')'

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, std::string_view text) : ring_(ring), s_(text) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = unary();
    if (accept('^')) {
      skip();
      const std::uint64_t e = integer();
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    return atom();
  }

  std::uint64_t integer() {
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected integer");
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      if (v > (1ULL << 40)) fail("integer too large");
      ++pos_;
    }
    return v;
  }

  Polynomial atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::uint64_t v = integer();
      return Polynomial::constant(ring_, ring_->k().from_int(static_cast<std::int64_t>(v % ring_->k().characteristic())));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string_view name = s_.substr(start, pos_ - start);
      const auto& names = ring_->names();
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) return Polynomial::variable(ring_, i);
      }
      if (name == "w") {
        if (ring_->k().is_prime_field()) fail("'w' used over a prime field");
        return Polynomial::constant(ring_, ring_->k().generator());
      }
      if (name.size() > 1 && name[0] == 'x') {
        std::size_t idx = 0;
        for (std::size_t i = 1; i < name.size(); ++i) {
          if (!std::isdigit(static_cast<unsigned char>(name[i]))) fail("unknown variable");
          idx = idx * 10 + static_cast<std::size_t>(name[i] - '0');
        }
        if (idx >= 1 && idx <= ring_->nvars()) return Polynomial::variable(ring_, idx - 1);
      }
      pos_ = start;
      fail("unknown variable '" + std::string(name) + "'");
    }
    fail("unexpected character");
  }

  const RingPtr& ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) { return Parser(ring, text).parse(); }

// ---------------------------------------------------------------------------
// Hasse derivatives

std::uint32_t binomial_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p) noexcept {
  if (k > n) return 0;
  std::uint64_t result = 1;
  while (n > 0 || k > 0) {
    const std::uint64_t ni = n % p;
    const std::uint64_t ki = k % p;
    if (ki > ni) return 0;
    // small binomial C(ni, ki) mod p by direct multiplicative formula with inverses
    std::uint64_t num = 1;
    std::uint64_t den = 1;
    for (std::uint64_t i = 0; i < ki; ++i) {
      num = num * ((ni - i) % p) % p;
      den = den * ((i + 1) % p) % p;
    }
    // den is invertible because ki < p
    std::uint64_t inv = 1;
    std::uint64_t base = den;
    std::uint64_t e = p - 2;
    while (e > 0) {
      if (e & 1U) inv = inv * base % p;
      base = base * base % p;
      e >>= 1U;
    }
    result = result * (num * inv % p) % p;
    n /= p;
    k /= p;
  }
  return static_cast<std::uint32_t>(result);
}

Polynomial hasse_derivative(const Polynomial& f, std::size_t var, unsigned order) {
  const RingPtr& ring = f.ring();
  if (var >= ring->nvars()) throw Error(ErrorCode::IndexOutOfRange, "variable " + std::to_string(var));
  if (order == 0) return f;
  const Field& k = ring->k();
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    const unsigned e = t.mono[var];
    if (e < order) continue;
    const std::uint32_t b = binomial_mod(e, order, k.characteristic());
    if (b == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - order);
    out.push_back({m, k.mul(t.coeff, k.from_int(b))});
  }
  return Polynomial(ring, std::move(out));
}

Polynomial hasse_composite(const Polynomial& f, std::size_t prefix, const Monomial& alpha) {
  const std::size_t n = f.ring()->nvars();
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (alpha[i] != 0 && (i < prefix || i >= n)) {
      throw Error(ErrorCode::IndexOutOfRange, "derivation multi-index touches variable " + std::to_string(i + 1));
    }
  }
  Polynomial g = f;
  for (std::size_t v = n; v-- > prefix;) {
    if (alpha[v] != 0) g = hasse_derivative(g, v, alpha[v]);
  }
  return g;
}

bool monomial_ideal_member(const Polynomial& f, std::size_t j) noexcept {
  for (const auto& t : f.terms()) {
    bool divisible = false;
    for (std::size_t i = 0; i < j && i < kMaxVars; ++i) {
      if (t.mono[i] != 0) {
        divisible = true;
        break;
      }
    }
    if (!divisible) return false;
  }
  return true;
}

std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  Monomial cur;
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == n) {
      cur.set(i, left);
      out.push_back(cur);
      cur.set(i, 0);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      cur.set(i, e);
      rec(i + 1, left - e);
    }
    cur.set(i, 0);
  };
  if (n == 0) return out;
  rec(0, d);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return degrevlex_compare(a, b) == std::strong_ordering::greater;
  });
  return out;
}

}  // namespace invar
