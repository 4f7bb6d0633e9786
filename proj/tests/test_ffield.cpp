#include <doctest.h>

#include "invar/errors.hpp"
#include "invar/ffield.hpp"
#include "support/oracles.hpp"

using namespace invar;

namespace {

struct FieldCase {
  std::uint32_t p;
  std::vector<std::uint32_t> modulus;
};

const std::vector<FieldCase> kSmallFields{{2, {}},        {3, {}},           {5, {}},          {7, {}},
                                          {2, {1, 1, 1}}, {2, {1, 1, 0, 1}}, {3, {1, 0, 1}},   {5, {2, 0, 1}},
                                          {2, {1, 1, 0, 0, 1}}, {3, {1, 2, 0, 1}}};

ErrorCode code_of(const auto& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("prime and extension fields are built with the right size") {
  auto f3 = field_create(3);
  CHECK(f3->order() == 3);
  CHECK(f3->is_prime_field());
  auto f8 = field_create(2, {1, 1, 0, 1});
  CHECK(f8->order() == 8);
  CHECK(f8->degree() == 3);
  CHECK_FALSE(f8->is_prime_field());
}

TEST_CASE("construction errors") {
  CHECK(code_of([] { field_create(4); }) == ErrorCode::NonPrimeCharacteristic);
  CHECK(code_of([] { field_create(1); }) == ErrorCode::NonPrimeCharacteristic);
  CHECK(code_of([] { field_create(2, {0, 0, 1}); }) == ErrorCode::ReducibleModulus);
  CHECK(code_of([] { field_create(2, {1, 0, 1}); }) == ErrorCode::ReducibleModulus);
  CHECK(code_of([] { field_create(3, {1, 1}); }) == ErrorCode::BadModulus);
  CHECK(code_of([] { field_create(3, {1, 0, 2}); }) == ErrorCode::BadModulus);
  CHECK(code_of([] { field_create(2, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}); }) == ErrorCode::FieldTooLarge);
  CHECK(code_of([] { field_create(1031); }) == ErrorCode::FieldTooLarge);
}

TEST_CASE("small arithmetic facts") {
  auto f3 = field_create(3);
  CHECK(f3->add(2, 2) == 1);
  CHECK(f3->neg(1) == 2);
  CHECK(code_of([&] { f3->div(1, 0); }) == ErrorCode::DivisionByZero);

  auto f8 = field_create(2, {1, 1, 0, 1});
  const Coeff w = f8->generator();
  const Coeff w2 = f8->mul(w, w);
  // w * w^2 = w^3 = w + 1 modulo t^3 + t + 1
  CHECK(f8->mul(w, w2) == f8->add(w, 1));
  CHECK(f8->format(w2) == "w^2");
  CHECK(f8->format(f8->add(w2, f8->add(w, 1))) == "w^2+w+1");
  CHECK(f3->format(2) == "2");
}

TEST_CASE("FieldElement operators check field agreement") {
  auto f3 = field_create(3);
  auto f5 = field_create(5);
  FieldElement a(f3, 2), b(f5, 2);
  CHECK((a + a).code() == 1);
  CHECK((a * a).code() == 1);
  CHECK((a / a).code() == 1);
  CHECK((-a).code() == 1);
  CHECK(code_of([&] { (void)(a + b); }) == ErrorCode::FieldMismatch);
  CHECK(code_of([&] { (void)arith(a, FieldElement(f3, 0), ArithOp::div); }) == ErrorCode::DivisionByZero);
  CHECK(code_of([&] { (void)FieldElement::from_coords(f3, std::vector<std::int64_t>{1, 1}); }) ==
        ErrorCode::LengthMismatch);
}

TEST_CASE("multiplication agrees with schoolbook reduction on every pair") {
  for (const auto& fc : kSmallFields) {
    auto k = field_create(fc.p, fc.modulus);
    const unsigned deg = k->degree();
    oracle::Poly1 m(fc.modulus.begin(), fc.modulus.end());
    if (m.empty()) m = {0, 1};  // t, so reduction keeps constants
    for (std::uint32_t a = 0; a < k->order(); ++a)
      for (std::uint32_t b = 0; b < k->order(); ++b) {
        const auto pa = oracle::decode(a, fc.p, deg), pb = oracle::decode(b, fc.p, deg);
        const auto expect = deg == 1 ? (a * b) % fc.p : oracle::encode(oracle::mulmod(pa, pb, m, fc.p), fc.p);
        REQUIRE(k->mul(static_cast<Coeff>(a), static_cast<Coeff>(b)) == expect);
      }
  }
}

TEST_CASE("field axioms hold exhaustively on small fields") {
  for (const auto& fc : kSmallFields) {
    auto k = field_create(fc.p, fc.modulus);
    const auto q = k->order();
    for (Coeff a = 0; a < q; ++a) {
      CHECK(k->add(a, 0) == a);
      CHECK(k->mul(a, 1) == a);
      CHECK(k->add(a, k->neg(a)) == 0);
      if (a != 0) CHECK(k->mul(a, k->inv(a)) == 1);
      CHECK(k->pow(a, q) == a);  // a^q = a
      for (Coeff b = 0; b < q; ++b) {
        CHECK(k->add(a, b) == k->add(b, a));
        CHECK(k->mul(a, b) == k->mul(b, a));
        CHECK(k->sub(k->add(a, b), b) == a);
        // Frobenius is additive
        CHECK(k->pow(k->add(a, b), fc.p) == k->add(k->pow(a, fc.p), k->pow(b, fc.p)));
        for (Coeff c = 0; c < q && q <= 9; ++c) {
          CHECK(k->mul(a, k->add(b, c)) == k->add(k->mul(a, b), k->mul(a, c)));
          CHECK(k->mul(a, k->mul(b, c)) == k->mul(k->mul(a, b), c));
        }
      }
    }
  }
}

TEST_CASE("coordinates round trip") {
  auto k = field_create(3, {1, 2, 0, 1});
  for (Coeff a = 0; a < k->order(); ++a) {
    const auto c = k->coords(a);
    std::vector<std::int64_t> ci(c.begin(), c.end());
    CHECK(k->from_coords(ci) == a);
  }
  CHECK(k->from_int(-1) == 2);
  CHECK(k->from_int(7) == 1);
}

TEST_CASE("irreducibility test") {
  CHECK(is_irreducible(2, std::vector<std::uint32_t>{1, 1, 1}));
  CHECK_FALSE(is_irreducible(2, std::vector<std::uint32_t>{1, 0, 1}));
  CHECK(is_irreducible(3, std::vector<std::uint32_t>{1, 0, 1}));
  CHECK_FALSE(is_irreducible(5, std::vector<std::uint32_t>{1, 0, 1}));  // t^2 + 1 = (t-2)(t+2)
  CHECK(is_prime(2));
  CHECK(is_prime(1021));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9));
}
