#include <doctest.h>

#include <random>

#include "invar/errors.hpp"
#include "invar/gbasis.hpp"
#include "invar/hilbert.hpp"
#include "support/oracles.hpp"
#include "support/random_groups.hpp"

using namespace invar;

namespace {

Polynomial P(const RingPtr& r, const char* s) { return parse_polynomial(r, s); }

std::vector<Polynomial> Ps(const RingPtr& r, std::initializer_list<const char*> xs) {
  std::vector<Polynomial> out;
  for (auto x : xs) out.push_back(P(r, x));
  return out;
}

ErrorCode code_of(const auto& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::ParseError;
}

GroupTable diagonal(std::uint32_t p, std::size_t m) {
  auto k = field_create(p);
  const std::size_t n = 2 * m;
  std::vector<Coeff> e(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
  for (std::size_t i = 0; i < m; ++i) e[(m + i) * n + i] = 1;
  return group_closure(std::vector{GroupElement(k, n, e)});
}

GroupTable order27() {
  auto k = field_create(3);
  return group_closure(std::vector{GroupElement(k, linalg::Dense{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 1, 1, 0}, {1, 1, 0, 1}}),
                                   GroupElement(k, linalg::Dense{{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {0, 0, 0, 1}})});
}

GroupTable stong() {
  auto k = field_create(2, {1, 1, 0, 1});
  const Coeff w = k->generator(), w2 = k->mul(w, w);
  return group_closure(std::vector{GroupElement(k, linalg::Dense{{1, 0, 0}, {1, 1, 0}, {0, 0, 1}}),
                                   GroupElement(k, linalg::Dense{{1, 0, 0}, {0, 1, 0}, {1, 0, 1}}),
                                   GroupElement(k, linalg::Dense{{1, 0, 0}, {w, 1, 0}, {w2, 0, 1}})});
}

/// dim of the fixed space of all elements on degree-d forms, by dense
/// elimination of the stacked (g - 1) matrices.
std::size_t fixed_dimension(const RingPtr& r, const GroupTable& G, unsigned d) {
  const auto monos = monomials_of_degree(r->nvars(), d);
  const Field& k = r->k();
  std::vector<std::vector<Coeff>> rows;  // one row per (g, image monomial); columns = monos
  for (const auto& g : G.elements) {
    std::map<std::vector<unsigned>, std::vector<Coeff>> by_mono;
    for (std::size_t c = 0; c < monos.size(); ++c) {
      const auto diff = act(g, Polynomial::monomial(r, monos[c])) - Polynomial::monomial(r, monos[c]);
      for (const auto& t : diff.terms()) {
        std::vector<unsigned> key(r->nvars());
        for (std::size_t i = 0; i < key.size(); ++i) key[i] = t.mono[i];
        auto& row = by_mono[key];
        row.resize(monos.size(), 0);
        row[c] = t.coeff;
      }
    }
    for (auto& [key, row] : by_mono) rows.push_back(row);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < monos.size() && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const Coeff inv = k.inv(rows[rank][c]);
    for (auto& x : rows[rank]) x = k.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      const Coeff f = rows[i][c];
      for (std::size_t j = 0; j < monos.size(); ++j) rows[i][j] = k.sub(rows[i][j], k.mul(f, rows[rank][j]));
    }
    ++rank;
  }
  return monos.size() - rank;
}

}  // namespace

TEST_CASE("invariants of a degree") {
  const auto G = diagonal(3, 2);
  auto r = Ring::create(G.field(), 4, {"x1", "x2", "y1", "y2"});
  auto b1 = invariants_of_degree(r, G, 1);
  CHECK(b1.basis == Ps(r, {"x2", "x1"}));
  auto triv = trivial_group(field_create(5), 2);
  auto r2 = Ring::create(triv.field(), 2);
  CHECK(invariants_of_degree(r2, triv, 2).basis.size() == 3);
  // x_1 is always invariant in a triangular basis
  auto r27 = Ring::create(field_create(3), 4);
  const auto b = invariants_of_degree(r27, order27(), 1).basis;
  CHECK(std::find(b.begin(), b.end(), P(r27, "x1")) != b.end());
}

TEST_CASE("invariant spaces are complete and correct on the three examples") {
  struct Case {
    GroupTable G;
    unsigned max_d;
  };
  for (auto& [G, max_d] : std::vector<Case>{{diagonal(3, 2), 4}, {diagonal(2, 2), 4}, {order27(), 4}, {stong(), 5}}) {
    auto r = Ring::create(G.field(), G.dim());
    for (unsigned d = 1; d <= max_d; ++d) {
      const auto basis = invariants_of_degree(r, G, d).basis;
      CHECK(basis.size() == fixed_dimension(r, G, d));
      for (const auto& f : basis) {
        CHECK(f.is_homogeneous());
        CHECK(f.degree() == d);
        CHECK(oracle::invariant_under_all(f, G));
      }
    }
  }
}

TEST_CASE("brute-force Hilbert ideals") {
  auto triv = trivial_group(field_create(2), 3);
  auto r3 = Ring::create(triv.field(), 3);
  auto t = hilbert_ideal_bruteforce(r3, triv);
  CHECK(ideal_equal(t.generators, Ps(r3, {"x1", "x2", "x3"})));
  CHECK(t.generators.size() == 3);
  CHECK(t.certified);

  const auto G = diagonal(3, 2);
  auto r = Ring::create(G.field(), 4, {"x1", "x2", "y1", "y2"});
  auto h = hilbert_ideal_bruteforce(r, G);
  CHECK(ideal_equal(h.generators, Ps(r, {"x1", "x2", "y1^3", "y2^3"})));
  CHECK(h.degrees == std::vector<unsigned>{1, 1, 3, 3});
  CHECK(h.method == Method::bruteforce);

  auto r4 = Ring::create(field_create(3), 4);
  auto h27 = hilbert_ideal_bruteforce(r4, order27());
  CHECK(ideal_equal(h27.generators, Ps(r4, {"x1", "x2^3", "x3^9", "x4^3 - x3^3"})));
  CHECK(h27.certified);
  CHECK(h27.certificate == "staircase");
  CHECK(minimal_generators(h27.generators).size() == h27.generators.size());

  BruteforceOptions capped;
  capped.degree_bound = 3;
  auto partial = hilbert_ideal_bruteforce(r4, order27(), capped);
  CHECK_FALSE(partial.certified);
  CHECK(partial.degree_bound == 3);
  CHECK(partial.generators.size() == 3);

  BruteforceOptions verified;
  verified.structure_verified = true;
  auto hv = hilbert_ideal_bruteforce(r, G, verified);
  CHECK(hv.certified);
  CHECK(ideal_equal(hv.generators, h.generators));
}

TEST_CASE("find_Fj") {
  auto G = diagonal(3, 1);
  auto r = Ring::create(G.field(), 2, {"x", "y"});
  CHECK(find_Fj(r, {}, 1, 1, {}) == P(r, "x"));
  CHECK(code_of([&] { find_Fj(r, G.gens, G.order(), 1, {}); }) == ErrorCode::StructureInvalid);
  CHECK(find_Fj(r, G.gens, G.order(), 2, Ps(r, {"x"})) == P(r, "y^3 + 2*x^2*y"));
  auto C = group_closure(std::vector{GroupElement(field_create(3), linalg::Dense{{1, 0, 0}, {1, 1, 0}, {0, 1, 1}})});
  auto r3 = Ring::create(C.field(), 3);
  CHECK(code_of([&] { find_Fj(r3, C.gens, C.order(), 2, Ps(r3, {"x1"})); }) == ErrorCode::StructureInvalid);
  CHECK(code_of([&] { find_Fj(r3, C.gens, C.order(), 4, {}); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("reduction of a lift with trailing variables") {
  auto k = field_create(3);
  auto r = Ring::create(k, 3);
  std::vector<GroupElement> gens{GroupElement(k, linalg::Dense{{1, 0, 0}, {1, 1, 0}, {1, 0, 1}})};
  auto F = P(r, "x2^3 - x1^2*x2 + x1*(x2 - x3)^2");
  REQUIRE(is_invariant(F, gens));
  const auto prior = Ps(r, {"x1"});
  auto trace = reduce_to_small_ring(F, 2, gens, groebner(r, prior));
  CHECK(trace.result == P(r, "x2^3 - x1^2*x2 + x1*x2^2"));
  REQUIRE(trace.steps.size() == 2);
  CHECK(trace.steps[0].alpha == Monomial{0, 0, 2});
  CHECK(trace.steps[0].delta == P(r, "x1"));
  CHECK(trace.steps[1].delta == P(r, "x1*x2"));
  // the second step starts from F - x1*x3^2, which is no longer invariant
  CHECK_FALSE(trace.steps[1].source_invariant);
  CHECK_FALSE(trace.steps[1].delta_invariant);
  // derivatives of F itself are invariant
  CHECK(trace.input_derivatives_invariant);
  CHECK(ideal_equal(std::vector{P(r, "x1"), F}, std::vector{P(r, "x1"), trace.result}));

  // F already in k[x1, x2] is returned unchanged
  auto same = reduce_to_small_ring(P(r, "x2^3 - x1^2*x2"), 2, gens, groebner(r, prior));
  CHECK(same.result == P(r, "x2^3 - x1^2*x2"));
  CHECK(same.steps.empty());
}

TEST_CASE("reduction failures") {
  auto k = field_create(3);
  auto r = Ring::create(k, 3);
  std::vector<GroupElement> gens;
  const auto gb = groebner(r, Ps(r, {"x1"}));
  CHECK(code_of([&] { reduce_to_small_ring(P(r, "x2*x3 + x2^2"), 2, gens, gb); }) == ErrorCode::ReductionEscape);
  CHECK(code_of([&] { reduce_to_small_ring(P(r, "x1*x3"), 2, gens, gb); }) == ErrorCode::ReductionEscape);
  CHECK(code_of([&] { reduce_to_small_ring(P(r, "x1^2"), 2, gens, gb); }) == ErrorCode::ReductionEscape);
}

TEST_CASE("constructive generators on the examples") {
  auto triv = trivial_group(field_create(3), 3);
  auto r3 = Ring::create(triv.field(), 3);
  auto ts = find_sequence(triv);
  REQUIRE(ts);
  auto t = ci_generators(r3, triv, *ts);
  CHECK(t.generators == Ps(r3, {"x1", "x2", "x3"}));

  for (std::uint32_t p : {2u, 3u}) {
    const auto G = diagonal(p, 2);
    auto r = Ring::create(G.field(), 4, {"x1", "x2", "y1", "y2"});
    auto s = verify_structure(G, {2, 4});
    REQUIRE(s.ok());
    auto res = ci_generators(r, G, *s.structure);
    const std::string y1 = "y1^" + std::to_string(p), y2 = "y2^" + std::to_string(p);
    CHECK(ideal_equal(res.generators, Ps(r, {"x1", "x2", y1.c_str(), y2.c_str()})));
    CHECK(res.method == Method::constructive);
    CHECK(res.provenance.size() == 4);
    CHECK(res.provenance[0].stage == 0);
    CHECK(res.provenance[2].stage == 1);
    CHECK(res.provenance[2].lifted.has_value());
    CHECK(check_triangular_shape(res.generators, G.order()).empty());
  }

  const auto S = stong();
  auto rs = Ring::create(S.field(), 3);
  auto ss = find_sequence(S);
  REQUIRE(ss);
  auto res = ci_generators(rs, S, *ss);
  CHECK(ideal_equal(res.generators, hilbert_ideal_bruteforce(rs, S).generators));
  ConstructiveOptions quiet;
  quiet.verify = false;
  CHECK(ci_generators(rs, S, *ss, quiet).generators == res.generators);
}

TEST_CASE("forged structures are refused") {
  auto k = field_create(3);
  auto C = group_closure(std::vector{GroupElement(k, linalg::Dense{{1, 0, 0}, {1, 1, 0}, {0, 1, 1}})});
  auto r = Ring::create(k, 3);
  NakajimaStructure forged;
  forged.sequence = {1, 3};
  forged.blocks = {C.gens};
  forged.chain = {C};
  CHECK(code_of([&] { ci_generators(r, C, forged); }) == ErrorCode::StructureInvalid);
  forged.chain.clear();
  CHECK(code_of([&] { ci_generators(r, C, forged); }) == ErrorCode::StructureInvalid);
  NakajimaStructure too_small;
  too_small.sequence = {3};
  CHECK(code_of([&] { ci_generators(r, C, too_small); }) == ErrorCode::StructureInvalid);
}

TEST_CASE("polynomiality verdicts") {
  auto triv = trivial_group(field_create(2), 2);
  auto r2 = Ring::create(triv.field(), 2);
  auto t = hilbert_ideal_bruteforce(r2, triv);
  auto v = polynomiality_report(triv, t);
  CHECK(v.verdict == Polynomiality::polynomial);
  CHECK(v.degree_product == 1);

  auto r4 = Ring::create(field_create(3), 4);
  const auto G27 = order27();
  auto v27 = polynomiality_report(G27, hilbert_ideal_bruteforce(r4, G27));
  CHECK(v27.verdict == Polynomiality::not_polynomial);
  CHECK(v27.degree_product == 81);
  CHECK(v27.complete_intersection);

  const auto D = diagonal(3, 2);
  auto rd = Ring::create(D.field(), 4);
  auto vd = polynomiality_report(D, hilbert_ideal_bruteforce(rd, D));
  CHECK(vd.verdict == Polynomiality::not_polynomial);
  CHECK(vd.degree_product == 9);

  const auto S = stong();
  auto rs = Ring::create(S.field(), 3);
  CHECK(polynomiality_report(S, hilbert_ideal_bruteforce(rs, S)).verdict == Polynomiality::polynomial);

  HilbertIdealResult fake;
  auto rx = Ring::create(field_create(2), 2);
  fake.generators = Ps(rx, {"x1^2", "x1*x2", "x2^2"});
  fake.degrees = {2, 2, 2};
  auto vf = polynomiality_report(triv, fake);
  CHECK(vf.verdict == Polynomiality::undetermined);
  CHECK_FALSE(vf.complete_intersection);
  CHECK(to_string(Polynomiality::not_polynomial) == "not_polynomial");
}

TEST_CASE("random instances: degree bounds, lifts and stage ideals") {
  std::mt19937_64 rng(555);
  for (int t = 0; t < 25; ++t) {
    const auto inst = testing_support::random_nakajima(rng);
    const auto res = ci_generators(inst.ring, inst.group, inst.structure);
    const auto& seq = inst.structure.sequence;
    for (std::size_t i = 0; i < res.traces.size(); ++i) {
      const auto& prov = res.provenance[res.provenance.size() - res.traces.size() + i];
      const auto& tr = res.traces[i];
      const GroupTable& acting =
          prov.stage <= inst.structure.r() ? inst.structure.chain[prov.stage - 1] : inst.group;
      // least degree is at most the orbit size of x_j
      CHECK(tr.input.degree() <= orbit_product(inst.ring, prov.index - 1, acting).degree());
      CHECK(tr.input.degree() <= acting.order());
      CHECK(tr.result.degree() == tr.input.degree());
      std::vector<Polynomial> with_F(res.generators.begin(), res.generators.begin() + (prov.index - 1));
      auto with_f = with_F;
      with_F.push_back(tr.input);
      with_f.push_back(tr.result);
      CHECK(ideal_equal(with_F, with_f));
    }
    // extended ideal: f_1..f_{i_k} generate the same ideal in S as the stage invariants
    for (std::size_t k = 1; k <= inst.structure.r(); ++k) {
      const auto& Gk = inst.structure.chain[k - 1];
      std::vector<Polynomial> stage(res.generators.begin(), res.generators.begin() + seq[k]);
      for (unsigned d = 1; d <= 3; ++d)
        for (const auto& f : invariants_of_degree(inst.ring, Gk, d).basis)
          if (monomial_ideal_member(f, seq[k])) CHECK(oracle::graded_member(f, stage));
    }
  }
}
