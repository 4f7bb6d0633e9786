#include <doctest.h>

#include <filesystem>

#include "invar/cli/analysis.hpp"
#include "invar/cli/report.hpp"
#include "invar/cli/spec_file.hpp"
#include "invar/gbasis.hpp"

using namespace invar;
using namespace invar::cli;

namespace {

const std::filesystem::path kFixtures = INVAR_FIXTURE_DIR;

GroupSpec fixture(const char* name) { return parse_spec(kFixtures / (std::string(name) + ".json")); }

SpecErrorKind kind_of(std::string_view text) {
  try {
    parse_spec_text(text);
  } catch (const SpecError& e) {
    return e.kind();
  }
  FAIL("accepted: " << text);
  return SpecErrorKind::Syntax;
}

std::string key_of(std::string_view text) {
  try {
    parse_spec_text(text);
  } catch (const SpecError& e) {
    return e.key();
  }
  return "";
}

std::vector<Polynomial> parse_all(const RingPtr& r, const std::vector<std::string>& xs) {
  std::vector<Polynomial> out;
  for (const auto& x : xs) out.push_back(parse_polynomial(r, x));
  return out;
}

}  // namespace

TEST_CASE("fixtures parse") {
  auto s = fixture("stong_p2");
  CHECK(s.p == 2);
  CHECK(s.ext_modulus == std::vector<std::uint32_t>{1, 1, 0, 1});
  CHECK(s.field->order() == 8);
  CHECK(s.n == 3);
  CHECK(s.generators.size() == 3);
  CHECK(s.labels == std::vector<std::string>{"rho", "sigma", "tau"});
  CHECK(s.generators[2].at(1, 0) == s.field->generator());

  auto m = fixture("mv2_p3_m2");
  CHECK(m.ring->names()[2] == "y1");
  CHECK_FALSE(m.sequence.has_value());
  for (const char* name : {"mv2_p2_m2", "f3_order27", "cyclic_p3", "trivial_n3"}) CHECK_NOTHROW(fixture(name));
}

TEST_CASE("spec file errors") {
  CHECK(kind_of("{") == SpecErrorKind::Syntax);
  CHECK(kind_of("[1, 2]") == SpecErrorKind::Syntax);
  CHECK(kind_of(R"({"n": 2, "generators": [[[1,0],[0,1]]]})") == SpecErrorKind::BadField);
  CHECK(kind_of(R"({"field": {"p": 4}, "n": 1, "generators": [[[1]]]})") == SpecErrorKind::BadField);
  CHECK(kind_of(R"({"field": {"p": 2, "ext_modulus": [1, 0, 1]}, "n": 1, "generators": [[[1]]]})") ==
        SpecErrorKind::BadField);
  CHECK(kind_of(R"({"field": {"p": 3}, "generators": [[[1]]]})") == SpecErrorKind::Syntax);
  CHECK(kind_of(R"({"field": {"p": 3}, "n": 2, "generators": []})") == SpecErrorKind::BadMatrix);
  CHECK(kind_of(R"({"field": {"p": 3}, "n": 2, "generators": [[[1,0]]]})") == SpecErrorKind::BadMatrix);
  CHECK(kind_of(R"({"field": {"p": 3}, "n": 2, "generators": [[[1,1],[1,1]]]})") == SpecErrorKind::BadMatrix);
  CHECK(kind_of(R"({"field": {"p": 3}, "n": 2, "generators": [[[1,0],[0,"a"]]]})") == SpecErrorKind::BadMatrix);
  CHECK(key_of(R"({"field": {"p": 3}, "n": 2, "generators": [[[1,0],[0,1]], [[1,0],[0,"a"]]]})") ==
        "generators[1][1][1]");
  CHECK(kind_of(R"({"field": {"p": 3}, "n": 2, "generators": [[[1,0],[0,1]]], "labels": ["a", "b"]})") ==
        SpecErrorKind::Syntax);
  CHECK(kind_of(R"({"field": {"p": 3}, "n": 2, "generators": [[[1,0],[0,1]]], "sequence": [3]})") ==
        SpecErrorKind::Syntax);
  // entries are reduced into the field
  auto s = parse_spec_text(R"({"field": {"p": 3}, "n": 2, "generators": [[[4,0],[-1,1]]]})");
  CHECK(s.generators[0].at(0, 0) == 1);
  CHECK(s.generators[0].at(1, 0) == 2);
}

TEST_CASE("analysis of the fixtures") {
  auto out = analyze(fixture("mv2_p3_m2"));
  const auto& r = out.report;
  CHECK(out.exit_code == 0);
  CHECK(r.group_order == 3);
  CHECK(r.structure.status == "verified");
  CHECK(r.ideals_equal == std::optional<bool>(true));
  CHECK(r.degrees == std::vector<unsigned>{1, 1, 3, 3});
  CHECK(r.degree_product == 9);
  CHECK(r.polynomiality == "not_polynomial");
  auto ring = fixture("mv2_p3_m2").ring;
  CHECK(ideal_equal(parse_all(ring, r.constructive.generators), parse_all(ring, {"x1", "x2", "y1^3", "y2^3"})));

  auto st = analyze(fixture("stong_p2")).report;
  CHECK(st.group_order == 8);
  CHECK(st.structure.sequence == std::vector<unsigned>{1, 3});
  CHECK(st.polynomiality == "polynomial");
  CHECK(st.generated_by_reflections);
  CHECK_FALSE(st.nakajima_classic);

  auto f27 = analyze(fixture("f3_order27")).report;
  CHECK(f27.group_order == 27);
  CHECK(f27.reflection_subgroup_order == 9);
  CHECK(f27.colength == std::optional<std::uint64_t>(81));
  CHECK(f27.polynomiality == "not_polynomial");

  auto triv = analyze(fixture("trivial_n3")).report;
  CHECK(triv.polynomiality == "polynomial");
  CHECK(triv.degrees == std::vector<unsigned>{1, 1, 1});
}

TEST_CASE("refusals and exit codes") {
  auto cyc = fixture("cyclic_p3");
  auto both = analyze(cyc);
  CHECK(both.exit_code == 0);
  CHECK(both.report.structure.status == "none");
  CHECK(both.report.constructive.status == "refused");
  CHECK(both.report.bruteforce.certified);

  AnalysisOptions only;
  only.method = MethodChoice::constructive;
  CHECK(analyze(cyc, only).exit_code == 2);

  AnalysisOptions declared;
  declared.sequence = std::vector<unsigned>{1, 3};
  auto bad = analyze(cyc, declared);
  CHECK(bad.report.structure.status == "refuted");
  CHECK(bad.report.structure.source == "declared");

  AnalysisOptions bounded;
  bounded.method = MethodChoice::bruteforce;
  bounded.degree_bound = 2;
  auto partial = analyze(fixture("f3_order27"), bounded).report;
  CHECK_FALSE(partial.bruteforce.certified);
  CHECK(partial.polynomiality == "undetermined");

  AnalysisOptions tiny;
  tiny.closure_cap = 4;
  CHECK_THROWS_AS(analyze(fixture("f3_order27"), tiny), StageError);
}

TEST_CASE("reports round trip through JSON") {
  for (const char* name : {"stong_p2", "mv2_p2_m2", "cyclic_p3", "f3_order27"}) {
    const auto r = analyze(fixture(name)).report;
    const auto j = to_json(r);
    CHECK(to_json(report_from_json(j)) == j);
    CHECK(to_json(report_from_json(nlohmann::ordered_json::parse(j.dump()))).dump() == j.dump());
    CHECK_FALSE(j.contains("timing"));
  }
  AnalysisOptions timed;
  timed.timing = true;
  const auto t = to_json(analyze(fixture("trivial_n3"), timed).report);
  CHECK(t.contains("timing"));
  CHECK(to_json(report_from_json(t)) == t);
}

TEST_CASE("text rendering") {
  const auto text = render_text(analyze(fixture("mv2_p3_m2")).report);
  for (const char* needle : {"mv2_p3_m2", "order: 3", "y1^3", "polynomiality: not_polynomial", "colength: 9"})
    CHECK(text.find(needle) != std::string::npos);
}
