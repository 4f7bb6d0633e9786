#include "invar/cli/analysis.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>

#include "invar/gbasis.hpp"
#include "invar/hilbert.hpp"
#include "invar/nakajima.hpp"

namespace invar::cli {

namespace {

bool is_structural(ErrorCode code) {
  switch (code) {
    case ErrorCode::CapExceeded:
    case ErrorCode::NotAPGroup:
    case ErrorCode::NotUnipotent:
    case ErrorCode::StructureInvalid:
    case ErrorCode::BadSequence:
      return true;
    default:
      return false;
  }
}

std::vector<std::string> texts(const std::vector<Polynomial>& gens) {
  std::vector<std::string> out;
  for (const auto& f : gens) out.push_back(f.to_string());
  return out;
}

class Stopwatch {
 public:
  explicit Stopwatch(std::optional<std::map<std::string, double>>& sink) : sink_(sink) {}
  template <class F>
  auto run(const std::string& stage, F&& body) {
    const auto start = std::chrono::steady_clock::now();
    struct Record {
      Stopwatch* self;
      const std::string& stage;
      std::chrono::steady_clock::time_point start;
      ~Record() {
        if (self->sink_) {
          std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
          (*self->sink_)[stage] += dt.count();
        }
      }
    } record{this, stage, start};
    try {
      return body();
    } catch (const Error& e) {
      throw StageError(stage, e);
    }
  }

 private:
  std::optional<std::map<std::string, double>>& sink_;
};

}  // namespace

std::size_t closure_cap_from_env() {
  if (const char* v = std::getenv("INVAR_CLOSURE_CAP")) {
    char* end = nullptr;
    const unsigned long long cap = std::strtoull(v, &end, 10);
    if (end != v && *end == '\0' && cap > 0) return static_cast<std::size_t>(cap);
  }
  return kDefaultClosureCap;
}

AnalysisOutcome analyze(const GroupSpec& spec, const AnalysisOptions& options) {
  AnalysisOutcome out;
  AnalysisReport& r = out.report;
  if (options.timing) r.timing.emplace();
  Stopwatch clock(r.timing);

  r.name = spec.name;
  r.p = spec.p;
  r.ext_modulus = spec.ext_modulus;
  r.n = spec.n;
  r.variables = spec.ring->names();
  const Field& k = *spec.field;

  const auto input_group = clock.run("closure", [&] { return group_closure(spec.generators, options.closure_cap); });
  r.group_order = input_group.order();

  const auto tri = clock.run("triangularize", [&] { return triangularize(input_group.gens); });
  r.basis_is_identity = tri.is_identity;
  for (const auto& row : tri.basis_change) {
    std::vector<std::string> cells;
    for (Coeff c : row) cells.push_back(k.format(c));
    r.basis_change.push_back(std::move(cells));
  }
  const GroupTable group =
      tri.is_identity ? input_group : clock.run("closure", [&] { return group_closure(tri.generators, options.closure_cap); });
  for (const auto& g : group.gens) r.beta.push_back(beta(g));

  clock.run("structure", [&] {
    const auto refl = pseudo_reflections(group);
    r.reflection_count = refl.count;
    r.reflection_subgroup_order = refl.generated_order;
    r.generated_by_reflections = refl.generated_by_reflections;
    r.nakajima_classic = is_nakajima_classic(group);
    return 0;
  });

  std::optional<NakajimaStructure> structure;
  const auto declared = options.sequence ? options.sequence : spec.sequence;
  clock.run("structure", [&] {
    if (declared) {
      r.structure.source = "declared";
      auto check = verify_structure(group, *declared, tri.basis_change);
      if (check.ok()) structure = std::move(check.structure);
      else r.structure.reason = check.refutation;
      r.structure.status = check.ok() ? "verified" : "refuted";
      if (!check.ok()) r.structure.sequence = *declared;
    } else {
      r.structure.source = "search";
      structure = find_sequence(group, tri.basis_change);
      r.structure.status = structure ? "verified" : "none";
      if (!structure) r.structure.reason = "no generalised Nakajima sequence in the triangular basis";
    }
    return 0;
  });
  if (structure) {
    r.structure.sequence = structure->sequence;
    for (const auto& b : structure->blocks) r.structure.block_sizes.push_back(b.size());
    for (const auto& c : structure->chain) r.structure.chain_orders.push_back(c.order());
  }

  const RingPtr& ring = spec.ring;
  std::optional<HilbertIdealResult> brute, constructive;

  if (options.method != MethodChoice::constructive) {
    BruteforceOptions bo;
    bo.degree_bound = options.degree_bound;
    bo.structure_verified = structure.has_value();
    brute = clock.run("bruteforce", [&] { return hilbert_ideal_bruteforce(ring, group, bo); });
    r.bruteforce.status = "ok";
    r.bruteforce.generators = texts(brute->generators);
    r.bruteforce.degrees = brute->degrees;
    r.bruteforce.degree_bound = brute->degree_bound;
    r.bruteforce.certified = brute->certified;
    r.bruteforce.certificate = brute->certificate;
  } else {
    r.bruteforce.reason = "not requested";
  }

  if (options.method == MethodChoice::bruteforce) {
    r.constructive.reason = "not requested";
  } else if (!structure) {
    r.constructive.status = "refused";
    r.constructive.reason = "StructureInvalid: group has no verified generalised Nakajima structure";
    if (!r.structure.reason.empty()) r.constructive.reason += " (" + r.structure.reason + ")";
    if (options.method == MethodChoice::constructive) out.exit_code = 2;
  } else {
    try {
      ConstructiveOptions co;
      co.verify = options.verify;
      constructive = clock.run("constructive", [&] { return ci_generators(ring, group, *structure, co); });
      r.constructive.status = "ok";
      r.constructive.generators = texts(constructive->generators);
      r.constructive.degrees = constructive->degrees;
      for (const auto& p : constructive->provenance) {
        r.constructive.provenance.push_back(
            {p.index, p.stage, p.group_order, p.trace_length, p.lifted ? p.lifted->to_string() : std::string()});
      }
      for (const auto& t : constructive->traces) {
        r.constructive.derivatives_invariant = r.constructive.derivatives_invariant && t.input_derivatives_invariant;
        for (const auto& s : t.steps) {
          if (s.source_invariant && !s.delta_invariant) r.constructive.steps_invariant = false;
        }
      }
    } catch (const StageError& e) {
      r.constructive.status = is_structural(e.code()) ? "refused" : "error";
      r.constructive.reason = e.what();
      out.exit_code = is_structural(e.code()) ? 2 : 4;
    }
  }

  clock.run("verdicts", [&] {
    if (brute && constructive) r.ideals_equal = ideal_equal(brute->generators, constructive->generators);
    const HilbertIdealResult* chosen = constructive ? &*constructive : (brute ? &*brute : nullptr);
    if (chosen) {
      const auto verdict = polynomiality_report(group, *chosen);
      r.complete_intersection = verdict.complete_intersection;
      r.degrees = chosen->degrees;
      r.degree_product = verdict.degree_product;
      r.polynomiality = std::string(to_string(verdict.verdict));
      const auto c = colength(groebner(ring, chosen->generators));
      if (c.finite()) r.colength = *c.count;
      if (brute && chosen == &*brute && !brute->certified) r.polynomiality = "undetermined";
    }
    return 0;
  });
  if (r.ideals_equal && !*r.ideals_equal && out.exit_code == 0) out.exit_code = 4;
  return out;
}

}  // namespace invar::cli
