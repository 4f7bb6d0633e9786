#include "invar/cli/report.hpp"

#include <sstream>

namespace invar::cli {

using nlohmann::ordered_json;

namespace {

template <class T>
ordered_json optional_value(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

template <class T>
std::optional<T> read_optional(const ordered_json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

IdealSection section_from_json(const ordered_json& j) {
  IdealSection s;
  s.status = j.at("status").get<std::string>();
  s.reason = j.at("reason").get<std::string>();
  s.generators = j.at("generators").get<std::vector<std::string>>();
  s.degrees = j.at("degrees").get<std::vector<unsigned>>();
  if (j.contains("degree_bound")) {
    s.degree_bound = j.at("degree_bound").get<unsigned>();
    s.certified = j.at("certified").get<bool>();
    s.certificate = j.at("certificate").get<std::string>();
  }
  if (j.contains("provenance")) {
    for (const auto& e : j.at("provenance")) {
      s.provenance.push_back({e.at("index").get<std::size_t>(), e.at("stage").get<std::size_t>(),
                              e.at("group_order").get<std::size_t>(), e.at("trace_length").get<std::size_t>(),
                              e.at("F").get<std::string>()});
    }
    s.derivatives_invariant = j.at("derivatives_invariant").get<bool>();
    s.steps_invariant = j.at("steps_invariant").get<bool>();
  }
  return s;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

template <class T>
std::string join_numbers(const std::vector<T>& xs, const std::string& sep = ", ") {
  std::vector<std::string> s;
  for (const auto& x : xs) s.push_back(std::to_string(x));
  return join(s, sep);
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void render_section(std::ostringstream& os, const char* title, const IdealSection& s, bool constructive) {
  os << title << ": " << s.status;
  if (!s.reason.empty()) os << " (" << s.reason << ")";
  os << "\n";
  if (s.status != "ok") return;
  for (std::size_t i = 0; i < s.generators.size(); ++i)
    os << "  [" << s.degrees[i] << "] " << s.generators[i] << "\n";
  if (!constructive) {
    os << "  degree bound " << s.degree_bound << ", certified " << yes_no(s.certified);
    if (s.certified) os << " (" << s.certificate << ")";
    os << "\n";
    return;
  }
  for (const auto& p : s.provenance) {
    os << "  f_" << p.index << ": stage " << p.stage << ", |G'| = " << p.group_order << ", steps " << p.trace_length;
    if (!p.lifted.empty()) os << ", F = " << p.lifted;
    os << "\n";
  }
  os << "  derivatives invariant: " << yes_no(s.derivatives_invariant)
     << ", invariant steps stay invariant: " << yes_no(s.steps_invariant) << "\n";
}

}  // namespace

ordered_json to_json(const IdealSection& s, bool constructive) {
  ordered_json j;
  j["status"] = s.status;
  j["reason"] = s.reason;
  j["generators"] = s.generators;
  j["degrees"] = s.degrees;
  if (!constructive) {
    j["degree_bound"] = s.degree_bound;
    j["certified"] = s.certified;
    j["certificate"] = s.certificate;
  } else {
    ordered_json prov = ordered_json::array();
    for (const auto& p : s.provenance) {
      prov.push_back({{"index", p.index},
                      {"stage", p.stage},
                      {"group_order", p.group_order},
                      {"trace_length", p.trace_length},
                      {"F", p.lifted}});
    }
    j["provenance"] = prov;
    j["derivatives_invariant"] = s.derivatives_invariant;
    j["steps_invariant"] = s.steps_invariant;
  }
  return j;
}

ordered_json to_json(const AnalysisReport& r) {
  ordered_json j;
  j["name"] = r.name;
  j["field"] = {{"p", r.p}, {"ext_modulus", r.ext_modulus}};
  j["n"] = r.n;
  j["variables"] = r.variables;
  j["group_order"] = r.group_order;
  j["triangularization"] = {{"identity", r.basis_is_identity}, {"basis_change", r.basis_change}};
  j["beta"] = r.beta;
  j["pseudo_reflections"] = {{"count", r.reflection_count},
                             {"subgroup_order", r.reflection_subgroup_order},
                             {"generated_by_reflections", r.generated_by_reflections}};
  j["nakajima_classic"] = r.nakajima_classic;
  j["generalised_nakajima"] = {{"status", r.structure.status},
                               {"source", r.structure.source},
                               {"sequence", r.structure.sequence},
                               {"block_sizes", r.structure.block_sizes},
                               {"chain_orders", r.structure.chain_orders},
                               {"reason", r.structure.reason}};
  j["bruteforce"] = to_json(r.bruteforce, false);
  j["constructive"] = to_json(r.constructive, true);
  j["ideals_equal"] = optional_value(r.ideals_equal);
  j["complete_intersection"] = optional_value(r.complete_intersection);
  j["degrees"] = r.degrees;
  j["colength"] = optional_value(r.colength);
  j["polynomiality"] = {{"verdict", r.polynomiality}, {"degree_product", r.degree_product}, {"group_order", r.group_order}};
  if (r.timing) j["timing"] = *r.timing;
  return j;
}

AnalysisReport report_from_json(const ordered_json& j) {
  AnalysisReport r;
  r.name = j.at("name").get<std::string>();
  r.p = j.at("field").at("p").get<unsigned>();
  r.ext_modulus = j.at("field").at("ext_modulus").get<std::vector<std::uint32_t>>();
  r.n = j.at("n").get<std::size_t>();
  r.variables = j.at("variables").get<std::vector<std::string>>();
  r.group_order = j.at("group_order").get<std::size_t>();
  r.basis_is_identity = j.at("triangularization").at("identity").get<bool>();
  r.basis_change = j.at("triangularization").at("basis_change").get<std::vector<std::vector<std::string>>>();
  r.beta = j.at("beta").get<std::vector<unsigned>>();
  const auto& pr = j.at("pseudo_reflections");
  r.reflection_count = pr.at("count").get<std::size_t>();
  r.reflection_subgroup_order = pr.at("subgroup_order").get<std::size_t>();
  r.generated_by_reflections = pr.at("generated_by_reflections").get<bool>();
  r.nakajima_classic = j.at("nakajima_classic").get<bool>();
  const auto& gn = j.at("generalised_nakajima");
  r.structure.status = gn.at("status").get<std::string>();
  r.structure.source = gn.at("source").get<std::string>();
  r.structure.sequence = gn.at("sequence").get<std::vector<unsigned>>();
  r.structure.block_sizes = gn.at("block_sizes").get<std::vector<std::size_t>>();
  r.structure.chain_orders = gn.at("chain_orders").get<std::vector<std::size_t>>();
  r.structure.reason = gn.at("reason").get<std::string>();
  r.bruteforce = section_from_json(j.at("bruteforce"));
  r.constructive = section_from_json(j.at("constructive"));
  r.ideals_equal = read_optional<bool>(j.at("ideals_equal"));
  r.complete_intersection = read_optional<bool>(j.at("complete_intersection"));
  r.degrees = j.at("degrees").get<std::vector<unsigned>>();
  r.colength = read_optional<std::uint64_t>(j.at("colength"));
  r.polynomiality = j.at("polynomiality").at("verdict").get<std::string>();
  r.degree_product = j.at("polynomiality").at("degree_product").get<std::uint64_t>();
  if (j.contains("timing")) r.timing = j.at("timing").get<std::map<std::string, double>>();
  return r;
}

std::string render_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "group " << (r.name.empty() ? "(unnamed)" : r.name) << " over F_" << r.p;
  if (!r.ext_modulus.empty()) os << "[w]/(" << join_numbers(r.ext_modulus, ",") << ")";
  os << ", n = " << r.n << " (" << join(r.variables, ", ") << ")\n";
  os << "order: " << r.group_order << "\n";
  os << "triangular basis: " << (r.basis_is_identity ? "input basis" : "changed") << "\n";
  if (!r.basis_is_identity) {
    for (const auto& row : r.basis_change) os << "  [" << join(row, " ") << "]\n";
  }
  os << "beta: " << join_numbers(r.beta) << "\n";
  os << "pseudo-reflections: " << r.reflection_count << ", generating a subgroup of order "
     << r.reflection_subgroup_order << " (generated by reflections: " << yes_no(r.generated_by_reflections) << ")\n";
  os << "nakajima (classic): " << yes_no(r.nakajima_classic) << "\n";
  os << "generalised nakajima: " << r.structure.status << " [" << r.structure.source << "]";
  if (!r.structure.sequence.empty()) os << " sequence (" << join_numbers(r.structure.sequence) << ")";
  if (!r.structure.block_sizes.empty()) os << ", block sizes " << join_numbers(r.structure.block_sizes);
  if (!r.structure.chain_orders.empty()) os << ", chain orders " << join_numbers(r.structure.chain_orders);
  if (!r.structure.reason.empty()) os << " (" << r.structure.reason << ")";
  os << "\n";
  render_section(os, "bruteforce", r.bruteforce, false);
  render_section(os, "constructive", r.constructive, true);
  const auto tri = [](const std::optional<bool>& b) { return b ? yes_no(*b) : "n/a"; };
  os << "ideals equal: " << tri(r.ideals_equal) << "\n";
  os << "complete intersection: " << tri(r.complete_intersection) << "\n";
  os << "degrees: " << join_numbers(r.degrees) << "\n";
  os << "colength: " << (r.colength ? std::to_string(*r.colength) : std::string("infinite")) << "\n";
  os << "polynomiality: " << r.polynomiality << " (degree product " << r.degree_product << ", |G| = " << r.group_order
     << ")\n";
  if (r.timing) {
    os << "timing:";
    for (const auto& [stage, secs] : *r.timing) os << " " << stage << "=" << secs << "s";
    os << "\n";
  }
  return os.str();
}

}  // namespace invar::cli
