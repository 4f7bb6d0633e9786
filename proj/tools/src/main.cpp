#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "invar/cli/analysis.hpp"
#include "invar/hilbert.hpp"

namespace {

using invar::cli::AnalysisOptions;
using invar::cli::MethodChoice;

constexpr int kOk = 0;
constexpr int kRefused = 2;
constexpr int kParse = 3;
constexpr int kInternal = 4;

std::vector<unsigned> parse_sequence(const std::string& text) {
  std::vector<unsigned> seq;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const unsigned long v = std::stoul(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad sequence entry '" + item + "'");
    seq.push_back(static_cast<unsigned>(v));
  }
  if (seq.empty()) throw std::invalid_argument("empty sequence");
  return seq;
}

int emit(const std::string& body, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << body;
    return kOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "invar: cannot write " << out_path << "\n";
    return kParse;
  }
  out << body;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert ideals of modular p-group actions"};
  app.require_subcommand(1);

  std::string spec_path, out_path, format = "json", method = "both", sequence, verify = "on";
  std::optional<unsigned> degree_bound;
  unsigned degree = 1;
  bool timing = false;

  const auto common = [&](CLI::App* cmd) {
    cmd->add_option("spec", spec_path, "Group spec (JSON)")->required();
    cmd->add_option("--out", out_path, "Write the report to a file");
    cmd->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
  };
  const auto pipeline = [&](CLI::App* cmd) {
    cmd->add_option("--sequence", sequence, "Declared sequence i0,i1,... (skips the search)");
    cmd->add_option("--degree-bound", degree_bound, "Brute-force degree bound");
    cmd->add_option("--verify", verify, "Verification pass")->check(CLI::IsMember({"on", "off"}));
    cmd->add_flag("--timing", timing, "Include per-stage timings");
  };

  auto* analyze = app.add_subcommand("analyze", "Full analysis report");
  common(analyze);
  pipeline(analyze);
  analyze->add_option("--method", method, "Hilbert ideal method")
      ->check(CLI::IsMember({"both", "constructive", "bruteforce"}));

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert ideal only");
  common(hilbert);
  pipeline(hilbert);
  hilbert->add_option("--method", method, "Hilbert ideal method")
      ->check(CLI::IsMember({"both", "constructive", "bruteforce"}));

  auto* invariants = app.add_subcommand("invariants", "Basis of the invariants of one degree");
  common(invariants);
  invariants->add_option("--degree", degree, "Degree")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  invar::cli::GroupSpec spec;
  AnalysisOptions options;
  try {
    spec = invar::cli::parse_spec(spec_path);
    if (!sequence.empty()) options.sequence = parse_sequence(sequence);
  } catch (const std::exception& e) {
    std::cerr << "invar: " << e.what() << "\n";
    return kParse;
  }
  options.method = method == "constructive" ? MethodChoice::constructive
                   : method == "bruteforce" ? MethodChoice::bruteforce
                                            : MethodChoice::both;
  options.degree_bound = degree_bound;
  options.verify = verify == "on";
  options.closure_cap = invar::cli::closure_cap_from_env();
  options.timing = timing;

  try {
    if (invariants->parsed()) {
      const auto group = invar::group_closure(spec.generators, options.closure_cap);
      const auto basis = invar::invariants_of_degree(spec.ring, group, degree);
      std::string body;
      if (format == "json") {
        nlohmann::ordered_json j;
        j["name"] = spec.name;
        j["degree"] = degree;
        j["dimension"] = basis.basis.size();
        j["basis"] = nlohmann::ordered_json::array();
        for (const auto& f : basis.basis) j["basis"].push_back(f.to_string());
        body = j.dump(2) + "\n";
      } else {
        body = "degree " + std::to_string(degree) + ": dimension " + std::to_string(basis.basis.size()) + "\n";
        for (const auto& f : basis.basis) body += "  " + f.to_string() + "\n";
      }
      return emit(body, out_path);
    }

    const auto outcome = invar::cli::analyze(spec, options);
    std::string body;
    if (hilbert->parsed()) {
      nlohmann::ordered_json j;
      j["name"] = outcome.report.name;
      j["group_order"] = outcome.report.group_order;
      j["variables"] = outcome.report.variables;
      if (options.method != MethodChoice::constructive) j["bruteforce"] = invar::cli::to_json(outcome.report.bruteforce, false);
      if (options.method != MethodChoice::bruteforce) j["constructive"] = invar::cli::to_json(outcome.report.constructive, true);
      j["ideals_equal"] = outcome.report.ideals_equal ? nlohmann::ordered_json(*outcome.report.ideals_equal) : nullptr;
      if (format == "json") {
        body = j.dump(2) + "\n";
      } else {
        body = invar::cli::render_text(outcome.report);
      }
    } else {
      body = format == "json" ? invar::cli::to_json(outcome.report).dump(2) + "\n" : invar::cli::render_text(outcome.report);
    }
    if (const int rc = emit(body, out_path); rc != kOk) return rc;
    if (outcome.exit_code != kOk) std::cerr << "invar: " << outcome.report.constructive.reason << "\n";
    return outcome.exit_code;
  } catch (const invar::cli::StageError& e) {
    std::cerr << "invar: " << e.what() << "\n";
    switch (e.code()) {
      case invar::ErrorCode::CapExceeded:
      case invar::ErrorCode::NotAPGroup:
      case invar::ErrorCode::NotUnipotent:
      case invar::ErrorCode::StructureInvalid:
      case invar::ErrorCode::BadSequence:
      case invar::ErrorCode::NotTriangular:
        return kRefused;
      default:
        return kInternal;
    }
  } catch (const invar::Error& e) {
    std::cerr << "invar: " << e.what() << "\n";
    return e.code() == invar::ErrorCode::CapExceeded || e.code() == invar::ErrorCode::NotAPGroup ? kRefused : kInternal;
  } catch (const std::exception& e) {
    std::cerr << "invar: internal error: " << e.what() << "\n";
    return kInternal;
  }
}
