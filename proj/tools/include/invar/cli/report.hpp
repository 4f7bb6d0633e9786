#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace invar::cli {

struct ProvenanceEntry {
  std::size_t index = 0;
  std::size_t stage = 0;
  std::size_t group_order = 1;
  std::size_t trace_length = 0;
  /// F_j before reduction; empty for base generators.
  std::string lifted;
};

/// One Hilbert ideal computation. `status` is "ok", "skipped", "refused" or "error".
struct IdealSection {
  std::string status = "skipped";
  std::string reason;
  std::vector<std::string> generators;
  std::vector<unsigned> degrees;
  // bruteforce
  unsigned degree_bound = 0;
  bool certified = false;
  std::string certificate;
  // constructive
  std::vector<ProvenanceEntry> provenance;
  bool derivatives_invariant = true;
  /// Every reduction step that started from an invariant produced an invariant.
  bool steps_invariant = true;
};

struct StructureSection {
  /// "verified", "refuted" or "none".
  std::string status = "none";
  /// "declared" or "search".
  std::string source = "search";
  std::vector<unsigned> sequence;
  std::vector<std::size_t> block_sizes;
  std::vector<std::size_t> chain_orders;
  std::string reason;
};

struct AnalysisReport {
  std::string name;
  unsigned p = 2;
  std::vector<std::uint32_t> ext_modulus;
  std::size_t n = 0;
  std::vector<std::string> variables;

  std::size_t group_order = 0;
  bool basis_is_identity = true;
  /// Row i: the i-th working basis vector in the input coordinates.
  std::vector<std::vector<std::string>> basis_change;
  std::vector<unsigned> beta;

  std::size_t reflection_count = 0;
  std::size_t reflection_subgroup_order = 1;
  bool generated_by_reflections = false;
  bool nakajima_classic = false;
  StructureSection structure;

  IdealSection bruteforce;
  IdealSection constructive;

  std::optional<bool> ideals_equal;
  std::optional<bool> complete_intersection;
  std::vector<unsigned> degrees;
  std::optional<std::uint64_t> colength;
  std::uint64_t degree_product = 0;
  std::string polynomiality = "undetermined";

  /// Seconds per stage; only present when requested.
  std::optional<std::map<std::string, double>> timing;
};

nlohmann::ordered_json to_json(const AnalysisReport& r);
/// Throws nlohmann::json exceptions on malformed input.
AnalysisReport report_from_json(const nlohmann::ordered_json& j);
std::string render_text(const AnalysisReport& r);

nlohmann::ordered_json to_json(const IdealSection& s, bool constructive);

}  // namespace invar::cli
