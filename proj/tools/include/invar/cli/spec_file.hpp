#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "invar/gaction.hpp"
#include "invar/mpoly.hpp"

namespace invar::cli {

enum class SpecErrorKind { Syntax, BadMatrix, BadField };
std::string_view to_string(SpecErrorKind kind);

class SpecError : public std::runtime_error {
 public:
  SpecError(SpecErrorKind kind, std::string key, const std::string& what);
  SpecErrorKind kind() const noexcept { return kind_; }
  /// JSON key (or path such as `generators[1][0][2]`) that was rejected.
  const std::string& key() const noexcept { return key_; }

 private:
  SpecErrorKind kind_;
  std::string key_;
};

/// A validated group description: generators act on x_1..x_n, row i of each
/// matrix being the image of x_i.
struct GroupSpec {
  std::string name;
  unsigned p = 2;
  /// Low degree first, reduced into 0..p-1; empty for a prime field.
  std::vector<std::uint32_t> ext_modulus;
  std::size_t n = 0;
  std::vector<std::string> labels;
  std::optional<std::vector<unsigned>> sequence;
  FieldPtr field;
  RingPtr ring;
  std::vector<GroupElement> generators;
};

GroupSpec parse_spec_text(std::string_view text);
GroupSpec parse_spec_json(const nlohmann::json& doc);
GroupSpec parse_spec(const std::filesystem::path& path);

}  // namespace invar::cli
