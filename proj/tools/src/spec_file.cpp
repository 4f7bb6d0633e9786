#include "invar/cli/spec_file.hpp"

#include <fstream>
#include <sstream>

#include "invar/errors.hpp"

namespace invar::cli {

using nlohmann::json;

std::string_view to_string(SpecErrorKind kind) {
  switch (kind) {
    case SpecErrorKind::Syntax: return "Syntax";
    case SpecErrorKind::BadMatrix: return "BadMatrix";
    case SpecErrorKind::BadField: return "BadField";
  }
  return "Syntax";
}

SpecError::SpecError(SpecErrorKind kind, std::string key, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + " at '" + key + "': " + what), kind_(kind), key_(std::move(key)) {}

namespace {

[[noreturn]] void fail(SpecErrorKind kind, const std::string& key, const std::string& what) {
  throw SpecError(kind, key, what);
}

std::int64_t integer(const json& v, const std::string& key, SpecErrorKind kind) {
  if (!v.is_number_integer()) fail(kind, key, "expected an integer");
  return v.get<std::int64_t>();
}

Coeff entry(const Field& k, const json& v, const std::string& key) {
  if (v.is_array()) {
    std::vector<std::int64_t> coords;
    for (std::size_t i = 0; i < v.size(); ++i) coords.push_back(integer(v[i], key + "[" + std::to_string(i) + "]", SpecErrorKind::BadMatrix));
    if (coords.size() > k.degree()) fail(SpecErrorKind::BadMatrix, key, "more coefficients than the field degree");
    return k.from_coords(coords);
  }
  return k.from_int(integer(v, key, SpecErrorKind::BadMatrix));
}

}  // namespace

GroupSpec parse_spec_json(const json& doc) {
  if (!doc.is_object()) fail(SpecErrorKind::Syntax, "$", "top level must be an object");
  GroupSpec spec;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) fail(SpecErrorKind::Syntax, "name", "expected a string");
    spec.name = doc["name"].get<std::string>();
  }

  if (!doc.contains("field") || !doc["field"].is_object()) fail(SpecErrorKind::BadField, "field", "missing field block");
  const json& fb = doc["field"];
  if (!fb.contains("p")) fail(SpecErrorKind::BadField, "field.p", "missing characteristic");
  const auto p = integer(fb["p"], "field.p", SpecErrorKind::BadField);
  if (p < 2 || p > 65535) fail(SpecErrorKind::BadField, "field.p", "characteristic out of range");
  spec.p = static_cast<unsigned>(p);
  if (fb.contains("ext_modulus") && !fb["ext_modulus"].is_null()) {
    if (!fb["ext_modulus"].is_array()) fail(SpecErrorKind::BadField, "field.ext_modulus", "expected a coefficient list");
    for (std::size_t i = 0; i < fb["ext_modulus"].size(); ++i)
    {
      const auto c = integer(fb["ext_modulus"][i], "field.ext_modulus[" + std::to_string(i) + "]", SpecErrorKind::BadField);
      spec.ext_modulus.push_back(static_cast<std::uint32_t>(((c % p) + p) % p));
    }
  }
  try {
    spec.field = field_create(spec.p, spec.ext_modulus);
  } catch (const Error& e) {
    fail(SpecErrorKind::BadField, spec.ext_modulus.empty() ? "field.p" : "field.ext_modulus", e.what());
  }

  if (!doc.contains("n")) fail(SpecErrorKind::Syntax, "n", "missing dimension");
  const auto n = integer(doc["n"], "n", SpecErrorKind::Syntax);
  if (n < 1 || n > static_cast<std::int64_t>(kMaxVars)) fail(SpecErrorKind::Syntax, "n", "dimension must be 1..16");
  spec.n = static_cast<std::size_t>(n);

  std::vector<std::string> names;
  if (doc.contains("variables")) {
    const json& vs = doc["variables"];
    if (!vs.is_array() || vs.size() != spec.n) fail(SpecErrorKind::Syntax, "variables", "expected n names");
    for (const auto& v : vs) {
      if (!v.is_string()) fail(SpecErrorKind::Syntax, "variables", "names must be strings");
      names.push_back(v.get<std::string>());
    }
  }
  try {
    spec.ring = Ring::create(spec.field, spec.n, names);
  } catch (const Error& e) {
    fail(SpecErrorKind::Syntax, "variables", e.what());
  }

  if (!doc.contains("generators") || !doc["generators"].is_array())
    fail(SpecErrorKind::BadMatrix, "generators", "expected a list of matrices");
  const json& gens = doc["generators"];
  if (gens.empty()) fail(SpecErrorKind::BadMatrix, "generators", "at least one generator is required");
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const std::string gkey = "generators[" + std::to_string(g) + "]";
    const json& mat = gens[g];
    if (!mat.is_array() || mat.size() != spec.n) fail(SpecErrorKind::BadMatrix, gkey, "expected n rows");
    std::vector<Coeff> entries;
    for (std::size_t i = 0; i < spec.n; ++i) {
      const std::string rkey = gkey + "[" + std::to_string(i) + "]";
      if (!mat[i].is_array() || mat[i].size() != spec.n) fail(SpecErrorKind::BadMatrix, rkey, "expected n entries");
      for (std::size_t j = 0; j < spec.n; ++j)
        entries.push_back(entry(*spec.field, mat[i][j], rkey + "[" + std::to_string(j) + "]"));
    }
    GroupElement elem(spec.field, spec.n, std::move(entries));
    try {
      (void)elem.inverse();
    } catch (const Error&) {
      fail(SpecErrorKind::BadMatrix, gkey, "matrix is not invertible");
    }
    spec.generators.push_back(std::move(elem));
  }

  if (doc.contains("labels")) {
    const json& ls = doc["labels"];
    if (!ls.is_array() || ls.size() != gens.size()) fail(SpecErrorKind::Syntax, "labels", "expected one label per generator");
    for (const auto& l : ls) {
      if (!l.is_string()) fail(SpecErrorKind::Syntax, "labels", "labels must be strings");
      spec.labels.push_back(l.get<std::string>());
    }
  }
  if (doc.contains("sequence") && !doc["sequence"].is_null()) {
    const json& s = doc["sequence"];
    if (!s.is_array() || s.empty()) fail(SpecErrorKind::Syntax, "sequence", "expected a non-empty list");
    std::vector<unsigned> seq;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const auto v = integer(s[i], "sequence[" + std::to_string(i) + "]", SpecErrorKind::Syntax);
      if (v < 1 || v > n) fail(SpecErrorKind::Syntax, "sequence", "entries must lie in 1..n");
      seq.push_back(static_cast<unsigned>(v));
    }
    spec.sequence = std::move(seq);
  }
  return spec;
}

GroupSpec parse_spec_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(SpecErrorKind::Syntax, "$", e.what());
  }
  return parse_spec_json(doc);
}

GroupSpec parse_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(SpecErrorKind::Syntax, "$", "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec_text(buf.str());
}

}  // namespace invar::cli
