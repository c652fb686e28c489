#include "jk/group_io.hpp"

#include <fstream>

#include "jk/error.hpp"

namespace jk {
namespace {

constexpr int kVersion = 1;

void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrKind::parse_error, what);
}

void check_header(const Json& j, const char* format) {
  require(j.is_object(), "expected a JSON object");
  require(j.contains("format") && j["format"] == format,
          std::string("missing or wrong format marker (want ") + format + ")");
  require(j.contains("version") && j["version"] == kVersion, "unsupported file version");
}

std::uint32_t get_u32(const Json& j, const char* key) {
  require(j.contains(key) && j[key].is_number_unsigned(), std::string("field '") + key +
                                                              "' must be a non-negative integer");
  return j[key].get<std::uint32_t>();
}

}  // namespace

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json bigint_to_json(const BigInt& v) {
  if (v >= 0 && v <= json_safe_max()) return Json(static_cast<std::uint64_t>(v.get_ui()));
  return Json(v.get_str());
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_unsigned()) return BigInt(static_cast<unsigned long>(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      fail(ErrKind::parse_error, "malformed decimal string integer");
    }
  }
  fail(ErrKind::parse_error, "expected an integer or decimal string");
}

Json spec_to_json(const GroupSpec& s) {
  Json j;
  j["format"] = "jordan-kit/group";
  j["version"] = kVersion;
  switch (s.kind) {
    case GroupSpec::Kind::family:
      j["kind"] = "spec";
      j["family"] = s.family;
      j["params"] = s.params;
      break;
    case GroupSpec::Kind::permutation_generators:
      j["kind"] = "permutation";
      j["degree"] = s.degree;
      j["generators"] = s.perm_generators;
      break;
    case GroupSpec::Kind::matrix_generators: {
      j["kind"] = "matrix";
      j["dim"] = s.dim;
      j["p"] = s.prime;
      Json gens = Json::array();
      for (const auto& flat : s.mat_generators) {
        Json rows = Json::array();
        for (std::uint32_t r = 0; r < s.dim; ++r) {
          Json row = Json::array();
          for (std::uint32_t c = 0; c < s.dim; ++c) row.push_back(flat[r * s.dim + c]);
          rows.push_back(std::move(row));
        }
        gens.push_back(std::move(rows));
      }
      j["generators"] = std::move(gens);
      break;
    }
    case GroupSpec::Kind::cayley_table:
      j["kind"] = "cayley";
      j["order"] = s.order;
      j["table"] = s.table;
      if (!s.labels.empty()) j["labels"] = s.labels;
      break;
  }
  return j;
}

GroupSpec spec_from_json(const Json& j) {
  check_header(j, "jordan-kit/group");
  require(j.contains("kind") && j["kind"].is_string(), "missing 'kind'");
  const std::string kind = j["kind"];
  GroupSpec s;
  if (kind == "spec") {
    s.kind = GroupSpec::Kind::family;
    require(j.contains("family") && j["family"].is_string(), "missing 'family'");
    s.family = j["family"];
    require(j.contains("params") && j["params"].is_array(), "missing 'params' array");
    for (const auto& p : j["params"]) {
      require(p.is_number_unsigned(), "params must be non-negative integers");
      s.params.push_back(p.get<std::uint32_t>());
    }
    return s;
  }
  if (kind == "permutation") {
    s.kind = GroupSpec::Kind::permutation_generators;
    s.degree = get_u32(j, "degree");
    require(j.contains("generators") && j["generators"].is_array(), "missing 'generators'");
    for (const auto& gen : j["generators"]) {
      require(gen.is_array(), "each generator must be an array of cycles");
      std::vector<std::vector<std::uint32_t>> cycles;
      for (const auto& cyc : gen) {
        require(cyc.is_array(), "each cycle must be an array of points");
        std::vector<std::uint32_t> points;
        for (const auto& p : cyc) {
          require(p.is_number_unsigned(), "cycle points must be non-negative integers");
          points.push_back(p.get<std::uint32_t>());
        }
        cycles.push_back(std::move(points));
      }
      s.perm_generators.push_back(std::move(cycles));
    }
    return s;
  }
  if (kind == "matrix") {
    s.kind = GroupSpec::Kind::matrix_generators;
    s.dim = get_u32(j, "dim");
    s.prime = get_u32(j, "p");
    require(j.contains("generators") && j["generators"].is_array(), "missing 'generators'");
    for (const auto& gen : j["generators"]) {
      require(gen.is_array() && gen.size() == s.dim, "matrix must have 'dim' rows");
      std::vector<std::uint32_t> flat;
      for (const auto& row : gen) {
        require(row.is_array() && row.size() == s.dim, "matrix row must have 'dim' entries");
        for (const auto& e : row) {
          require(e.is_number_unsigned(), "matrix entries must be non-negative integers");
          flat.push_back(e.get<std::uint32_t>());
        }
      }
      s.mat_generators.push_back(std::move(flat));
    }
    return s;
  }
  if (kind == "cayley") {
    s.kind = GroupSpec::Kind::cayley_table;
    s.order = get_u32(j, "order");
    require(j.contains("table") && j["table"].is_array(), "missing 'table'");
    for (const auto& e : j["table"]) {
      require(e.is_number_unsigned(), "table entries must be non-negative integers");
      s.table.push_back(e.get<Elem>());
    }
    if (j.contains("labels")) {
      require(j["labels"].is_array(), "'labels' must be an array");
      for (const auto& l : j["labels"]) {
        require(l.is_string(), "labels must be strings");
        s.labels.push_back(l.get<std::string>());
      }
    }
    return s;
  }
  fail(ErrKind::parse_error, "unknown group file kind '" + kind + "'");
}

void write_group_file(const std::filesystem::path& path, const GroupSpec& s) {
  write_text_file(path, dump_json(spec_to_json(s)));
}

GroupSpec read_group_file(const std::filesystem::path& path) {
  return spec_from_json(read_json_file(path));
}

Json report_to_json(const AnalysisReport& r, const GroupSpec& input) {
  Json j;
  j["format"] = "jordan-kit/report";
  j["version"] = kVersion;
  j["input"] = spec_to_json(input);
  j["jordan_constant"] = r.jordan_constant;
  j["bound_constant"] = r.bound_constant;
  j["witness_subgroup"] = r.witness_subgroup.members();
  j["witness_abelian"] = r.witness_abelian.members();
  j["subgroup_class_count"] = r.subgroup_class_count;
  return j;
}

Json record_to_json(const CheckRecord& r) {
  Json j;
  j["format"] = "jordan-kit/check";
  j["version"] = kVersion;
  j["check_id"] = r.check_id;
  j["input"] = r.input;
  j["status"] = to_string(r.status);
  if (r.status == CheckStatus::skipped) {
    j["skip_reason"] = r.skip_reason;
    return j;
  }
  j["relation"] = r.relation == CheckRelation::le ? "le" : "eq";
  j["lhs"] = bigint_to_json(r.lhs);
  j["rhs"] = bigint_to_json(r.rhs);
  Json q = Json::object();
  for (const auto& [name, value] : r.quantities) q[name] = bigint_to_json(value);
  j["quantities"] = std::move(q);
  Json w = Json::object();
  for (const auto& [name, members] : r.witnesses) w[name] = members;
  j["witnesses"] = std::move(w);
  return j;
}

Json manifest_to_json(const CorpusManifest& m) {
  Json j;
  j["format"] = "jordan-kit/corpus";
  j["version"] = kVersion;
  Json groups = Json::array();
  for (const auto& g : m.groups) groups.push_back(Json{{"name", g.name}, {"path", g.path}});
  j["groups"] = std::move(groups);
  Json products = Json::array();
  for (const auto& p : m.products)
    products.push_back(Json{{"left", p.left}, {"right", p.right}});
  j["products"] = std::move(products);
  Json splits = Json::array();
  for (const auto& s : m.splits)
    splits.push_back(
        Json{{"group", s.group}, {"normal", s.normal}, {"complement", s.complement}});
  j["splits"] = std::move(splits);
  Json expected = Json::array();
  for (const auto& [name, value] : m.expected_jordan)
    expected.push_back(Json{{"name", name}, {"jordan_constant", value}});
  j["expected_jordan"] = std::move(expected);
  return j;
}

CorpusManifest manifest_from_json(const Json& j) {
  check_header(j, "jordan-kit/corpus");
  CorpusManifest m;
  require(j.contains("groups") && j["groups"].is_array(), "missing 'groups'");
  for (const auto& g : j["groups"]) {
    require(g.contains("name") && g["name"].is_string() && g.contains("path") &&
                g["path"].is_string(),
            "group entries need 'name' and 'path'");
    m.groups.push_back({g["name"].get<std::string>(), g["path"].get<std::string>()});
  }
  for (std::size_t i = 0; i < m.groups.size(); ++i)
    for (std::size_t k = i + 1; k < m.groups.size(); ++k) {
      require(m.groups[i].path != m.groups[k].path, "duplicate group path in manifest");
      require(m.groups[i].name != m.groups[k].name, "duplicate group name in manifest");
    }
  if (j.contains("products"))
    for (const auto& p : j["products"]) {
      require(p.contains("left") && p.contains("right"), "product entries need 'left'/'right'");
      m.products.push_back({p["left"].get<std::string>(), p["right"].get<std::string>()});
    }
  if (j.contains("splits"))
    for (const auto& s : j["splits"]) {
      require(s.contains("group") && s.contains("normal") && s.contains("complement"),
              "split entries need 'group', 'normal', 'complement'");
      CorpusManifest::Split split;
      split.group = s["group"].get<std::string>();
      for (const auto& e : s["normal"]) split.normal.push_back(e.get<Elem>());
      for (const auto& e : s["complement"]) split.complement.push_back(e.get<Elem>());
      m.splits.push_back(std::move(split));
    }
  if (j.contains("expected_jordan"))
    for (const auto& e : j["expected_jordan"]) {
      require(e.contains("name") && e.contains("jordan_constant"),
              "expected entries need 'name' and 'jordan_constant'");
      m.expected_jordan.emplace_back(e["name"].get<std::string>(),
                                     e["jordan_constant"].get<std::uint64_t>());
    }
  return m;
}

void write_manifest(const std::filesystem::path& path, const CorpusManifest& m) {
  write_text_file(path, dump_json(manifest_to_json(m)));
}

CorpusManifest read_manifest(const std::filesystem::path& path) {
  return manifest_from_json(read_json_file(path));
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrKind::parse_error, "cannot open file: " + path.string());
  try {
    Json j;
    in >> j;
    return j;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrKind::parse_error, "invalid JSON in " + path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrKind::parse_error, "cannot open file for writing: " + path.string());
  out << text;
}

}  // namespace jk
