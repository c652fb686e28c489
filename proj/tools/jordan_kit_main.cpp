// jordan-kit: construct finite groups to files, compute Jordan constants,
// run the verification suites, and print the closed-form bound tables.
#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "jk/bounds.hpp"
#include "jk/caps.hpp"
#include "jk/constructions.hpp"
#include "jk/corpus.hpp"
#include "jk/error.hpp"
#include "jk/group_io.hpp"
#include "jk/jordan.hpp"
#include "jk/simd_kernels.hpp"

namespace {

using namespace jk;
namespace fs = std::filesystem;

int exit_code_for(ErrKind kind) { return kind == ErrKind::cap_exceeded ? 3 : 2; }

std::vector<std::uint32_t> parse_u32_list(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (const std::exception&) {
      fail(ErrKind::parse_error, "not an integer: '" + tok + "'");
    }
    if (used != tok.size() || v > 0xffffffffUL)
      fail(ErrKind::parse_error, "not a 32-bit integer: '" + tok + "'");
    out.push_back(static_cast<std::uint32_t>(v));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string slug(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (isalnum(static_cast<unsigned char>(c)))
      out += static_cast<char>(tolower(static_cast<unsigned char>(c)));
    else if (!out.empty() && out.back() != '-')
      out += '-';
  }
  while (!out.empty() && out.back() == '-') out.pop_back();
  return out.empty() ? "record" : out;
}

std::string member_preview(const SubgroupSet& s) {
  std::string out = "order " + std::to_string(s.size()) + " {";
  const auto& m = s.members();
  for (std::size_t i = 0; i < m.size() && i < 8; ++i) {
    if (i) out += ' ';
    out += std::to_string(m[i]);
  }
  if (m.size() > 8) out += " ...";
  return out + "}";
}

struct ConstructArgs {
  std::string family;
  std::uint32_t n = 0;
  bool n_set = false;
  std::vector<std::uint32_t> factors;
  std::uint32_t perm_degree = 0;
  std::vector<std::string> gens;
  std::uint32_t matrix_dim = 0;
  std::uint32_t matrix_p = 0;
  std::vector<std::string> matrix_gens;
  std::string out;
};

int cmd_construct(const ConstructArgs& a, const Caps& caps) {
  GroupSpec spec;
  if (!a.family.empty()) {
    std::vector<std::uint32_t> params = a.factors;
    if (a.n_set) params.push_back(a.n);
    spec = GroupSpec::for_family(a.family, std::move(params));
  } else if (a.perm_degree != 0 || !a.gens.empty()) {
    spec.kind = GroupSpec::Kind::permutation_generators;
    spec.degree = a.perm_degree;
    for (const auto& g : a.gens) spec.perm_generators.push_back(parse_cycles(g));
  } else if (a.matrix_dim != 0 || !a.matrix_gens.empty()) {
    spec.kind = GroupSpec::Kind::matrix_generators;
    spec.dim = a.matrix_dim;
    spec.prime = a.matrix_p;
    for (const auto& g : a.matrix_gens) spec.mat_generators.push_back(parse_u32_list(g));
  } else {
    fail(ErrKind::invalid_parameter,
         "construct needs --family, --perm-degree/--gens, or --matrix-dim/--matrix-p/--matrix-gens");
  }
  GroupPtr g = from_spec(spec, caps);  // validates before anything is written
  write_group_file(a.out, spec);
  std::cout << "spec: " << spec.summary() << "\n"
            << "order: " << g->order() << "\n"
            << "out: " << a.out << "\n";
  return 0;
}

int cmd_analyze(const std::string& in, const std::string& out, unsigned jobs, const Caps& caps) {
  GroupSpec spec = read_group_file(in);
  GroupPtr g = from_spec(spec, caps);
  AnalysisReport r = jordan_constant(g, caps, jobs);
  if (!out.empty()) write_text_file(out, dump_json(report_to_json(r, spec)));
  std::cout << "input: " << spec.summary() << "\n"
            << "order: " << g->order() << "\n"
            << "jordan_constant: " << r.jordan_constant << "\n"
            << "bound_constant: " << r.bound_constant << "\n"
            << "witness_subgroup: " << member_preview(r.witness_subgroup) << "\n"
            << "witness_abelian: " << member_preview(r.witness_abelian) << "\n"
            << "subgroup_classes: " << r.subgroup_class_count << "\n";
  if (!out.empty()) std::cout << "report: " << out << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, const std::string& corpus, const std::string& out_dir,
               std::uint64_t factors_max, const Caps& caps) {
  if (suite != "default" && suite != "zarhin" && suite != "all")
    fail(ErrKind::invalid_parameter, "unknown suite '" + suite + "'");
  fs::create_directories(out_dir);

  std::vector<CheckRecord> records;
  if (suite == "default" || suite == "all") {
    CorpusManifest manifest;
    fs::path base;
    if (corpus.empty()) {
      base = fs::path(out_dir) / "corpus";
      manifest = materialize_default_corpus(base, caps);
    } else if (fs::is_directory(corpus)) {
      base = corpus;
      manifest = read_manifest(base / "manifest.json");
    } else {
      base = fs::path(corpus).parent_path();
      manifest = read_manifest(corpus);
    }
    records = run_manifest_suite(manifest, base, caps);
  }
  if (suite == "zarhin" || suite == "all") {
    auto z = run_zarhin_suite(caps, factors_max);
    records.insert(records.end(), z.begin(), z.end());
  }

  std::size_t passed = 0, failed = 0, skipped = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const CheckRecord& r = records[i];
    switch (r.status) {
      case CheckStatus::passed: ++passed; break;
      case CheckStatus::failed: ++failed; break;
      case CheckStatus::skipped: ++skipped; break;
    }
    char index[24];
    std::snprintf(index, sizeof index, "%04zu", i);
    fs::path file = fs::path(out_dir) / (std::string(index) + "-" + r.check_id + "-" +
                                         slug(r.input) + ".json");
    write_text_file(file, dump_json(record_to_json(r)));
    const char* tag = r.status == CheckStatus::passed ? "PASS"
                      : r.status == CheckStatus::failed ? "FAIL"
                                                        : "SKIP";
    std::cout << tag << " " << r.check_id << "  " << r.input << "\n";
  }
  std::cout << "records: " << records.size() << " (" << passed << " passed, " << failed
            << " failed, " << skipped << " skipped)\n"
            << "out-dir: " << out_dir << "\n";
  return failed == 0 ? 0 : 1;
}

struct TablesArgs {
  bool minkowski = false;
  bool collins = false;
  bool symmetric_lower = false;
  std::uint32_t n = 0;
  bool n_set = false;
  std::uint32_t min_n = 0;
  bool min_set = false;
  std::uint32_t max_n = 0;
  bool max_set = false;
  std::string format = "text";
  bool strict = false;
};

constexpr const char* kGapMarker = "not tabulated in source";

int cmd_tables(const TablesArgs& a) {
  int kinds = int(a.minkowski) + int(a.collins) + int(a.symmetric_lower);
  if (kinds != 1)
    fail(ErrKind::invalid_parameter,
         "exactly one of --minkowski, --collins, --symmetric-lower required");
  if (a.format != "text" && a.format != "json")
    fail(ErrKind::invalid_parameter, "unknown format '" + a.format + "'");

  std::uint32_t lo, hi;
  if (a.n_set) {
    if (a.min_set || a.max_set)
      fail(ErrKind::invalid_parameter, "--n excludes --min-n/--max-n");
    lo = hi = a.n;
  } else {
    if (!a.max_set) fail(ErrKind::invalid_parameter, "need --n or --max-n");
    lo = a.min_set ? a.min_n : (a.minkowski ? 1u : a.collins ? 2u : 4u);
    hi = a.max_n;
    if (lo > hi) fail(ErrKind::invalid_parameter, "--min-n exceeds --max-n");
  }

  struct Row {
    std::uint32_t n;
    bool gap;
    BoundEntry entry;
  };
  std::vector<Row> rows;
  for (std::uint32_t n = lo; n <= hi; ++n) {
    if (a.collins) {
      try {
        rows.push_back({n, false, collins_value(n)});
      } catch (const Error& e) {
        if (e.kind() != ErrKind::not_tabulated) throw;
        if (a.strict) throw;
        rows.push_back({n, true, {}});
      }
    } else if (a.minkowski) {
      rows.push_back({n, false, minkowski_bound(n)});
    } else {
      rows.push_back({n, false, symmetric_lower_bound(n)});
    }
  }

  const char* kind = a.minkowski ? "minkowski" : a.collins ? "collins" : "symmetric-lower";
  if (a.format == "json") {
    Json out;
    out["format"] = "jordan-kit/table";
    out["version"] = 1;
    out["kind"] = kind;
    Json jrows = Json::array();
    for (const Row& r : rows) {
      Json jr;
      jr["n"] = r.n;
      if (r.gap) {
        jr["value"] = nullptr;
        jr["rule"] = "not-tabulated";
      } else {
        jr["value"] = bigint_to_json(r.entry.value);
        jr["rule"] = to_string(r.entry.rule);
        if (a.minkowski) {
          Json pe = Json::object();
          for (const auto& [p, e] : r.entry.prime_exponents) pe[std::to_string(p)] = e;
          jr["prime_exponents"] = pe;
        }
      }
      jrows.push_back(jr);
    }
    out["rows"] = jrows;
    std::cout << dump_json(out);
    return 0;
  }

  // Text layout: n right-aligned in 4, value right-aligned to the widest
  // value in range (at least the header word), rule left-aligned. Two-space
  // separators. Stable for golden-file tests.
  std::size_t vwidth = 5;  // "value"
  for (const Row& r : rows)
    if (!r.gap) vwidth = std::max(vwidth, to_string(r.entry.value).size());
  auto pad_left = [](const std::string& s, std::size_t w) {
    return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
  };
  std::string text = pad_left("n", 4) + "  " + pad_left("value", vwidth) + "  rule\n";
  for (const Row& r : rows) {
    text += pad_left(std::to_string(r.n), 4) + "  ";
    if (r.gap)
      text += pad_left("-", vwidth) + "  " + kGapMarker + "\n";
    else
      text += pad_left(to_string(r.entry.value), vwidth) + "  " + to_string(r.entry.rule) + "\n";
  }
  std::cout << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"jordan-kit: exact Jordan constants and bounds for finite groups"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = Caps{}.seed;
  std::string kernel = "auto";
  app.add_option("--seed", seed, "seed for sampled validation (default 1729)");
  app.add_option("--kernel", kernel, "bitset kernel variant: auto, scalar, avx2, neon");

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "build a group and write its file");
  construct->add_option("--family", ca.family, "family name (symmetric, cyclic, zarhin, ...)");
  auto* n_opt = construct->add_option("--n", ca.n, "single family parameter");
  construct->add_option("--factors", ca.factors, "invariant-factor chain, e.g. 2,4")
      ->delimiter(',');
  construct->add_option("--perm-degree", ca.perm_degree, "permutation degree");
  construct->add_option("--gens", ca.gens, "permutation generator in cycle notation (repeatable)");
  construct->add_option("--matrix-dim", ca.matrix_dim, "matrix dimension");
  construct->add_option("--matrix-p", ca.matrix_p, "prime field size");
  construct->add_option("--matrix-gens", ca.matrix_gens,
                        "matrix generator as row-major comma list (repeatable)");
  construct->add_option("--out", ca.out, "output group file")->required();

  std::string an_in, an_out;
  unsigned jobs = 1;
  auto* analyze = app.add_subcommand("analyze", "compute the Jordan constant of a group file");
  analyze->add_option("--in", an_in, "input group file")->required();
  analyze->add_option("--out", an_out, "report file to write");
  analyze->add_option("--jobs", jobs, "worker threads for the per-class sweep")
      ->check(CLI::Range(1u, 256u));

  std::string suite = "default", corpus_path, out_dir;
  std::uint64_t factors_max = 0;
  auto* verify = app.add_subcommand("verify", "run a verification suite, one record file per check");
  verify->add_option("--suite", suite, "default, zarhin, or all");
  verify->add_option("--corpus", corpus_path, "manifest file or corpus directory (default: built-in)");
  verify->add_option("--out-dir", out_dir, "directory for record files")->required();
  verify->add_option("--factors-max", factors_max, "zarhin suite: only chains with |K| <= this");

  TablesArgs ta;
  auto* tables = app.add_subcommand("tables", "print a bounds table");
  tables->add_flag("--minkowski", ta.minkowski, "multiplicative bound M(n)");
  tables->add_flag("--collins", ta.collins, "optimal Jordan-constant values");
  tables->add_flag("--symmetric-lower", ta.symmetric_lower, "(n+1)! lower bound");
  auto* tn = tables->add_option("--n", ta.n, "single n");
  auto* tmin = tables->add_option("--min-n", ta.min_n, "range start");
  auto* tmax = tables->add_option("--max-n", ta.max_n, "range end");
  tables->add_option("--format", ta.format, "text or json");
  tables->add_flag("--strict", ta.strict, "exit 2 on not-tabulated n instead of printing a marker");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!jk::simd::select(kernel))
      fail(ErrKind::invalid_parameter, "kernel variant unavailable: " + kernel);
    Caps caps = Caps::from_env();
    caps.seed = seed;
    ca.n_set = n_opt->count() > 0;
    ta.n_set = tn->count() > 0;
    ta.min_set = tmin->count() > 0;
    ta.max_set = tmax->count() > 0;
    if (*construct) return cmd_construct(ca, caps);
    if (*analyze) return cmd_analyze(an_in, an_out, jobs, caps);
    if (*verify) return cmd_verify(suite, corpus_path, out_dir, factors_max, caps);
    return cmd_tables(ta);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
