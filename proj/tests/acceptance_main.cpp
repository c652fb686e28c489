// Acceptance gate: ten self-contained criteria, one printed line each,
// exit 0 only when every line is PASS. Values marked by an oracle comment
// are recomputed here by the brute-force code in oracles.cpp rather than
// trusted from the engine under test.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "jk/bounds.hpp"
#include "jk/checks.hpp"
#include "jk/constructions.hpp"
#include "jk/corpus.hpp"
#include "jk/error.hpp"
#include "jk/group_io.hpp"
#include "jk/jordan.hpp"
#include "oracles.hpp"

using namespace jk;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

fs::path work_root() {
  static fs::path dir = [] {
    auto d = fs::temp_directory_path() / "jordan-kit-acceptance";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

// Criteria 8 and 9 share one full run over the default corpus.
struct SuiteRun {
  bool ran = false;
  std::vector<CheckRecord> records;
};
SuiteRun g_suite;

const std::vector<CheckRecord>& corpus_records() {
  if (!g_suite.ran) {
    auto dir = work_root() / "corpus";
    auto manifest = materialize_default_corpus(dir);
    g_suite.records = run_manifest_suite(manifest, dir);
    g_suite.ran = true;
  }
  return g_suite.records;
}

bool expect_not_tabulated(std::uint32_t n) {
  try {
    collins_value(n);
    return false;
  } catch (const Error& e) {
    return e.kind() == ErrKind::not_tabulated;
  }
}

bool c1_minkowski_table(std::string& detail) {
  static const unsigned long want[] = {2, 24, 48, 5760, 11520, 2903040};
  auto t0 = Clock::now();
  for (std::uint32_t n = 1; n <= 6; ++n)
    if (minkowski_bound(n).value != want[n - 1]) {
      detail = "wrong value at n = " + std::to_string(n);
      return false;
    }
  double secs = seconds_since(t0);
  if (secs >= 0.001) {
    detail = "six lookups took " + std::to_string(secs) + " s (limit 1 ms)";
    return false;
  }
  return true;
}

bool c2_collins_table(std::string& detail) {
  static const unsigned long small[] = {60, 360, 25920, 25920, 6531840};
  for (std::uint32_t n = 2; n <= 6; ++n)
    if (collins_value(n).value != small[n - 2]) {
      detail = "wrong value at n = " + std::to_string(n);
      return false;
    }
  if (collins_value(20).value != big_pow(BigInt(60), 10) * big_factorial(10)) {
    detail = "n = 20 is not 60^10 * 10!";
    return false;
  }
  if (collins_value(71).value != big_factorial(72)) {
    detail = "n = 71 is not 72!";
    return false;
  }
  for (std::uint32_t n = 7; n <= 19; ++n)
    if (!expect_not_tabulated(n)) {
      detail = "n = " + std::to_string(n) + " did not raise not_tabulated";
      return false;
    }
  return true;
}

bool c3_lower_bound_consistency(std::string& detail) {
  static const unsigned long lower[] = {120, 720, 5040};
  static const unsigned long upper[] = {25920, 25920, 6531840};
  for (std::uint32_t n = 4; n <= 6; ++n) {
    BigInt lo = symmetric_lower_bound(n).value;
    BigInt hi = collins_value(n).value;
    if (lo != lower[n - 4] || hi != upper[n - 4] || !(lo <= hi)) {
      detail = "mismatch at n = " + std::to_string(n);
      return false;
    }
  }
  return true;
}

bool c4_jordan_oracle_values(std::string& detail) {
  // Every abelian group in the default corpus has constant 1.
  auto dir = work_root() / "c4-corpus";
  auto manifest = materialize_default_corpus(dir);
  std::size_t abelian_seen = 0;
  for (const auto& entry : manifest.groups) {
    GroupPtr g = from_spec(read_group_file(dir / entry.path));
    if (!g->is_abelian()) continue;
    ++abelian_seen;
    if (jordan_constant(g).jordan_constant != 1) {
      detail = entry.name + " is abelian but has constant != 1";
      return false;
    }
  }
  if (abelian_seen < 5) {
    detail = "corpus has too few abelian groups to be meaningful";
    return false;
  }

  // Small symmetric groups against the brute-force oracle.
  for (std::uint32_t n : {3u, 4u}) {
    GroupPtr g = symmetric_group(n);
    std::uint64_t engine = jordan_constant(g).jordan_constant;
    std::uint64_t brute = oracle::jordan(*g);
    std::uint64_t expected = n == 3 ? 2 : 6;
    if (engine != brute || engine != expected) {
      detail = "symmetric(" + std::to_string(n) + "): engine " + std::to_string(engine) +
               ", oracle " + std::to_string(brute);
      return false;
    }
  }

  auto timed = [&](std::uint32_t n, std::uint64_t expected, double limit) {
    auto t0 = Clock::now();
    std::uint64_t got = jordan_constant(symmetric_group(n)).jordan_constant;
    double secs = seconds_since(t0);
    if (got != expected) {
      detail = "symmetric(" + std::to_string(n) + ") = " + std::to_string(got) + ", expected " +
               std::to_string(expected);
      return false;
    }
    if (secs > limit) {
      detail = "symmetric(" + std::to_string(n) + ") took " + std::to_string(secs) + " s";
      return false;
    }
    return true;
  };
  return timed(5, 120, 10.0) && timed(6, 720, 120.0);
}

bool c5_witness_realization(std::string& detail) {
  auto t0 = Clock::now();
  GroupPtr g = binary_icosahedral_group();
  AnalysisReport r = jordan_constant(g);
  double secs = seconds_since(t0);
  if (r.jordan_constant != 60 || BigInt(static_cast<unsigned long>(r.jordan_constant)) !=
                                     collins_value(2).value) {
    detail = "constant is " + std::to_string(r.jordan_constant) + ", expected 60";
    return false;
  }
  if (r.witness_abelian.members() != center_of(g).members() || r.witness_abelian.size() != 2) {
    detail = "witness is not the order-2 center";
    return false;
  }
  if (secs > 5.0) {
    detail = "took " + std::to_string(secs) + " s (limit 5)";
    return false;
  }
  return true;
}

bool c6_alternating_growth(std::string& detail) {
  std::uint64_t expected = 60;  // n!/2 for n = 5, then *6, *7
  for (std::uint32_t n : {5u, 6u, 7u}) {
    auto t0 = Clock::now();
    NormalAbelianIndex na = min_normal_abelian_index(alternating_group(n));
    double secs = seconds_since(t0);
    if (na.index != expected || na.witness.size() != 1) {
      detail = "alternating(" + std::to_string(n) + ") index " + std::to_string(na.index) +
               ", expected " + std::to_string(expected);
      return false;
    }
    if (n == 7 && secs > 60.0) {
      detail = "alternating(7) took " + std::to_string(secs) + " s (limit 60)";
      return false;
    }
    expected *= n + 1;
  }
  return true;
}

bool c7_zarhin_suite(std::string& detail) {
  auto t0 = Clock::now();
  auto chains = zarhin_chains();
  auto records = run_zarhin_suite();
  if (records.size() != chains.size() || records.size() != 9) {
    detail = "expected 9 records, got " + std::to_string(records.size());
    return false;
  }
  for (std::size_t i = 0; i < records.size(); ++i) {
    const CheckRecord& r = records[i];
    std::uint64_t k = 1;
    for (auto d : chains[i]) k *= d;
    const BigInt* order = nullptr;
    for (const auto& [name, v] : r.quantities)
      if (name == "group_order") order = &v;
    if (!r.passed() || !r.recheck() || r.lhs != k || r.rhs < k) {
      detail = r.input + ": index bound does not hold";
      return false;
    }
    if (!order || *order != BigInt(static_cast<unsigned long>(k * k * k))) {
      detail = r.input + ": group order is not |K|^3";
      return false;
    }
  }
  double secs = seconds_since(t0);
  if (secs > 600.0) {
    detail = "suite took " + std::to_string(secs) + " s (limit 600)";
    return false;
  }
  return true;
}

bool c8_theorem_suite(std::string& detail) {
  const auto& records = corpus_records();
  std::size_t failed = 0;
  for (const auto& r : records)
    if (!r.recheck() || r.status == CheckStatus::failed) ++failed;
  if (failed) {
    detail = std::to_string(failed) + " of " + std::to_string(records.size()) +
             " records failed";
    return false;
  }
  for (const char* id : {"gs-subgroup", "gs-quotient", "extension-bound", "centerless-bound",
                         "core-bound"}) {
    std::size_t n = 0;
    for (const auto& r : records)
      if (r.check_id == id && r.passed()) ++n;
    if (n == 0) {
      detail = std::string("no passing records for ") + id;
      return false;
    }
  }
  return true;
}

bool c9_intersection_property(std::string& detail) {
  const auto& records = corpus_records();
  std::size_t passed = 0;
  for (const auto& r : records) {
    if (r.check_id != "intersection-bound") continue;
    if (r.status != CheckStatus::passed || !r.recheck()) {
      detail = r.input + ": intersection bound violated";
      return false;
    }
    ++passed;
  }
  if (passed == 0) {
    detail = "no intersection-bound instances were generated";
    return false;
  }
  return true;
}

bool c10_determinism(std::string& detail) {
  const char* bin = std::getenv("JK_CLI_BIN");
  if (!bin) {
    detail = "JK_CLI_BIN not set";
    return false;
  }
  auto dir = work_root() / "determinism";
  fs::create_directories(dir);
  auto shell = [&](const std::string& args) {
    std::string cmd = std::string("'") + bin + "' " + args + " > /dev/null 2>&1";
    int raw = std::system(cmd.c_str());
    return raw != -1 && WIFEXITED(raw) && WEXITSTATUS(raw) == 0;
  };
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  };
  auto grp = dir / "s4.group.json";
  auto r1 = dir / "report1.json", r2 = dir / "report2.json", r3 = dir / "report3.json";
  if (!shell("construct --family symmetric --n 4 --out '" + grp.string() + "'") ||
      !shell("analyze --in '" + grp.string() + "' --out '" + r1.string() + "'") ||
      !shell("analyze --in '" + grp.string() + "' --out '" + r2.string() + "'") ||
      !shell("analyze --in '" + grp.string() + "' --out '" + r3.string() + "' --jobs 4")) {
    detail = "a CLI run failed";
    return false;
  }
  std::string a = slurp(r1), b = slurp(r2), c = slurp(r3);
  if (a.empty() || a != b || a != c) {
    detail = "reports differ across runs/parallelism";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    bool (*fn)(std::string&);
  };
  const Criterion criteria[] = {
      {"minkowski-table", c1_minkowski_table},
      {"collins-table", c2_collins_table},
      {"lower-bound-consistency", c3_lower_bound_consistency},
      {"jordan-oracle-values", c4_jordan_oracle_values},
      {"witness-realization", c5_witness_realization},
      {"alternating-growth", c6_alternating_growth},
      {"zarhin-suite", c7_zarhin_suite},
      {"theorem-suite", c8_theorem_suite},
      {"intersection-property", c9_intersection_property},
      {"determinism", c10_determinism},
  };

  int failures = 0;
  int num = 0;
  for (const auto& c : criteria) {
    ++num;
    std::string detail;
    bool ok = false;
    auto t0 = Clock::now();
    try {
      ok = c.fn(detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    double secs = seconds_since(t0);
    std::printf("[%02d] %-24s %s  (%.2f s)%s%s\n", num, c.name, ok ? "PASS" : "FAIL", secs,
                detail.empty() ? "" : "  - ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  if (failures) std::printf("%d of 10 criteria failed\n", failures);
  return failures ? 1 : 0;
}
