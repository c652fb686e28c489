#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "jk/checks.hpp"
#include "jk/constructions.hpp"

namespace jk {

/// Verification corpus manifest: groups (by file), product pairs, split
/// extensions (with explicit normal/complement member lists so the splitting
/// is re-validated from the file data), and pinned Jordan constants.
struct CorpusManifest {
  struct Group {
    std::string name;
    std::string path;  // relative to the manifest's directory
  };
  struct Product {
    std::string left, right;  // group names
  };
  struct Split {
    std::string group;
    std::vector<Elem> normal;
    std::vector<Elem> complement;
  };
  std::vector<Group> groups;
  std::vector<Product> products;
  std::vector<Split> splits;
  std::vector<std::pair<std::string, std::uint64_t>> expected_jordan;
};

/// Builds the default corpus (standard families at desk scale, the
/// distinguished order-120 groups, a set of semidirect extensions, and all
/// pairwise direct products of the small seeds up to order 64), writes one
/// group file per entry plus manifest.json into `dir`, and returns the
/// manifest.
CorpusManifest materialize_default_corpus(const std::filesystem::path& dir, const Caps& caps = {});

/// Runs every check the manifest describes; group paths resolve against
/// `base_dir`. Precondition failures surface as skipped records; theorem
/// violations as failed ones.
std::vector<CheckRecord> run_manifest_suite(const CorpusManifest& manifest,
                                            const std::filesystem::path& base_dir,
                                            const Caps& caps = {});

/// All checks for a single group: the subgroup/quotient monotonicity sweep,
/// extension and centerless bounds over (a deterministic selection of) its
/// normal subgroups, core bounds over small-index subgroup classes, and the
/// conjugate-intersection bound.
std::vector<CheckRecord> run_group_checks(const GroupPtr& g, const std::string& name,
                                          const Caps& caps = {});

/// The invariant-factor chains exercised by the zarhin suite.
const std::vector<std::vector<std::uint32_t>>& zarhin_chains();

/// zarhin-index checks over all chains whose |K| is at most `factors_max`
/// (0 = no limit).
std::vector<CheckRecord> run_zarhin_suite(const Caps& caps = {}, std::uint64_t factors_max = 0);

}  // namespace jk
