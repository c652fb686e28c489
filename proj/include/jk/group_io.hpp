#pragma once

#include <json.hpp>

#include <filesystem>
#include <string>

#include "jk/bigint.hpp"
#include "jk/checks.hpp"
#include "jk/constructions.hpp"
#include "jk/corpus.hpp"
#include "jk/jordan.hpp"

namespace jk {

/// All files use insertion-ordered JSON with a fixed key order and dump(2),
/// so identical inputs serialize byte-identically.
using Json = nlohmann::ordered_json;

/// Canonical serialization: two-space indent plus trailing newline.
std::string dump_json(const Json& j);

/// Integers above 2^53-1 become decimal strings (exactness over convenience).
Json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const Json& j);

/// Group files: {"format":"jordan-kit/group","version":1,"kind":...}.
/// Kinds: "spec" (family+params), "permutation" (degree + generators as
/// cycle arrays), "matrix" (dim, p, generators as row arrays), "cayley"
/// (order + row-major table + optional labels).
Json spec_to_json(const GroupSpec& s);
GroupSpec spec_from_json(const Json& j);  // ErrKind::parse_error on malformed input
void write_group_file(const std::filesystem::path& path, const GroupSpec& s);
GroupSpec read_group_file(const std::filesystem::path& path);

/// Analysis report file; `elapsed` is deliberately not serialized so repeated
/// runs of the same input are byte-identical.
Json report_to_json(const AnalysisReport& r, const GroupSpec& input);

Json record_to_json(const CheckRecord& r);

Json manifest_to_json(const CorpusManifest& m);
CorpusManifest manifest_from_json(const Json& j);
void write_manifest(const std::filesystem::path& path, const CorpusManifest& m);
CorpusManifest read_manifest(const std::filesystem::path& path);

/// Reads a whole file; ErrKind::parse_error if unreadable or invalid JSON.
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace jk
