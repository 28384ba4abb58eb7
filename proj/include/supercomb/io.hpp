#pragma once

#include <json.hpp>

#include "supercomb/selection.hpp"

namespace supercomb {
namespace io {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

json load_json_file(const std::string& path);

// Parsers establish every structural invariant; failures carry the JSON
// context in the message.
Subbase parse_subbase(const json& j, std::vector<std::string>* trail = nullptr);
FiniteSpace parse_space(const json& j);
PointFn parse_point_fn(const json& j);
SetValuedMap parse_svmap(const json& j, const FiniteSpace& domain, GroundSet codomain);
SelectionInstance parse_selection_instance(const json& j, std::vector<std::string>* trail = nullptr);

struct SoftnessBundle {
  Subbase sb;
  PointFn f;
  std::vector<SoftnessInstance> instances;
};
SoftnessBundle parse_softness_bundle(const json& j, std::vector<std::string>* trail = nullptr);

ojson points_json(Mask m);
ojson family_json(const SetFamily& fam);
ojson subbase_json(const Subbase& sb);
ojson space_json(const FiniteSpace& z);
ojson witness_json(const Witness& w);
ojson named_values_json(const FiniteSpace& z, const std::vector<int>& values);

// Single-document report envelope with a stable field order.
ojson make_report(const std::string& verb, bool holds, const std::optional<Witness>& witness,
                  const std::vector<std::string>& trail, ojson payload);

// One system per NDJSON line: sorted list of sorted point arrays.
std::string mls_line(const MLS& m);
MLS parse_mls_line(const std::string& line, GroundSet ground);
std::vector<MLS> read_mls_ndjson(const std::string& path, GroundSet ground);
std::uint64_t write_mls_ndjson(const std::string& path, GroundSet ground, EnumOptions opts);

std::uint64_t fnv1a64_file(const std::string& path);
std::string cache_directory();

// Ensures the cache file for n exists and checksum-validates; enumerates on
// a miss, writing atomically (temp file, then rename).  A corrupt cache is
// kept under a .bad suffix and regenerated.
std::string cache_mls(int n, std::vector<std::string>* trail = nullptr);

}  // namespace io
}  // namespace supercomb
