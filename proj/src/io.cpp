#include "supercomb/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

namespace supercomb {
namespace io {

namespace fs = std::filesystem;

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, path + ": " + e.what());
  }
}

namespace {

void check_keys(const json& j, const std::string& ctx, const std::set<std::string>& required,
                const std::set<std::string>& optional = {}) {
  if (!j.is_object()) throw Error(Errc::SchemaError, ctx + ": expected an object");
  for (const auto& key : required)
    if (!j.contains(key)) throw Error(Errc::SchemaError, ctx + ": missing field '" + key + "'");
  for (const auto& item : j.items())
    if (!required.contains(item.key()) && !optional.contains(item.key()))
      throw Error(Errc::SchemaError, ctx + ": unknown field '" + item.key() + "'");
  if (j.contains("schema_version") && j["schema_version"] != kSchemaVersion)
    throw Error(Errc::SchemaError, ctx + ": unsupported schema_version");
}

int get_int(const json& j, const std::string& ctx) {
  if (!j.is_number_integer()) throw Error(Errc::SchemaError, ctx + ": expected an integer");
  return j.get<int>();
}

std::vector<int> get_point_list(const json& j, const std::string& ctx) {
  if (!j.is_array()) throw Error(Errc::SchemaError, ctx + ": expected an array of points");
  std::vector<int> pts;
  for (std::size_t i = 0; i < j.size(); ++i)
    pts.push_back(get_int(j[i], ctx + "[" + std::to_string(i) + "]"));
  return pts;
}

Mask get_mask(const json& j, GroundSet g, const std::string& ctx) {
  try {
    return mask_from_points(get_point_list(j, ctx), g);
  } catch (const Error& e) {
    if (e.code() == Errc::OutOfRangePoint) throw Error(Errc::SchemaError, ctx + ": " + e.what());
    throw;
  }
}

}  // namespace

Subbase parse_subbase(const json& j, std::vector<std::string>* trail) {
  check_keys(j, "subbase", {"n", "subbase"}, {"strictness", "schema_version"});
  GroundSet g(get_int(j["n"], "subbase.n"));
  if (!j["subbase"].is_array()) throw Error(Errc::SchemaError, "subbase.subbase: expected an array");
  std::vector<std::vector<int>> raw;
  for (std::size_t i = 0; i < j["subbase"].size(); ++i)
    raw.push_back(get_point_list(j["subbase"][i], "subbase.subbase[" + std::to_string(i) + "]"));
  Strictness strictness = Strictness::VanMill;
  if (j.contains("strictness")) {
    const std::string s = j["strictness"].get<std::string>();
    if (s == "vanmill")
      strictness = Strictness::VanMill;
    else if (s == "paperstrict")
      strictness = Strictness::PaperStrict;
    else
      throw Error(Errc::SchemaError, "subbase.strictness: expected 'vanmill' or 'paperstrict'");
  }
  SetFamily fam;
  try {
    fam = normalize_family(raw, g, trail);
  } catch (const Error& e) {
    if (e.code() == Errc::OutOfRangePoint)
      throw Error(Errc::SchemaError, std::string("subbase.subbase: ") + e.what());
    throw;
  }
  return Subbase{std::move(fam), strictness};
}

FiniteSpace parse_space(const json& j) {
  check_keys(j, "space", {"points", "opens"}, {"schema_version"});
  FiniteSpace z;
  if (!j["points"].is_array() || j["points"].empty())
    throw Error(Errc::SchemaError, "space.points: expected a nonempty array of names");
  for (const auto& p : j["points"]) {
    if (!p.is_string()) throw Error(Errc::SchemaError, "space.points: expected strings");
    z.points.push_back(p.get<std::string>());
  }
  if (z.size() > 20) throw Error(Errc::SchemaError, "space.points: at most 20 points");
  for (std::size_t i = 0; i < z.points.size(); ++i)
    for (std::size_t k = i + 1; k < z.points.size(); ++k)
      if (z.points[i] == z.points[k])
        throw Error(Errc::SchemaError, "space.points: duplicate name '" + z.points[i] + "'");
  GroundSet idx(z.size());
  if (!j["opens"].is_array()) throw Error(Errc::SchemaError, "space.opens: expected an array");
  for (std::size_t i = 0; i < j["opens"].size(); ++i)
    z.opens.push_back(get_mask(j["opens"][i], idx, "space.opens[" + std::to_string(i) + "]"));
  std::sort(z.opens.begin(), z.opens.end());
  z.opens.erase(std::unique(z.opens.begin(), z.opens.end()), z.opens.end());
  Verdict v = is_topology(z.points, z.opens);
  if (!v.holds)
    throw Error(Errc::InvariantError, "space.opens: not a topology (" + v.witness->note + ")");
  return z;
}

PointFn parse_point_fn(const json& j) {
  check_keys(j, "map", {"n", "m", "values"}, {"schema_version"});
  const int n = get_int(j["n"], "map.n");
  const int m = get_int(j["m"], "map.m");
  if (!j["values"].is_array()) throw Error(Errc::SchemaError, "map.values: expected an array");
  std::vector<int> values;
  for (std::size_t i = 0; i < j["values"].size(); ++i)
    values.push_back(get_int(j["values"][i], "map.values[" + std::to_string(i) + "]"));
  try {
    return make_point_fn(n, m, std::move(values));
  } catch (const Error& e) {
    throw Error(Errc::InvariantError, std::string("map: ") + e.what());
  }
}

namespace {

// {"values": {"point-name": value}} with exactly the given key set.
json get_values_object(const json& j, const std::string& ctx) {
  check_keys(j, ctx, {"values"}, {"schema_version"});
  if (!j["values"].is_object()) throw Error(Errc::SchemaError, ctx + ".values: expected an object");
  return j["values"];
}

}  // namespace

SetValuedMap parse_svmap(const json& j, const FiniteSpace& domain, GroundSet codomain) {
  const json values = get_values_object(j, "phi");
  std::vector<Mask> masks(domain.points.size(), 0);
  std::vector<bool> seen(domain.points.size(), false);
  for (const auto& item : values.items()) {
    const int p = domain.point_index(item.key());
    if (p < 0) throw Error(Errc::SchemaError, "phi.values: unknown point '" + item.key() + "'");
    masks[static_cast<std::size_t>(p)] =
        get_mask(item.value(), codomain, "phi.values." + item.key());
    seen[static_cast<std::size_t>(p)] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i])
      throw Error(Errc::SchemaError, "phi.values: missing point '" + domain.points[i] + "'");
  try {
    return make_set_valued_map(domain, codomain, std::move(masks));
  } catch (const Error& e) {
    throw Error(Errc::InvariantError, std::string("phi: ") + e.what());
  }
}

SelectionInstance parse_selection_instance(const json& j, std::vector<std::string>* trail) {
  check_keys(j, "instance", {"space", "subbase", "A", "g", "phi"}, {"schema_version"});
  SelectionInstance inst;
  inst.space = parse_space(j["space"]);
  inst.sb = parse_subbase(j["subbase"], trail);
  inst.phi = parse_svmap(j["phi"], inst.space, inst.sb.family.ground);
  if (!j["A"].is_array()) throw Error(Errc::SchemaError, "instance.A: expected an array of names");
  for (const auto& name : j["A"]) {
    const int p = inst.space.point_index(name.get<std::string>());
    if (p < 0)
      throw Error(Errc::SchemaError, "instance.A: unknown point '" + name.get<std::string>() + "'");
    inst.closed_set |= Mask{1} << p;
  }
  if (!inst.space.is_closed(inst.closed_set))
    throw Error(Errc::InvariantError, "instance.A: not closed in the space");
  const json gvals = get_values_object(j["g"], "g");
  inst.g.assign(inst.space.points.size(), -1);
  for (const auto& item : gvals.items()) {
    const int p = inst.space.point_index(item.key());
    if (p < 0) throw Error(Errc::SchemaError, "g.values: unknown point '" + item.key() + "'");
    if (((inst.closed_set >> p) & 1) == 0)
      throw Error(Errc::InvariantError, "g.values: '" + item.key() + "' lies outside A");
    inst.g[static_cast<std::size_t>(p)] = get_int(item.value(), "g.values." + item.key());
  }
  for (Mask rest = inst.closed_set; rest; rest &= rest - 1) {
    const int p = lowest_point(rest);
    const int gp = inst.g[static_cast<std::size_t>(p)];
    if (gp < 0)
      throw Error(Errc::InvariantError,
                  "g.values: missing point '" + inst.space.points[static_cast<std::size_t>(p)] + "'");
    if (!inst.sb.family.ground.contains(gp))
      throw Error(Errc::InvariantError, "g.values: value outside the ground set");
    if (((inst.phi.values[static_cast<std::size_t>(p)] >> gp) & 1) == 0)
      throw Error(Errc::InvariantError,
                  "g.values: value at '" + inst.space.points[static_cast<std::size_t>(p)] +
                      "' is not in phi");
  }
  return inst;
}

SoftnessBundle parse_softness_bundle(const json& j, std::vector<std::string>* trail) {
  check_keys(j, "bundle", {"subbase", "f", "instances"}, {"schema_version"});
  SoftnessBundle b;
  b.sb = parse_subbase(j["subbase"], trail);
  b.f = parse_point_fn(j["f"]);
  if (b.f.n != b.sb.family.ground.n)
    throw Error(Errc::InvariantError, "f: domain size disagrees with the subbase ground");
  if (!j["instances"].is_array())
    throw Error(Errc::SchemaError, "bundle.instances: expected an array");
  for (std::size_t idx = 0; idx < j["instances"].size(); ++idx) {
    const json& ij = j["instances"][idx];
    const std::string ctx = "instances[" + std::to_string(idx) + "]";
    check_keys(ij, ctx, {"space", "A", "k", "h"}, {"schema_version"});
    SoftnessInstance inst;
    inst.space = parse_space(ij["space"]);
    if (!ij["A"].is_array()) throw Error(Errc::SchemaError, ctx + ".A: expected an array");
    for (const auto& name : ij["A"]) {
      const int p = inst.space.point_index(name.get<std::string>());
      if (p < 0) throw Error(Errc::SchemaError, ctx + ".A: unknown point");
      inst.closed_set |= Mask{1} << p;
    }
    if (!inst.space.is_closed(inst.closed_set))
      throw Error(Errc::InvariantError, ctx + ".A: not closed in the space");
    const json kv = get_values_object(ij["k"], ctx + ".k");
    inst.k.assign(inst.space.points.size(), -1);
    for (const auto& item : kv.items()) {
      const int p = inst.space.point_index(item.key());
      if (p < 0) throw Error(Errc::SchemaError, ctx + ".k: unknown point '" + item.key() + "'");
      const int v = get_int(item.value(), ctx + ".k." + item.key());
      if (v < 0 || v >= b.f.m) throw Error(Errc::InvariantError, ctx + ".k: value outside codomain");
      inst.k[static_cast<std::size_t>(p)] = v;
    }
    for (std::size_t p = 0; p < inst.k.size(); ++p)
      if (inst.k[p] < 0)
        throw Error(Errc::InvariantError, ctx + ".k: missing point '" + inst.space.points[p] + "'");
    PointMap kmap;
    kmap.domain = inst.space;
    kmap.codomain_size = b.f.m;
    kmap.values = inst.k;
    if (!is_continuous(kmap).holds)
      throw Error(Errc::InvariantError, ctx + ".k: map is not continuous");
    const json hv = get_values_object(ij["h"], ctx + ".h");
    inst.h.assign(inst.space.points.size(), -1);
    for (const auto& item : hv.items()) {
      const int p = inst.space.point_index(item.key());
      if (p < 0) throw Error(Errc::SchemaError, ctx + ".h: unknown point '" + item.key() + "'");
      if (((inst.closed_set >> p) & 1) == 0)
        throw Error(Errc::InvariantError, ctx + ".h: '" + item.key() + "' lies outside A");
      const int v = get_int(item.value(), ctx + ".h." + item.key());
      if (v < 0 || v >= b.f.n) throw Error(Errc::InvariantError, ctx + ".h: value outside domain");
      inst.h[static_cast<std::size_t>(p)] = v;
    }
    for (Mask rest = inst.closed_set; rest; rest &= rest - 1) {
      const int p = lowest_point(rest);
      const int hp = inst.h[static_cast<std::size_t>(p)];
      if (hp < 0)
        throw Error(Errc::InvariantError, ctx + ".h: missing point '" +
                                              inst.space.points[static_cast<std::size_t>(p)] + "'");
      if (b.f(hp) != inst.k[static_cast<std::size_t>(p)])
        throw Error(Errc::InvariantError, ctx + ": f(h) disagrees with k on A");
    }
    b.instances.push_back(std::move(inst));
  }
  return b;
}

ojson points_json(Mask m) {
  ojson a = ojson::array();
  for (int p : points_of(m)) a.push_back(p);
  return a;
}

ojson family_json(const SetFamily& fam) {
  ojson a = ojson::array();
  for (Mask m : fam.members) a.push_back(points_json(m));
  return a;
}

ojson subbase_json(const Subbase& sb) {
  ojson j;
  j["n"] = sb.family.ground.n;
  j["subbase"] = family_json(sb.family);
  j["strictness"] = sb.strictness == Strictness::VanMill ? "vanmill" : "paperstrict";
  return j;
}

ojson space_json(const FiniteSpace& z) {
  ojson j;
  j["points"] = z.points;
  ojson opens = ojson::array();
  for (Mask o : z.opens) opens.push_back(points_json(o));
  j["opens"] = opens;
  return j;
}

ojson witness_json(const Witness& w) {
  ojson j;
  j["kind"] = w.kind;
  ojson sets = ojson::array();
  for (Mask m : w.sets) sets.push_back(points_json(m));
  j["sets"] = sets;
  j["points"] = w.points;
  j["note"] = w.note;
  return j;
}

ojson named_values_json(const FiniteSpace& z, const std::vector<int>& values) {
  ojson j;
  for (std::size_t p = 0; p < z.points.size(); ++p)
    if (p < values.size() && values[p] >= 0) j[z.points[p]] = values[p];
  return j;
}

ojson make_report(const std::string& verb, bool holds, const std::optional<Witness>& witness,
                  const std::vector<std::string>& trail, ojson payload) {
  ojson j;
  j["schema_version"] = kSchemaVersion;
  j["verb"] = verb;
  j["holds"] = holds;
  j["witness"] = witness ? witness_json(*witness) : ojson(nullptr);
  j["trail"] = trail;
  j["payload"] = std::move(payload);
  return j;
}

std::string mls_line(const MLS& m) {
  std::string line = "[";
  bool first_set = true;
  for (Mask s : m.minimal) {
    if (!first_set) line += ",";
    first_set = false;
    line += "[";
    bool first_pt = true;
    for (int p : points_of(s)) {
      if (!first_pt) line += ",";
      first_pt = false;
      line += std::to_string(p);
    }
    line += "]";
  }
  line += "]";
  return line;
}

MLS parse_mls_line(const std::string& line, GroundSet ground) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, std::string("mls line: ") + e.what());
  }
  if (!j.is_array() || j.empty()) throw Error(Errc::SchemaError, "mls line: expected a nonempty array");
  std::vector<Mask> minimal;
  for (std::size_t i = 0; i < j.size(); ++i)
    minimal.push_back(get_mask(j[i], ground, "mls[" + std::to_string(i) + "]"));
  return mls_from_minimal(ground, std::move(minimal));
}

std::vector<MLS> read_mls_ndjson(const std::string& path, GroundSet ground) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, path + ": cannot open file");
  std::vector<MLS> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(parse_mls_line(line, ground));
  }
  return out;
}

namespace {

struct Fnv1a {
  std::uint64_t state = 14695981039346656037ull;
  void feed(const char* data, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) {
      state ^= static_cast<unsigned char>(data[i]);
      state *= 1099511628211ull;
    }
  }
};

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

std::uint64_t write_ndjson_atomic(const std::string& path, GroundSet ground, EnumOptions opts,
                                  std::uint64_t* count_out) {
  const std::string tmp = path + ".tmp";
  std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::ParseError, tmp + ": cannot open for writing");
  Fnv1a sum;
  std::uint64_t count = 0;
  std::string buffer;
  for_each_mls(ground, opts, [&](const MLS& m) {
    buffer = mls_line(m);
    buffer += "\n";
    sum.feed(buffer.data(), buffer.size());
    out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
    ++count;
  });
  out.close();
  if (!out) throw Error(Errc::ParseError, tmp + ": write failed");
  fs::rename(tmp, path);
  if (count_out) *count_out = count;
  return sum.state;
}

}  // namespace

std::uint64_t write_mls_ndjson(const std::string& path, GroundSet ground, EnumOptions opts) {
  std::uint64_t count = 0;
  write_ndjson_atomic(path, ground, opts, &count);
  return count;
}

std::uint64_t fnv1a64_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, path + ": cannot open file");
  Fnv1a sum;
  char buf[1 << 16];
  while (in) {
    in.read(buf, sizeof buf);
    sum.feed(buf, static_cast<std::size_t>(in.gcount()));
  }
  return sum.state;
}

std::string cache_directory() {
  const char* env = std::getenv("SUPERCOMB_CACHE_DIR");
  return env && *env ? std::string(env) : std::string(".supercomb-cache");
}

std::string cache_mls(int n, std::vector<std::string>* trail) {
  GroundSet ground(n);
  if (n > kMaxEnumPoints) throw Error(Errc::GroundTooLarge, "cache is capped at 7 points");
  const fs::path dir = cache_directory();
  fs::create_directories(dir);
  const fs::path data = dir / ("mls-" + std::to_string(n) + ".ndjson");
  const fs::path meta = dir / ("mls-" + std::to_string(n) + ".meta");
  if (fs::exists(data) && fs::exists(meta)) {
    try {
      const json m = load_json_file(meta.string());
      check_keys(m, "meta", {"schema_version", "n", "count", "checksum"});
      if (m["n"] == n && m["checksum"] == "fnv1a64:" + hex64(fnv1a64_file(data.string()))) {
        if (trail) trail->push_back("cache hit: " + data.string());
        return data.string();
      }
    } catch (const Error&) {
      // fall through to regeneration
    }
    fs::rename(data, fs::path(data.string() + ".bad"));
    if (fs::exists(meta)) fs::rename(meta, fs::path(meta.string() + ".bad"));
    if (trail)
      trail->push_back("CacheCorrupt: checksum mismatch, old file kept as " + data.string() +
                       ".bad");
  } else if (fs::exists(data) || fs::exists(meta)) {
    if (fs::exists(data)) fs::rename(data, fs::path(data.string() + ".bad"));
    if (fs::exists(meta)) fs::rename(meta, fs::path(meta.string() + ".bad"));
    if (trail) trail->push_back("CacheCorrupt: incomplete cache entry, regenerating");
  }
  std::uint64_t count = 0;
  const std::uint64_t sum = write_ndjson_atomic(data.string(), ground, EnumOptions{}, &count);
  ojson m;
  m["schema_version"] = kSchemaVersion;
  m["n"] = n;
  m["count"] = count;
  m["checksum"] = "fnv1a64:" + hex64(sum);
  const std::string tmp = meta.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << m.dump(2) << "\n";
  }
  fs::rename(tmp, meta);
  if (trail) trail->push_back("cache write: " + data.string());
  return data.string();
}

}  // namespace io
}  // namespace supercomb
