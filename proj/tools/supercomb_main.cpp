#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "supercomb/fixtures.hpp"
#include "supercomb/io.hpp"

using namespace supercomb;
using io::ojson;

namespace {

void emit(const ojson& report) { std::cout << report.dump(2) << "\n"; }

std::vector<int> split_points(const std::string& arg) {
  std::vector<int> pts;
  std::string cur;
  for (char c : arg + ",") {
    if (c == ',') {
      if (!cur.empty()) pts.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return pts;
}

int run_check_subbase(const std::string& file, bool strict) {
  std::vector<std::string> trail;
  Subbase sb = io::parse_subbase(io::load_json_file(file), &trail);
  if (strict) sb.strictness = Strictness::PaperStrict;
  Verdict v = validate_subbase(sb);
  trail.insert(trail.end(), v.trail.begin(), v.trail.end());
  ojson payload;
  payload["n"] = sb.family.ground.n;
  payload["members"] = sb.family.members.size();
  payload["strictness"] = sb.strictness == Strictness::VanMill ? "vanmill" : "paperstrict";
  emit(io::make_report("check-subbase", v.holds, v.witness, trail, payload));
  return v.holds ? 0 : 1;
}

int run_hull(const std::string& file, const std::string& set_arg) {
  std::vector<std::string> trail;
  Subbase sb = io::parse_subbase(io::load_json_file(file), &trail);
  const Mask b = mask_from_points(split_points(set_arg), sb.family.ground);
  ConvexHullResult r = hull(sb, b);
  ojson payload;
  payload["input"] = io::points_json(r.input);
  payload["hull"] = io::points_json(r.hull);
  ojson sup = ojson::array();
  for (Mask s : r.supporting) sup.push_back(io::points_json(s));
  payload["supporting"] = sup;
  payload["convex"] = is_convex(sb, b).holds;
  emit(io::make_report("hull", true, std::nullopt, trail, payload));
  return 0;
}

int run_xi(const std::string& file, int x, const std::string& set_arg) {
  std::vector<std::string> trail;
  Subbase sb = io::parse_subbase(io::load_json_file(file), &trail);
  const Mask f = mask_from_points(split_points(set_arg), sb.family.ground);
  ojson payload;
  payload["x"] = x;
  payload["set"] = io::points_json(f);
  try {
    const int p = xi(sb, x, f);
    payload["xi"] = p;
    emit(io::make_report("xi", true, std::nullopt, trail, payload));
    return 0;
  } catch (const Error& e) {
    if (e.code() != Errc::NotSingleton) throw;
    emit(io::make_report("xi", false, Witness{"not-singleton", {}, {}, e.what()}, trail, payload));
    return 1;
  }
}

int run_mls_count(int n, int par) {
  const std::uint64_t count = count_mls(GroundSet(n), EnumOptions{par});
  ojson payload;
  payload["n"] = n;
  payload["count"] = count;
  emit(io::make_report("mls-count", true, std::nullopt, {}, payload));
  return 0;
}

int run_mls_enum(int n, const std::string& out) {
  const std::uint64_t count = io::write_mls_ndjson(out, GroundSet(n), EnumOptions{});
  ojson payload;
  payload["n"] = n;
  payload["count"] = count;
  emit(io::make_report("mls-enum", true, std::nullopt, {}, payload));
  return 0;
}

int run_lambda_apply(const std::string& mapfile, const std::string& mlsfile) {
  const PointFn f = io::parse_point_fn(io::load_json_file(mapfile));
  const std::vector<MLS> systems = io::read_mls_ndjson(mlsfile, GroundSet(f.n));
  ojson mapped = ojson::array();
  for (const MLS& m : systems) {
    const MLS image = lambda_map(f, m);
    ojson sets = ojson::array();
    for (Mask s : image.minimal) sets.push_back(io::points_json(s));
    mapped.push_back(sets);
  }
  ojson payload;
  payload["n"] = f.n;
  payload["m"] = f.m;
  payload["count"] = systems.size();
  payload["mapped"] = mapped;
  emit(io::make_report("lambda-apply", true, std::nullopt, {}, payload));
  return 0;
}

int run_select(const std::string& file) {
  std::vector<std::string> trail;
  SelectionInstance inst = io::parse_selection_instance(io::load_json_file(file), &trail);
  ojson payload;
  payload["points"] = inst.space.points;
  try {
    const PointMap h =
        inst.closed_set == 0 ? select(inst.space, inst.phi, inst.sb) : select_extend(inst);
    payload["selection"] = io::named_values_json(inst.space, h.values);
    emit(io::make_report("select", true, std::nullopt, trail, payload));
    return 0;
  } catch (const PreconditionError& e) {
    trail.push_back("precondition failed: " + e.stage());
    emit(io::make_report("select", false, e.verdict().witness, trail, payload));
    return 1;
  } catch (const Error& e) {
    if (e.code() != Errc::NotExtendable) throw;
    emit(io::make_report("select", false, Witness{"not-extendable", {}, {}, e.what()}, trail,
                         payload));
    return 1;
  }
}

ojson outcomes_json(const std::vector<InstanceOutcome>& outcomes,
                    const std::vector<SoftnessInstance>& instances) {
  ojson results = ojson::array();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    ojson r;
    if (outcomes[i].status == InstanceOutcome::Status::Selected) {
      r["status"] = "selected";
      r["g"] = io::named_values_json(instances[i].space, outcomes[i].g);
    } else {
      r["status"] = "not-extendable";
    }
    results.push_back(r);
  }
  return results;
}

int run_check_soft(const std::string& file) {
  std::vector<std::string> trail;
  io::SoftnessBundle bundle = io::parse_softness_bundle(io::load_json_file(file), &trail);
  try {
    CheckResult res = check_soft(bundle.f, bundle.sb, bundle.instances);
    trail.insert(trail.end(), res.verdict.trail.begin(), res.verdict.trail.end());
    ojson payload;
    payload["instances"] = bundle.instances.size();
    payload["results"] = outcomes_json(res.outcomes, bundle.instances);
    emit(io::make_report("check-soft", res.verdict.holds, res.verdict.witness, trail, payload));
    return res.verdict.holds ? 0 : 1;
  } catch (const PreconditionError& e) {
    trail.push_back("hypothesis failed: " + e.stage());
    emit(io::make_report("check-soft", false, e.verdict().witness, trail, ojson::object()));
    return 1;
  }
}

int run_check_invertible(const std::string& mapfile, const std::string& subbase_file, int max_z) {
  std::vector<std::string> trail;
  const PointFn f = io::parse_point_fn(io::load_json_file(mapfile));
  const Subbase sb = io::parse_subbase(io::load_json_file(subbase_file), &trail);
  if (f.n != sb.family.ground.n)
    throw Error(Errc::InvariantError, "map domain disagrees with the subbase ground");
  if (max_z < 1 || max_z > 4)
    throw Error(Errc::UsageError, "--max-z must be between 1 and 4");
  std::vector<CorpusEntry> corpus;
  for (int n = 1; n <= max_z; ++n)
    for (const FiniteSpace& z : fixtures::all_topologies(n))
      for (const auto& g : fixtures::continuous_point_maps(z, f.m)) corpus.push_back({z, g});
  try {
    CheckResult res = check_invertible(f, sb, corpus);
    ojson payload;
    payload["corpus_size"] = corpus.size();
    emit(io::make_report("check-invertible", res.verdict.holds, res.verdict.witness, trail,
                         payload));
    return res.verdict.holds ? 0 : 1;
  } catch (const PreconditionError& e) {
    trail.push_back("hypothesis failed: " + e.stage());
    emit(io::make_report("check-invertible", false, e.verdict().witness, trail, ojson::object()));
    return 1;
  } catch (const Error& e) {
    if (e.code() != Errc::NotSurjective) throw;
    trail.push_back("hypothesis failed: NotSurjective");
    emit(io::make_report("check-invertible", false, Witness{"not-surjective", {}, {}, e.what()},
                         trail, ojson::object()));
    return 1;
  }
}

int run_export_dot(int n, const std::string& out) {
  if (n > 6) throw Error(Errc::GroundTooLarge, "export-dot is capped at 6 points");
  std::vector<std::string> trail;
  const std::string path = io::cache_mls(n, &trail);
  const std::vector<MLS> systems = io::read_mls_ndjson(path, GroundSet(n));
  std::ofstream dot(out, std::ios::trunc);
  if (!dot) throw Error(Errc::ParseError, out + ": cannot open for writing");
  dot << "graph lambda_" << n << " {\n";
  for (std::size_t i = 0; i < systems.size(); ++i)
    dot << "  m" << i << " [label=\"" << io::mls_line(systems[i]) << "\"];\n";
  std::size_t edges = 0;
  for (std::size_t i = 0; i < systems.size(); ++i) {
    for (std::size_t j = i + 1; j < systems.size(); ++j) {
      // adjacent when the minimal families swap exactly one member
      std::size_t only_i = 0, only_j = 0, a = 0, b = 0;
      const auto& mi = systems[i].minimal;
      const auto& mj = systems[j].minimal;
      while (a < mi.size() && b < mj.size()) {
        if (mi[a] == mj[b]) {
          ++a;
          ++b;
        } else if (mi[a] < mj[b]) {
          ++only_i;
          ++a;
        } else {
          ++only_j;
          ++b;
        }
      }
      only_i += mi.size() - a;
      only_j += mj.size() - b;
      if (only_i == 1 && only_j == 1) {
        dot << "  m" << i << " -- m" << j << ";\n";
        ++edges;
      }
    }
  }
  dot << "}\n";
  dot.close();
  ojson payload;
  payload["n"] = n;
  payload["vertices"] = systems.size();
  payload["edges"] = edges;
  emit(io::make_report("export-dot", true, std::nullopt, trail, payload));
  return 0;
}

int run_bench(int n, int par, int repeat) {
  std::uint64_t count = 0;
  for (int r = 0; r < repeat; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    count = count_mls(GroundSet(n), EnumOptions{par});
    const auto t1 = std::chrono::steady_clock::now();
    std::cerr << "run " << (r + 1) << "/" << repeat << ": n=" << n << " count=" << count
              << " wall=" << std::chrono::duration<double>(t1 - t0).count() << "s\n";
  }
  std::vector<std::string> trail;
  const std::string path = io::cache_mls(n, &trail);
  const io::json meta = io::load_json_file(path.substr(0, path.size() - 6) + "meta");
  const bool holds = meta["count"] == count;
  ojson payload;
  payload["n"] = n;
  payload["count"] = count;
  payload["repeat"] = repeat;
  payload["cache_count"] = meta["count"].get<std::uint64_t>();
  emit(io::make_report("bench", holds, std::nullopt, trail, payload));
  return holds ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite laboratory for binary normal subbases, superextensions and selections"};
  app.require_subcommand(1);

  std::string file, set_arg, out, mapfile, mlsfile, subbase_file;
  bool strict = false;
  int x = 0, n = 1, par = 1, repeat = 1, max_z = 3;

  auto* c_sub = app.add_subcommand("check-subbase", "validate the subbase axioms");
  c_sub->add_option("file", file)->required();
  c_sub->add_flag("--strict-lattice", strict, "demand union/intersection closure");

  auto* c_hull = app.add_subcommand("hull", "convex hull of a point set");
  c_hull->add_option("file", file)->required();
  c_hull->add_option("--set", set_arg, "comma-separated points")->required();

  auto* c_xi = app.add_subcommand("xi", "nearest-point map");
  c_xi->add_option("file", file)->required();
  c_xi->add_option("--x", x, "base point")->required();
  c_xi->add_option("--set", set_arg, "comma-separated target set")->required();

  auto* c_count = app.add_subcommand("mls-count", "count maximal linked systems");
  c_count->add_option("n", n)->required();
  c_count->add_option("--par", par, "search partitions");

  auto* c_enum = app.add_subcommand("mls-enum", "enumerate maximal linked systems to NDJSON");
  c_enum->add_option("n", n)->required();
  c_enum->add_option("--out", out)->required();

  auto* c_lambda = app.add_subcommand("lambda-apply", "apply the functor to systems from a file");
  c_lambda->add_option("mapfile", mapfile)->required();
  c_lambda->add_option("--mls-file", mlsfile)->required();

  auto* c_select = app.add_subcommand("select", "run the selection construction on an instance");
  c_select->add_option("instance", file)->required();

  auto* c_soft = app.add_subcommand("check-soft", "verify partial-lift extension on instances");
  c_soft->add_option("instance", file)->required();

  auto* c_inv = app.add_subcommand("check-invertible", "verify lifting over a space corpus");
  c_inv->add_option("mapfile", mapfile)->required();
  c_inv->add_option("--subbase", subbase_file)->required();
  c_inv->add_option("--max-z", max_z, "largest corpus space (1..4)");

  auto* c_dot = app.add_subcommand("export-dot", "write the system graph in DOT form");
  c_dot->add_option("n", n)->required();
  c_dot->add_option("--out", out)->required();

  auto* c_bench = app.add_subcommand("bench", "time the enumeration and check the cache");
  c_bench->add_option("n", n)->required();
  c_bench->add_option("--par", par, "search partitions");
  c_bench->add_option("--repeat", repeat, "timing repetitions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(c_sub)) return run_check_subbase(file, strict);
    if (app.got_subcommand(c_hull)) return run_hull(file, set_arg);
    if (app.got_subcommand(c_xi)) return run_xi(file, x, set_arg);
    if (app.got_subcommand(c_count)) return run_mls_count(n, par);
    if (app.got_subcommand(c_enum)) return run_mls_enum(n, out);
    if (app.got_subcommand(c_lambda)) return run_lambda_apply(mapfile, mlsfile);
    if (app.got_subcommand(c_select)) return run_select(file);
    if (app.got_subcommand(c_soft)) return run_check_soft(file);
    if (app.got_subcommand(c_inv)) return run_check_invertible(mapfile, subbase_file, max_z);
    if (app.got_subcommand(c_dot)) return run_export_dot(n, out);
    if (app.got_subcommand(c_bench)) return run_bench(n, par, repeat);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
