#include "supercomb/selection.hpp"

#include <algorithm>

namespace supercomb {

namespace {

std::string point_list(const FiniteSpace& z, Mask m) {
  std::string s;
  for (int p : points_of(m)) {
    if (!s.empty()) s += ",";
    s += z.points[static_cast<std::size_t>(p)];
  }
  return "{" + s + "}";
}

void verify_selection(const PointMap& h, const SetValuedMap& phi, const char* what) {
  Verdict cont = is_continuous(h);
  if (!cont.holds)
    throw Error(Errc::InternalCheck, std::string(what) + " produced a discontinuous map");
  for (std::size_t z = 0; z < h.values.size(); ++z)
    if (((phi.values[z] >> h.values[z]) & 1) == 0)
      throw Error(Errc::InternalCheck,
                  std::string(what) + " left the value set at " + phi.domain.points[z]);
}

}  // namespace

PointMap extend_total(const FiniteSpace& z, Mask a, const std::vector<int>& g, int codomain) {
  if (!z.is_closed(a)) throw Error(Errc::NotClosed, "set " + point_list(z, a) + " is not closed");
  if (g.size() != z.points.size())
    throw Error(Errc::InvariantError, "partial map must carry one slot per point");
  PointMap out;
  out.domain = z;
  out.codomain_size = codomain;
  out.values.assign(z.points.size(), 0);
  for (Mask comp : components(z)) {
    int value = -1;
    for (Mask rest = comp & a; rest; rest &= rest - 1) {
      const int p = lowest_point(rest);
      const int gp = g[static_cast<std::size_t>(p)];
      if (value == -1) value = gp;
      if (gp != value)
        throw Error(Errc::NotExtendable,
                    "component " + point_list(z, comp) + " meets the closed set with values " +
                        std::to_string(value) + " and " + std::to_string(gp) +
                        "; the extension hypothesis fails for this pair");
    }
    if (value == -1) value = 0;  // components missing A take the smallest point
    for (Mask rest = comp; rest; rest &= rest - 1)
      out.values[static_cast<std::size_t>(lowest_point(rest))] = value;
  }
  return out;
}

namespace {

// Shared precondition sweep for select/select_extend.
void check_select_preconditions(const SetValuedMap& phi, const Subbase& sb) {
  Verdict v = validate_subbase(sb);
  if (!v.holds) throw PreconditionError(Errc::PreconditionFailed, "BadSubbase", v);
  v = is_s_continuous(phi, sb);
  if (!v.holds) throw PreconditionError(Errc::PreconditionFailed, "NotSContinuous", v);
  for (std::size_t z = 0; z < phi.values.size(); ++z) {
    Verdict c = is_convex(sb, phi.values[z]);
    if (!c.holds) {
      c.witness->note += " (value at " + phi.domain.points[z] + ")";
      throw PreconditionError(Errc::PreconditionFailed, "NotConvexValue", c);
    }
  }
}

PointMap run_xi_selection(const SetValuedMap& phi, const Subbase& sb,
                          const std::vector<int>& base) {
  PointMap h;
  h.domain = phi.domain;
  h.codomain_size = phi.codomain.n;
  for (std::size_t z = 0; z < phi.values.size(); ++z) {
    try {
      h.values.push_back(xi(sb, base[z], phi.values[z]));
    } catch (const Error& e) {
      if (e.code() == Errc::NotSingleton)
        throw Error(Errc::InternalXiFailure, e.what());
      throw;
    }
  }
  return h;
}

}  // namespace

PointMap select(const FiniteSpace& z, const SetValuedMap& phi, const Subbase& sb) {
  if (phi.values.empty()) throw Error(Errc::InvariantError, "empty domain");
  if (z.points != phi.domain.points || z.opens != phi.domain.opens)
    throw Error(Errc::InvariantError, "space and set-valued map domain disagree");
  check_select_preconditions(phi, sb);
  const int x0 = lowest_point(phi.values.front());
  std::vector<int> base(phi.values.size(), x0);
  PointMap h = run_xi_selection(phi, sb, base);
  verify_selection(h, phi, "select");
  return h;
}

PointMap select_extend(const SelectionInstance& inst) {
  const FiniteSpace& z = inst.space;
  for (Mask rest = inst.closed_set; rest; rest &= rest - 1) {
    const int p = lowest_point(rest);
    const int gp = inst.g[static_cast<std::size_t>(p)];
    if (gp < 0 || gp >= inst.phi.codomain.n)
      throw Error(Errc::InvariantError, "partial map undefined on the closed set");
    if (((inst.phi.values[static_cast<std::size_t>(p)] >> gp) & 1) == 0)
      throw Error(Errc::InvariantError,
                  "partial map leaves the value set at " + z.points[static_cast<std::size_t>(p)]);
  }
  check_select_preconditions(inst.phi, inst.sb);
  const PointMap gbar = extend_total(z, inst.closed_set, inst.g, inst.phi.codomain.n);
  PointMap h = run_xi_selection(inst.phi, inst.sb, gbar.values);
  verify_selection(h, inst.phi, "select_extend");
  for (Mask rest = inst.closed_set; rest; rest &= rest - 1) {
    const int p = lowest_point(rest);
    if (h.values[static_cast<std::size_t>(p)] != inst.g[static_cast<std::size_t>(p)])
      throw Error(Errc::InternalCheck, "extension does not restrict to the given map");
  }
  return h;
}

namespace {

void check_lift_hypotheses(const PointFn& f, const Subbase& sb) {
  if (!f.surjective()) throw Error(Errc::NotSurjective, "map does not cover its codomain");
  Verdict v = validate_subbase(sb);
  if (!v.holds) throw PreconditionError(Errc::HypothesisFailed, "BadSubbase", v);
  v = is_s_convex_map(f, sb);
  if (!v.holds) throw PreconditionError(Errc::HypothesisFailed, "NotSConvexMap", v);
  v = is_s_open(f, sb);
  if (!v.holds) throw PreconditionError(Errc::HypothesisFailed, "NotSOpen", v);
}

SetValuedMap pullback_fibers(const PointFn& f, const FiniteSpace& z, const std::vector<int>& k) {
  std::vector<Mask> values;
  for (std::size_t p = 0; p < z.points.size(); ++p)
    values.push_back(f.preimage(Mask{1} << k[p]));
  return make_set_valued_map(z, GroundSet(f.n), std::move(values));
}

}  // namespace

CheckResult check_invertible(const PointFn& f, const Subbase& sb,
                             const std::vector<CorpusEntry>& corpus) {
  check_lift_hypotheses(f, sb);
  CheckResult result;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& entry = corpus[i];
    const SetValuedMap phi = pullback_fibers(f, entry.space, entry.g);
    PointMap h = select(entry.space, phi, sb);
    bool lifts = true;
    for (std::size_t p = 0; p < h.values.size(); ++p)
      if (f(h.values[p]) != entry.g[p]) lifts = false;
    if (!lifts) {
      result.verdict = Verdict::fail(
          Witness{"lift-failed", {}, {}, "corpus entry " + std::to_string(i)});
      return result;
    }
    result.outcomes.push_back({InstanceOutcome::Status::Selected, h.values});
  }
  result.verdict = Verdict::ok();
  return result;
}

CheckResult check_soft(const PointFn& f, const Subbase& sb,
                       const std::vector<SoftnessInstance>& instances) {
  check_lift_hypotheses(f, sb);
  CheckResult result;
  result.verdict = Verdict::ok();
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& inst = instances[i];
    SelectionInstance sel;
    sel.space = inst.space;
    sel.closed_set = inst.closed_set;
    sel.g = inst.h;
    sel.phi = pullback_fibers(f, inst.space, inst.k);
    sel.sb = sb;
    InstanceOutcome outcome;
    try {
      PointMap g = select_extend(sel);
      bool ok = true;
      for (std::size_t p = 0; p < g.values.size(); ++p)
        if (f(g.values[p]) != inst.k[p]) ok = false;
      for (Mask rest = inst.closed_set; rest; rest &= rest - 1) {
        const int p = lowest_point(rest);
        if (g.values[static_cast<std::size_t>(p)] != inst.h[static_cast<std::size_t>(p)]) ok = false;
      }
      if (!ok) {
        result.verdict = Verdict::fail(
            Witness{"soft-failed", {}, {}, "instance " + std::to_string(i)});
        return result;
      }
      outcome.status = InstanceOutcome::Status::Selected;
      outcome.g = g.values;
    } catch (const Error& e) {
      if (e.code() != Errc::NotExtendable) throw;
      outcome.status = InstanceOutcome::Status::NotExtendable;
      result.verdict.trail.push_back("instance " + std::to_string(i) +
                                     ": extension hypothesis fails for (Z, A)");
    }
    result.outcomes.push_back(std::move(outcome));
  }
  return result;
}

std::vector<int> lift_project(const PointFn& f, const Subbase& sb, const std::vector<int>& g,
                              const std::vector<MLS>& g1) {
  if (g.size() != g1.size()) throw Error(Errc::InvariantError, "lift length mismatch");
  const GroundSet target(f.m);
  for (std::size_t z = 0; z < g.size(); ++z) {
    const MLS image = lambda_map(f, g1[z]);
    if (!(image == eta(g[z], target)))
      throw Error(Errc::NotALift, "entry " + std::to_string(z) +
                                      " does not map to the principal system of its base point");
  }
  std::vector<int> gbar;
  for (const MLS& m : g1) gbar.push_back(retract(sb, m));
  for (std::size_t z = 0; z < g.size(); ++z)
    if (f(gbar[z]) != g[z])
      throw Error(Errc::InternalCheck,
                  "projection left the fiber; the map is likely not convex");
  return gbar;
}

}  // namespace supercomb
