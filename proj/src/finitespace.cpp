#include "supercomb/finitespace.hpp"

#include <algorithm>

#include "supercomb/convexity.hpp"

namespace supercomb {

bool FiniteSpace::is_open(Mask m) const {
  return std::binary_search(opens.begin(), opens.end(), m);
}

int FiniteSpace::point_index(const std::string& name) const {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i] == name) return static_cast<int>(i);
  return -1;
}

FiniteSpace FiniteSpace::discrete(int n) {
  if (n < 1 || n > 20) throw Error(Errc::BadGround, "discrete space size must be in 1..20");
  FiniteSpace z;
  for (int i = 0; i < n; ++i) z.points.push_back(std::to_string(i));
  z.opens.resize(std::size_t{1} << n);
  for (Mask m = 0; m < z.opens.size(); ++m) z.opens[m] = m;
  return z;
}

FiniteSpace FiniteSpace::sierpinski() {
  return FiniteSpace{{"a", "b"}, {0, 1, 3}};
}

FiniteSpace FiniteSpace::from_preorder(const std::vector<Mask>& reach,
                                       std::vector<std::string> names) {
  const int n = static_cast<int>(reach.size());
  if (n < 1 || n > 20) throw Error(Errc::BadGround, "preorder size must be in 1..20");
  FiniteSpace z;
  if (names.empty())
    for (int i = 0; i < n; ++i) z.points.push_back(std::to_string(i));
  else
    z.points = std::move(names);
  const Mask full = (Mask{1} << n) - 1;
  for (Mask u = 0; u <= full; ++u) {
    bool open = true;
    for (int i = 0; i < n && open; ++i)
      if ((u >> i) & 1) open = mask_subset(reach[static_cast<std::size_t>(i)], u);
    if (open) z.opens.push_back(u);
  }
  return z;
}

SetValuedMap make_set_valued_map(FiniteSpace domain, GroundSet codomain,
                                 std::vector<Mask> values) {
  if (values.size() != domain.points.size())
    throw Error(Errc::InvariantError, "set-valued map must be total on the domain");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == 0)
      throw Error(Errc::EmptyValue, "empty value at point " + domain.points[i]);
    if (!mask_subset(values[i], codomain.full()))
      throw Error(Errc::OutOfRangePoint, "value at " + domain.points[i] + " leaves the codomain");
  }
  return SetValuedMap{std::move(domain), codomain, std::move(values)};
}

Mask PointFn::preimage(Mask b) const {
  Mask pre = 0;
  for (int x = 0; x < n; ++x)
    if ((b >> values[static_cast<std::size_t>(x)]) & 1) pre |= Mask{1} << x;
  return pre;
}

bool PointFn::surjective() const {
  Mask hit = 0;
  for (int v : values) hit |= Mask{1} << v;
  return hit == (Mask{1} << m) - 1;
}

PointFn make_point_fn(int n, int m, std::vector<int> values) {
  GroundSet dom(n);
  GroundSet cod(m);
  if (values.size() != static_cast<std::size_t>(n))
    throw Error(Errc::InvariantError, "point function must be total");
  for (int v : values)
    if (!cod.contains(v)) throw Error(Errc::OutOfRangePoint, "value " + std::to_string(v));
  return PointFn{dom.n, cod.n, std::move(values)};
}

Verdict is_topology(const std::vector<std::string>& points, const std::vector<Mask>& opens) {
  const int n = static_cast<int>(points.size());
  const Mask full = (Mask{1} << n) - 1;
  auto has = [&](Mask m) { return std::find(opens.begin(), opens.end(), m) != opens.end(); };
  if (!has(0)) return Verdict::fail(Witness{"not-a-topology", {0}, {}, "empty set missing"});
  if (!has(full)) return Verdict::fail(Witness{"not-a-topology", {full}, {}, "full set missing"});
  std::vector<Mask> sorted(opens);
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      Mask u = sorted[i] | sorted[j];
      if (!std::binary_search(sorted.begin(), sorted.end(), u))
        return Verdict::fail(Witness{"not-a-topology", {u}, {}, "union missing"});
      Mask x = sorted[i] & sorted[j];
      if (!std::binary_search(sorted.begin(), sorted.end(), x))
        return Verdict::fail(Witness{"not-a-topology", {x}, {}, "intersection missing"});
    }
  }
  return Verdict::ok();
}

std::vector<Mask> components(const FiniteSpace& z) {
  const int n = z.size();
  std::vector<Mask> clopens;
  for (Mask o : z.opens)
    if (z.is_open(z.full() & ~o)) clopens.push_back(o);
  // Same membership pattern across all clopen sets <=> same component.
  std::vector<Mask> classes;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int p = 0; p < n; ++p) {
    if (seen[static_cast<std::size_t>(p)]) continue;
    Mask cls = 0;
    for (int q = 0; q < n; ++q) {
      bool same = true;
      for (Mask c : clopens)
        if (((c >> p) & 1) != ((c >> q) & 1)) {
          same = false;
          break;
        }
      if (same) {
        cls |= Mask{1} << q;
        seen[static_cast<std::size_t>(q)] = true;
      }
    }
    classes.push_back(cls);
  }
  return classes;
}

Verdict is_continuous(const PointMap& h) {
  if (h.values.size() != h.domain.points.size())
    throw Error(Errc::InvariantError, "point map must be total");
  if (h.codomain_space) {
    const FiniteSpace& y = *h.codomain_space;
    for (Mask u : y.opens) {
      Mask pre = 0;
      for (int p = 0; p < h.domain.size(); ++p)
        if ((u >> h.values[static_cast<std::size_t>(p)]) & 1) pre |= Mask{1} << p;
      if (!h.domain.is_open(pre))
        return Verdict::fail(Witness{"not-continuous", {u, pre}, {}, "preimage of open not open"});
    }
    return Verdict::ok();
  }
  for (Mask cls : components(h.domain)) {
    int first = lowest_point(cls);
    for (Mask rest = cls & (cls - 1); rest; rest &= rest - 1) {
      int q = lowest_point(rest);
      if (h.values[static_cast<std::size_t>(q)] != h.values[static_cast<std::size_t>(first)])
        return Verdict::fail(
            Witness{"not-continuous", {cls}, {first, q}, "component carries two values"});
    }
  }
  return Verdict::ok();
}

Verdict is_s_continuous(const SetValuedMap& phi, const Subbase& sb) {
  const Mask xfull = phi.codomain.full();
  for (Mask s : sb.family.members) {
    const Mask comp = xfull & ~s;
    Mask hit = 0, contained = 0;
    for (int z = 0; z < phi.domain.size(); ++z) {
      Mask v = phi.values[static_cast<std::size_t>(z)];
      if (v & comp) hit |= Mask{1} << z;
      if (mask_subset(v, comp)) contained |= Mask{1} << z;
    }
    if (!phi.domain.is_open(hit))
      return Verdict::fail(Witness{"not-s-continuous", {s, hit}, {}, "hit set not open"});
    if (!phi.domain.is_open(contained))
      return Verdict::fail(
          Witness{"not-s-continuous", {s, contained}, {}, "containment set not open"});
  }
  return Verdict::ok();
}

namespace {

Verdict semicontinuity(const SetValuedMap& phi, const std::vector<Mask>& opens, bool lower) {
  for (Mask u : opens) {
    Mask where = 0;
    for (int z = 0; z < phi.domain.size(); ++z) {
      Mask v = phi.values[static_cast<std::size_t>(z)];
      bool in = lower ? (v & u) != 0 : mask_subset(v, u);
      if (in) where |= Mask{1} << z;
    }
    if (!phi.domain.is_open(where))
      return Verdict::fail(Witness{lower ? "not-lsc" : "not-usc", {u, where}, {},
                                   lower ? "hit set not open" : "containment set not open"});
  }
  return Verdict::ok();
}

std::vector<Mask> all_subsets(GroundSet g) {
  if (g.n > 20) throw Error(Errc::GroundTooLarge, "discrete semicontinuity capped at 20 points");
  std::vector<Mask> subs(std::size_t{1} << g.n);
  for (Mask m = 0; m < subs.size(); ++m) subs[m] = m;
  return subs;
}

}  // namespace

Verdict is_lsc(const SetValuedMap& phi) { return semicontinuity(phi, all_subsets(phi.codomain), true); }
Verdict is_lsc(const SetValuedMap& phi, const FiniteSpace& x) {
  return semicontinuity(phi, x.opens, true);
}
Verdict is_usc(const SetValuedMap& phi) { return semicontinuity(phi, all_subsets(phi.codomain), false); }
Verdict is_usc(const SetValuedMap& phi, const FiniteSpace& x) {
  return semicontinuity(phi, x.opens, false);
}

namespace {

void require_surjective(const PointFn& f) {
  if (!f.surjective()) throw Error(Errc::NotSurjective, "map does not cover its codomain");
}

}  // namespace

Verdict is_s_open(const PointFn& f, const Subbase&) {
  require_surjective(f);
  Verdict v = Verdict::ok();
  v.trail.push_back("vacuously true: codomain discrete");
  return v;
}

Verdict is_s_open(const PointFn& f, const Subbase& sb, const FiniteSpace& y) {
  require_surjective(f);
  const Mask xfull = sb.family.ground.full();
  for (Mask s : sb.family.members) {
    Mask image = 0;
    for (Mask rest = xfull & ~s; rest; rest &= rest - 1)
      image |= Mask{1} << f(lowest_point(rest));
    if (!y.is_open(image))
      return Verdict::fail(Witness{"not-s-open", {s, image}, {}, "image of complement not open"});
  }
  return Verdict::ok();
}

Verdict is_s_convex_map(const PointFn& f, const Subbase& sb) {
  for (int y = 0; y < f.m; ++y) {
    Mask fiber = f.preimage(Mask{1} << y);
    Verdict v = is_convex(sb, fiber);
    if (!v.holds)
      return Verdict::fail(Witness{"not-s-convex-map", {fiber}, {y},
                                   "fiber not convex: " + v.witness->note});
  }
  return Verdict::ok();
}

SetValuedMap fiber_map(const PointFn& f) { return fiber_map(f, FiniteSpace::discrete(f.m)); }

SetValuedMap fiber_map(const PointFn& f, const FiniteSpace& y) {
  require_surjective(f);
  if (y.size() != f.m) throw Error(Errc::InvariantError, "codomain space size mismatch");
  std::vector<Mask> values;
  for (int p = 0; p < f.m; ++p) values.push_back(f.preimage(Mask{1} << p));
  return make_set_valued_map(y, GroundSet(f.n), std::move(values));
}

}  // namespace supercomb
