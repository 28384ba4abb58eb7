#include "supercomb/convexity.hpp"

#include "supercomb/finitespace.hpp"

namespace supercomb {

ConvexHullResult hull(const Subbase& sb, Mask b) {
  const Mask full = sb.family.ground.full();
  if (!mask_subset(b, full)) throw Error(Errc::OutOfRangePoint, "set leaves the ground");
  ConvexHullResult r;
  r.input = b;
  r.hull = full;
  for (Mask s : sb.family.members) {
    if (mask_subset(b, s)) {
      r.hull &= s;
      r.supporting.push_back(s);
    }
  }
  return r;
}

Verdict is_convex(const Subbase& sb, Mask b) {
  std::vector<int> pts = points_of(b);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Mask pair = (Mask{1} << pts[i]) | (Mask{1} << pts[j]);
      Mask h = hull(sb, pair).hull;
      if (!mask_subset(h, b))
        return Verdict::fail(Witness{"not-convex", {h}, {pts[i], pts[j]},
                                     "two-point hull leaves the set"});
    }
  }
  return Verdict::ok();
}

int xi(const Subbase& sb, int x, Mask f) {
  const GroundSet g = sb.family.ground;
  if (!g.contains(x)) throw Error(Errc::OutOfRangePoint, "base point " + std::to_string(x));
  if (f == 0) throw Error(Errc::EmptyTarget, "xi needs a nonempty target set");
  if (!mask_subset(f, g.full())) throw Error(Errc::OutOfRangePoint, "target leaves the ground");
  Mask acc = hull(sb, f).hull;
  const Mask xb = Mask{1} << x;
  for (Mask rest = f; rest; rest &= rest - 1)
    acc &= hull(sb, xb | (rest & ~(rest - 1))).hull;
  if (mask_size(acc) != 1) {
    std::string pts;
    for (int p : points_of(acc)) pts += (pts.empty() ? "" : ",") + std::to_string(p);
    throw Error(Errc::NotSingleton, "xi intersection is {" + pts +
                                        "}; subbase is not binary+normal+point-separating");
  }
  return lowest_point(acc);
}

SetValuedMap convexify(const Subbase& sb, const SetValuedMap& phi) {
  std::vector<Mask> values;
  values.reserve(phi.values.size());
  for (std::size_t z = 0; z < phi.values.size(); ++z) {
    if (phi.values[z] == 0)
      throw Error(Errc::EmptyValue, "empty value at point " + phi.domain.points[z]);
    values.push_back(hull(sb, phi.values[z]).hull);
  }
  return make_set_valued_map(phi.domain, phi.codomain, std::move(values));
}

}  // namespace supercomb
