#pragma once

#include "supercomb/setfam.hpp"

namespace supercomb {

struct SetValuedMap;  // finitespace.hpp

// Hull of B: intersection of all members containing B, with the supporting
// members listed in ascending order.  The intersection over no members is
// the whole ground set.
struct ConvexHullResult {
  Mask input = 0;
  Mask hull = 0;
  std::vector<Mask> supporting;
};

ConvexHullResult hull(const Subbase& sb, Mask b);

// B is convex when the hull of every two-point subset of B stays inside B.
// Witness: first violating pair (ascending) together with its hull.
Verdict is_convex(const Subbase& sb, Mask b);

// Nearest-point map: intersect the two-point hulls of x with each point of F
// together with the hull of F, and return the unique point.  The hypotheses
// are validated lazily: a non-singleton intersection is a complete symptom
// of a subbase that is not binary/normal/point-separating.
int xi(const Subbase& sb, int x, Mask f);

// Pointwise hull of a set-valued map; the domain space is unchanged.
SetValuedMap convexify(const Subbase& sb, const SetValuedMap& phi);

}  // namespace supercomb
