#pragma once

#include <string>
#include <vector>

#include "supercomb/setfam.hpp"

namespace supercomb {

// A finite topological space given by its full lattice of open sets.  The
// open family is stored outright (sorted mask list over point indices,
// including the empty and the full set) because the predicates below
// quantify over open sets directly.
struct FiniteSpace {
  std::vector<std::string> points;
  std::vector<Mask> opens;

  int size() const { return static_cast<int>(points.size()); }
  Mask full() const { return (Mask{1} << size()) - 1; }
  bool is_open(Mask m) const;
  bool is_closed(Mask m) const { return is_open(full() & ~m); }
  int point_index(const std::string& name) const;  // -1 when absent

  static FiniteSpace discrete(int n);
  static FiniteSpace sierpinski();
  // Opens are the up-closed sets of the preorder: reach[i] = points reachable
  // from i (including i itself).
  static FiniteSpace from_preorder(const std::vector<Mask>& reach,
                                   std::vector<std::string> names = {});
};

// Total single-valued map out of a finite space.  The codomain is discrete
// (its size) unless a codomain space is attached.
struct PointMap {
  FiniteSpace domain;
  int codomain_size = 1;
  std::vector<int> values;
  std::optional<FiniteSpace> codomain_space;
};

// Total map point -> nonempty subset of a discrete ground set.
struct SetValuedMap {
  FiniteSpace domain;
  GroundSet codomain{};
  std::vector<Mask> values;
};

SetValuedMap make_set_valued_map(FiniteSpace domain, GroundSet codomain, std::vector<Mask> values);

// A single-valued point function between discrete ground sets.
struct PointFn {
  int n = 1;
  int m = 1;
  std::vector<int> values;

  int operator()(int x) const { return values[static_cast<std::size_t>(x)]; }
  Mask preimage(Mask b) const;
  bool surjective() const;
};

PointFn make_point_fn(int n, int m, std::vector<int> values);

// Topology axioms: empty and full set present, family closed under pairwise
// union and intersection.  Witness: first missing set.
Verdict is_topology(const std::vector<std::string>& points, const std::vector<Mask>& opens);

// Connected components, i.e. classes of points that no clopen set separates,
// ordered by their smallest point.
std::vector<Mask> components(const FiniteSpace& z);

// Continuity of a point map.  Into a discrete codomain this is equivalent to
// being constant on every component (witness: a component carrying two
// values); with an attached codomain space, preimages of opens must be open.
Verdict is_continuous(const PointMap& h);

// For every member S, both the set of points whose value meets the
// complement of S and the set of points whose value is contained in that
// complement must be open.
Verdict is_s_continuous(const SetValuedMap& phi, const Subbase& sb);

// Lower/upper semi-continuity against a discrete codomain (all subsets open)
// or an explicit codomain space.
Verdict is_lsc(const SetValuedMap& phi);
Verdict is_lsc(const SetValuedMap& phi, const FiniteSpace& x);
Verdict is_usc(const SetValuedMap& phi);
Verdict is_usc(const SetValuedMap& phi, const FiniteSpace& x);

// Images of member complements must be open in the codomain.  For a discrete
// codomain this is vacuous and recorded as such on the trail.
Verdict is_s_open(const PointFn& f, const Subbase& sb);
Verdict is_s_open(const PointFn& f, const Subbase& sb, const FiniteSpace& y);

// All fibers of f are convex.
Verdict is_s_convex_map(const PointFn& f, const Subbase& sb);

// The fiber map y -> f^-1(y) of a surjection, as a set-valued map whose
// domain is the codomain of f.
SetValuedMap fiber_map(const PointFn& f);
SetValuedMap fiber_map(const PointFn& f, const FiniteSpace& y);

}  // namespace supercomb
