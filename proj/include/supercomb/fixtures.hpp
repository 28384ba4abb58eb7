#pragma once

#include "supercomb/finitespace.hpp"
#include "supercomb/setfam.hpp"

namespace supercomb {
namespace fixtures {

// All intervals [i..j] of the chain 0 < 1 < ... < n-1.
Subbase chain(int n, Strictness strictness = Strictness::VanMill);

// All rectangles [a..b] x [c..d] of a rows x cols grid; point (r, c) has
// index r * cols + c.
Subbase box(int rows, int cols, Strictness strictness = Strictness::VanMill);

// All nonempty subsets.
Subbase full_power(int n, Strictness strictness = Strictness::VanMill);

// The three pairwise-intersecting pairs on three points; linked with empty
// core, so never binary.
SetFamily triangle();

struct Tree {
  int n = 1;
  std::vector<std::pair<int, int>> edges;
};

// Vertex sets of all subtrees (connected induced subgraphs).
Subbase subtrees(const Tree& tree, Strictness strictness = Strictness::VanMill);

// All trees on n vertices up to isomorphism (n <= 6), canonically labeled.
std::vector<Tree> all_trees(int n);

// All topologies on n points up to homeomorphism (n <= 5), in a fixed
// order.  Enumerated through preorders; opens are the up-closed sets.
std::vector<FiniteSpace> all_topologies(int n);

// Labeled preorder count, exposed for cross-checks of the generator.
std::size_t count_labeled_topologies(int n);

// The validated fixtures with ground size up to max_points, each under its
// display name, de-duplicated structurally: chains, boxes, subtree families,
// and the full family on two points.
std::vector<std::pair<std::string, Subbase>> validated_subbases(int max_points);

// All continuous maps from z into a discrete codomain (constant on each
// component), in odometer order over the components.
std::vector<std::vector<int>> continuous_point_maps(const FiniteSpace& z, int codomain);

}  // namespace fixtures
}  // namespace supercomb
