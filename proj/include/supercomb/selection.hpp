#pragma once

#include "supercomb/convexity.hpp"
#include "supercomb/finitespace.hpp"
#include "supercomb/superext.hpp"

namespace supercomb {

// A selection problem: a space Z, a closed subset A, a partial map g on A
// (entries outside A are -1) with g(a) in phi(a), and the subbase on the
// codomain ground.
struct SelectionInstance {
  FiniteSpace space;
  Mask closed_set = 0;
  std::vector<int> g;
  SetValuedMap phi;
  Subbase sb;
};

// A partial lift problem for a surjection f: a space Z, a closed subset A,
// k: Z -> codomain of f, and h: A -> domain of f with f(h(a)) = k(a).
struct SoftnessInstance {
  FiniteSpace space;
  Mask closed_set = 0;
  std::vector<int> k;
  std::vector<int> h;  // -1 outside A
};

// Extend a partial map on a closed set to a continuous total map into a
// discrete codomain.  Each component meeting A must see a single value and
// takes it; components disjoint from A take the smallest codomain point.
// Failure certifies that not every map on A extends over Z.
PointMap extend_total(const FiniteSpace& z, Mask a, const std::vector<int>& g, int codomain);

// The constructive selection: h(z) = xi(x0, phi(z)) with the base point x0
// taken as the smallest point of the value at the smallest-index point.
// Preconditions (validated subbase, S-continuity, convex values) are checked
// up front; the output is post-verified to be a continuous selection, and a
// post-verification failure is an internal error since the construction is
// guaranteed under the preconditions.
PointMap select(const FiniteSpace& z, const SetValuedMap& phi, const Subbase& sb);

// Extension form: h(z) = xi(gbar(z), phi(z)) for the extension gbar of g.
// Restricted to A this reproduces g exactly.
PointMap select_extend(const SelectionInstance& inst);

struct CorpusEntry {
  FiniteSpace space;
  std::vector<int> g;  // continuous map into the codomain of f
};

struct InstanceOutcome {
  enum class Status { Selected, NotExtendable } status = Status::Selected;
  std::vector<int> g;
};

struct CheckResult {
  Verdict verdict;
  std::vector<InstanceOutcome> outcomes;
};

// Runs the selection construction on phi = fiber(f) o g for every corpus
// entry and verifies f o h = g.  The hypotheses on f (surjective, S-open,
// convex fibers, validated subbase) are checked first and reported as
// HypothesisFailed.
CheckResult check_invertible(const PointFn& f, const Subbase& sb,
                             const std::vector<CorpusEntry>& corpus);

// Runs select_extend on phi(z) = f^-1(k(z)) per instance.  An instance whose
// pair (Z, A) does not satisfy the extension hypothesis is reported as a
// hypothesis failure of the instance, not of f.
CheckResult check_soft(const PointFn& f, const Subbase& sb,
                       const std::vector<SoftnessInstance>& instances);

// Project a lift through the superextension: gbar(z) = retract(g1(z)).
// Requires lambda_map(f, g1(z)) to be the principal system of g(z) at every
// z; the identity f o gbar = g is post-verified.
std::vector<int> lift_project(const PointFn& f, const Subbase& sb, const std::vector<int>& g,
                              const std::vector<MLS>& g1);

}  // namespace supercomb
