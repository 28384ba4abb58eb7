#pragma once

#include <cstdint>
#include <functional>

#include "supercomb/finitespace.hpp"

namespace supercomb {

// A maximal linked system in canonical form: the antichain of its inclusion-
// minimal members, sorted ascending by mask value.  The up-closure of the
// antichain contains exactly one of S, complement(S) for every subset S.
struct MLS {
  GroundSet ground{};
  std::vector<Mask> minimal;

  bool operator==(const MLS&) const = default;
};

// Canonical order: lexicographic on the sorted minimal-member mask list.
bool mls_less(const MLS& a, const MLS& b);

// Validating factory: canonicalizes, then checks the antichain, linkedness
// and duality invariants.
MLS mls_from_minimal(GroundSet ground, std::vector<Mask> minimal);

// Membership in the up-closure: some minimal member is contained in S.
bool mls_contains(const MLS& eta, Mask s);

// The principal system of all sets containing x.
MLS eta(int x, GroundSet ground);

struct Superextension {
  GroundSet ground{};
  std::vector<MLS> elements;  // canonically ordered, duplicate-free
};

struct EnumOptions {
  // Number of search partitions; the search fixes the first ceil(log2(n))
  // pair decisions.  Results are identical to the sequential run.
  int partitions = 1;
};

// All maximal linked systems over the ground set, canonically ordered.
Superextension enumerate_mls(GroundSet ground, EnumOptions opts = {});

// Streaming variant of enumerate_mls: visits the systems in canonical order
// while only keeping compact bitsets alive.
void for_each_mls(GroundSet ground, EnumOptions opts, const std::function<void(const MLS&)>& fn);

// Count without materializing the antichains.
std::uint64_t count_mls(GroundSet ground, EnumOptions opts = {});

// All maximal linked systems whose up-closure contains every member of the
// given linked family, canonically ordered.
std::vector<MLS> mls_complete(const SetFamily& linked);

// F+ : indices (into lam.elements) of the systems containing F.
std::vector<std::size_t> plus_set(Mask f, const Superextension& lam);

// The family {F+ : F nonempty} as a subbase on the index ground set of the
// superextension.  Only sensible for small ground sets; capped at n <= 4.
Subbase lambda_subbase(const Superextension& lam);

// Functor action: B is in the image system iff its preimage is in the input
// system.  Subsets of the codomain with empty preimage drop out on their
// own, since their complements have full preimage.
MLS lambda_map(const PointFn& f, const MLS& eta);

// Collapse a system to the unique point shared by all subbase members it
// contains.  Requires a validated (binary, normal, point-separating) subbase;
// a non-singleton intersection reports exactly that failure.
int retract(const Subbase& sb, const MLS& eta);

}  // namespace supercomb
