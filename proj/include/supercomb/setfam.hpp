#pragma once

#include <functional>
#include <vector>

#include "supercomb/core.hpp"

namespace supercomb {

// A canonical, duplicate-free family of nonempty subsets of the ground set.
// Members are kept strictly ascending by mask value, so equality is
// structural.  The empty set is never a member: a family containing it can
// never be binary, and dropping it matches the usual convention of working
// with nonempty closed sets.
struct SetFamily {
  GroundSet ground{};
  std::vector<Mask> members;

  bool contains(Mask m) const;
  bool operator==(const SetFamily&) const = default;
};

enum class Strictness { VanMill, PaperStrict };

// A set family in the role of a closed subbase.  The strictness profile only
// selects what validate_subbase checks: PaperStrict additionally demands
// closure under pairwise union and pairwise nonempty intersection.
struct Subbase {
  SetFamily family;
  Strictness strictness = Strictness::VanMill;
};

// Canonicalize raw point lists: drop duplicates and empty sets, sort
// ascending by mask value.  Out-of-range points are an error.  Dropped empty
// sets and duplicates are noted on `trail` when provided.
SetFamily normalize_family(const std::vector<std::vector<int>>& raw, GroundSet ground,
                           std::vector<std::string>* trail = nullptr);

// Same canonicalization for masks already computed.
SetFamily family_from_masks(GroundSet ground, std::vector<Mask> masks,
                            std::vector<std::string>* trail = nullptr);

// Smallest superfamily closed under pairwise union and pairwise nonempty
// intersection.  Idempotent, extensive and monotone.
SetFamily lattice_close(const SetFamily& fam);

// True iff every two members intersect (vacuously true for <= 1 member).
bool is_linked(const SetFamily& fam);

// Binary axiom: every linked subfamily has a common point.  It suffices to
// decide maximal linked subfamilies, since any linked family extends to a
// maximal one whose core is no larger.  The witness is the first maximal
// linked subfamily (in lexicographic order of member indices) with empty
// intersection.
Verdict is_binary(const Subbase& sb);

// Normality: every disjoint member pair S0,S1 admits a screen T0,T1 from the
// family with S0 n T1 = 0 = T0 n S1 and T0 u T1 = ground.
Verdict is_normal(const Subbase& sb);

// Every point is the intersection of the members containing it.
Verdict is_point_separating(const Subbase& sb);

// Conjunction of the axioms above, plus lattice closure under PaperStrict.
// Checked in the order binary, normal, point-separating, closure; the
// witness identifies the first failing axiom.
Verdict validate_subbase(const Subbase& sb);

// Enumerates the maximal linked subfamilies (as index masks over members) in
// lexicographic order; stops early when the callback returns false.
// Supports families of up to 64 members.
void for_each_maximal_linked(const SetFamily& fam,
                             const std::function<bool(std::uint64_t)>& visit);

}  // namespace supercomb
