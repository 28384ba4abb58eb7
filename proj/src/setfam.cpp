#include "supercomb/setfam.hpp"

#include <algorithm>
#include <set>

namespace supercomb {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::BadGround: return "BadGround";
    case Errc::OutOfRangePoint: return "OutOfRangePoint";
    case Errc::EmptySet: return "EmptySet";
    case Errc::EmptyTarget: return "EmptyTarget";
    case Errc::EmptyValue: return "EmptyValue";
    case Errc::NotSingleton: return "NotSingleton";
    case Errc::NotLinked: return "NotLinked";
    case Errc::GroundTooLarge: return "GroundTooLarge";
    case Errc::NotSurjective: return "NotSurjective";
    case Errc::NotClosed: return "NotClosed";
    case Errc::NotExtendable: return "NotExtendable";
    case Errc::NotALift: return "NotALift";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::HypothesisFailed: return "HypothesisFailed";
    case Errc::InternalXiFailure: return "InternalXiFailure";
    case Errc::InternalCheck: return "InternalCheck";
    case Errc::ParseError: return "ParseError";
    case Errc::SchemaError: return "SchemaError";
    case Errc::InvariantError: return "InvariantError";
    case Errc::CacheCorrupt: return "CacheCorrupt";
    case Errc::UsageError: return "UsageError";
  }
  return "UnknownError";
}

Mask mask_from_points(const std::vector<int>& pts, GroundSet g) {
  Mask m = 0;
  for (int p : pts) {
    if (!g.contains(p))
      throw Error(Errc::OutOfRangePoint,
                  "point " + std::to_string(p) + " outside ground 0.." + std::to_string(g.n - 1));
    m |= Mask{1} << p;
  }
  return m;
}

std::vector<int> points_of(Mask m) {
  std::vector<int> pts;
  while (m) {
    pts.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return pts;
}

bool SetFamily::contains(Mask m) const {
  return std::binary_search(members.begin(), members.end(), m);
}

SetFamily family_from_masks(GroundSet ground, std::vector<Mask> masks,
                            std::vector<std::string>* trail) {
  std::sort(masks.begin(), masks.end());
  std::size_t before = masks.size();
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  if (trail && masks.size() != before)
    trail->push_back("dropped " + std::to_string(before - masks.size()) + " duplicate set(s)");
  if (!masks.empty() && masks.front() == 0) {
    masks.erase(masks.begin());
    if (trail) trail->push_back("dropped empty set");
  }
  return SetFamily{ground, std::move(masks)};
}

SetFamily normalize_family(const std::vector<std::vector<int>>& raw, GroundSet ground,
                           std::vector<std::string>* trail) {
  std::vector<Mask> masks;
  masks.reserve(raw.size());
  for (const auto& pts : raw) masks.push_back(mask_from_points(pts, ground));
  return family_from_masks(ground, std::move(masks), trail);
}

SetFamily lattice_close(const SetFamily& fam) {
  std::set<Mask> closed(fam.members.begin(), fam.members.end());
  std::vector<Mask> fresh(fam.members);
  while (!fresh.empty()) {
    std::vector<Mask> next;
    for (Mask a : fresh) {
      for (Mask b : closed) {
        Mask u = a | b;
        if (closed.insert(u).second) next.push_back(u);
        Mask i = a & b;
        if (i != 0 && closed.insert(i).second) next.push_back(i);
      }
    }
    fresh = std::move(next);
  }
  return SetFamily{fam.ground, std::vector<Mask>(closed.begin(), closed.end())};
}

bool is_linked(const SetFamily& fam) {
  const auto& m = fam.members;
  for (std::size_t i = 0; i + 1 < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if ((m[i] & m[j]) == 0) return false;
  return true;
}

void for_each_maximal_linked(const SetFamily& fam,
                             const std::function<bool(std::uint64_t)>& visit) {
  const auto& m = fam.members;
  const std::size_t k = m.size();
  if (k > 64)
    throw Error(Errc::GroundTooLarge, "linked-subfamily search supports at most 64 members");
  if (k == 0) {
    visit(0);
    return;
  }
  std::vector<std::uint64_t> adj(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && (m[i] & m[j]) != 0) adj[i] |= std::uint64_t{1} << j;

  // Bron-Kerbosch without pivoting; candidates taken in ascending index
  // order so cliques come out in lexicographic order of their index lists.
  bool stop = false;
  auto rec = [&](auto&& self, std::uint64_t r, std::uint64_t p, std::uint64_t x) -> void {
    if (stop) return;
    if (p == 0 && x == 0) {
      if (!visit(r)) stop = true;
      return;
    }
    while (p != 0 && !stop) {
      int v = std::countr_zero(p);
      std::uint64_t vb = std::uint64_t{1} << v;
      self(self, r | vb, p & adj[v], x & adj[v]);
      p &= ~vb;
      x |= vb;
    }
  };
  rec(rec, 0, k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1, 0);
}

Verdict is_binary(const Subbase& sb) {
  const auto& m = sb.family.members;
  Verdict out = Verdict::ok();
  for_each_maximal_linked(sb.family, [&](std::uint64_t clique) {
    Mask core = sb.family.ground.full();
    std::vector<Mask> sets;
    for (std::uint64_t c = clique; c; c &= c - 1) {
      Mask s = m[std::countr_zero(c)];
      core &= s;
      sets.push_back(s);
    }
    if (core == 0 && !sets.empty()) {
      out = Verdict::fail(
          Witness{"not-binary", std::move(sets), {}, "maximal linked subfamily with empty intersection"});
      return false;
    }
    return true;
  });
  return out;
}

Verdict is_normal(const Subbase& sb) {
  const auto& m = sb.family.members;
  const Mask full = sb.family.ground.full();
  for (std::size_t i = 0; i + 1 < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if ((m[i] & m[j]) != 0) continue;
      bool screened = false;
      for (std::size_t a = 0; a < m.size() && !screened; ++a) {
        if ((m[a] & m[j]) != 0) continue;  // T0 must miss S1
        for (std::size_t b = 0; b < m.size(); ++b) {
          if ((m[i] & m[b]) != 0) continue;  // T1 must miss S0
          if ((m[a] | m[b]) == full) {
            screened = true;
            break;
          }
        }
      }
      if (!screened)
        return Verdict::fail(
            Witness{"not-normal", {m[i], m[j]}, {}, "disjoint pair admits no screen"});
    }
  }
  return Verdict::ok();
}

Verdict is_point_separating(const Subbase& sb) {
  const GroundSet g = sb.family.ground;
  for (int x = 0; x < g.n; ++x) {
    Mask xb = Mask{1} << x;
    Mask residual = g.full();  // empty intersection convention
    for (Mask s : sb.family.members)
      if (s & xb) residual &= s;
    if (residual != xb)
      return Verdict::fail(Witness{"not-point-separating", {residual}, {x},
                                   "members through the point do not cut it out"});
  }
  return Verdict::ok();
}

namespace {

Verdict check_lattice_closed(const SetFamily& fam) {
  const auto& m = fam.members;
  for (std::size_t i = 0; i + 1 < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      Mask u = m[i] | m[j];
      if (!fam.contains(u))
        return Verdict::fail(Witness{"not-union-closed", {m[i], m[j], u}, {}, "pairwise union missing"});
      Mask x = m[i] & m[j];
      if (x != 0 && !fam.contains(x))
        return Verdict::fail(
            Witness{"not-intersection-closed", {m[i], m[j], x}, {}, "pairwise intersection missing"});
    }
  }
  return Verdict::ok();
}

}  // namespace

Verdict validate_subbase(const Subbase& sb) {
  Verdict v = is_binary(sb);
  if (!v.holds) return v;
  v = is_normal(sb);
  if (!v.holds) return v;
  v = is_point_separating(sb);
  if (!v.holds) return v;
  if (sb.strictness == Strictness::PaperStrict) {
    v = check_lattice_closed(sb.family);
    if (!v.holds) return v;
    v.trail.push_back("lattice closure checked");
  }
  v.trail.push_back("binary, normal, point-separating all hold");
  return v;
}

}  // namespace supercomb
