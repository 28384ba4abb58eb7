#include "supercomb/fixtures.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace supercomb {
namespace fixtures {

Subbase chain(int n, Strictness strictness) {
  GroundSet g(n);
  std::vector<Mask> members;
  for (int i = 0; i < n; ++i) {
    Mask m = 0;
    for (int j = i; j < n; ++j) {
      m |= Mask{1} << j;
      members.push_back(m);
    }
  }
  return Subbase{family_from_masks(g, std::move(members)), strictness};
}

Subbase box(int rows, int cols, Strictness strictness) {
  GroundSet g(rows * cols);
  std::vector<Mask> members;
  for (int a = 0; a < rows; ++a)
    for (int b = a; b < rows; ++b)
      for (int c = 0; c < cols; ++c)
        for (int d = c; d < cols; ++d) {
          Mask m = 0;
          for (int r = a; r <= b; ++r)
            for (int s = c; s <= d; ++s) m |= Mask{1} << (r * cols + s);
          members.push_back(m);
        }
  return Subbase{family_from_masks(g, std::move(members)), strictness};
}

Subbase full_power(int n, Strictness strictness) {
  GroundSet g(n);
  std::vector<Mask> members;
  for (Mask m = 1; m <= g.full(); ++m) members.push_back(m);
  return Subbase{family_from_masks(g, std::move(members)), strictness};
}

SetFamily triangle() { return family_from_masks(GroundSet(3), {0b011, 0b110, 0b101}); }

namespace {

bool connected_in(const Tree& tree, Mask subset) {
  if (subset == 0) return false;
  Mask reached = subset & ~(subset - 1);
  for (;;) {
    Mask grow = reached;
    for (auto [u, v] : tree.edges) {
      const Mask ub = Mask{1} << u, vb = Mask{1} << v;
      if ((subset & ub) && (subset & vb) && ((reached & ub) || (reached & vb))) grow |= ub | vb;
    }
    if (grow == reached) break;
    reached = grow;
  }
  return reached == subset;
}

}  // namespace

Subbase subtrees(const Tree& tree, Strictness strictness) {
  GroundSet g(tree.n);
  std::vector<Mask> members;
  for (Mask m = 1; m <= g.full(); ++m)
    if (connected_in(tree, m)) members.push_back(m);
  return Subbase{family_from_masks(g, std::move(members)), strictness};
}

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

EdgeList canonical_edges(int n, const EdgeList& edges) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  EdgeList best;
  do {
    EdgeList mapped;
    for (auto [u, v] : edges) {
      int a = perm[static_cast<std::size_t>(u)], b = perm[static_cast<std::size_t>(v)];
      mapped.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(mapped.begin(), mapped.end());
    if (best.empty() || mapped < best) best = mapped;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<Tree> all_trees(int n) {
  if (n < 1 || n > 6) throw Error(Errc::GroundTooLarge, "tree corpus is capped at 6 vertices");
  if (n == 1) return {Tree{1, {}}};
  if (n == 2) return {Tree{2, {{0, 1}}}};
  // Prüfer sequences give every labeled tree once; de-duplicate up to
  // relabeling through the canonical edge list.
  std::set<EdgeList> canon;
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
  for (;;) {
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int s : seq) ++degree[static_cast<std::size_t>(s)];
    EdgeList edges;
    std::vector<int> deg = degree;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::vector<int> work = seq;
    for (int s : work) {
      for (int leaf = 0; leaf < n; ++leaf) {
        if (deg[static_cast<std::size_t>(leaf)] == 1 && !used[static_cast<std::size_t>(leaf)]) {
          edges.emplace_back(std::min(leaf, s), std::max(leaf, s));
          used[static_cast<std::size_t>(leaf)] = true;
          --deg[static_cast<std::size_t>(s)];
          break;
        }
      }
    }
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
      if (!used[static_cast<std::size_t>(v)] && deg[static_cast<std::size_t>(v)] >= 1)
        rest.push_back(v);
    edges.emplace_back(std::min(rest[0], rest[1]), std::max(rest[0], rest[1]));
    canon.insert(canonical_edges(n, edges));

    int i = n - 3;
    while (i >= 0 && seq[static_cast<std::size_t>(i)] == n - 1) {
      seq[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++seq[static_cast<std::size_t>(i)];
  }
  std::vector<Tree> out;
  for (const auto& e : canon) out.push_back(Tree{n, e});
  return out;
}

namespace {

std::vector<std::vector<Mask>> labeled_topologies(int n) {
  // Preorders on n points, as reachability rows (opens = up-closed sets).
  const int offdiag = n * (n - 1);
  std::vector<std::vector<Mask>> out;
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << offdiag); ++bits) {
    std::vector<Mask> row(static_cast<std::size_t>(n));
    int b = 0;
    for (int i = 0; i < n; ++i) {
      row[static_cast<std::size_t>(i)] = Mask{1} << i;
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        if ((bits >> b) & 1) row[static_cast<std::size_t>(i)] |= Mask{1} << j;
        ++b;
      }
    }
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i)
      for (Mask rest = row[static_cast<std::size_t>(i)]; rest; rest &= rest - 1)
        if (!mask_subset(row[static_cast<std::size_t>(lowest_point(rest))],
                         row[static_cast<std::size_t>(i)])) {
          transitive = false;
          break;
        }
    if (!transitive) continue;
    std::vector<Mask> opens;
    const Mask full = (Mask{1} << n) - 1;
    for (Mask u = 0; u <= full; ++u) {
      bool open = true;
      for (Mask rest = u; rest && open; rest &= rest - 1)
        open = mask_subset(row[static_cast<std::size_t>(lowest_point(rest))], u);
      if (open) opens.push_back(u);
    }
    out.push_back(std::move(opens));
  }
  return out;
}

Mask permute_mask(Mask m, const std::vector<int>& perm) {
  Mask out = 0;
  for (Mask rest = m; rest; rest &= rest - 1)
    out |= Mask{1} << perm[static_cast<std::size_t>(lowest_point(rest))];
  return out;
}

}  // namespace

std::size_t count_labeled_topologies(int n) { return labeled_topologies(n).size(); }

std::vector<FiniteSpace> all_topologies(int n) {
  if (n < 1 || n > 5) throw Error(Errc::GroundTooLarge, "topology corpus is capped at 5 points");
  std::set<std::vector<Mask>> canon;
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (auto& opens : labeled_topologies(n)) {
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Mask> best;
    do {
      std::vector<Mask> mapped;
      for (Mask o : opens) mapped.push_back(permute_mask(o, perm));
      std::sort(mapped.begin(), mapped.end());
      if (best.empty() || mapped < best) best = mapped;
    } while (std::next_permutation(perm.begin(), perm.end()));
    canon.insert(best);
  }
  std::vector<FiniteSpace> out;
  for (const auto& opens : canon) {
    FiniteSpace z;
    for (int i = 0; i < n; ++i) z.points.push_back("z" + std::to_string(i));
    z.opens = opens;
    out.push_back(std::move(z));
  }
  return out;
}

std::vector<std::pair<std::string, Subbase>> validated_subbases(int max_points) {
  std::vector<std::pair<std::string, Subbase>> out;
  std::set<std::pair<int, std::vector<Mask>>> seen;
  auto add = [&](const std::string& name, Subbase sb) {
    if (sb.family.ground.n > max_points) return;
    if (!seen.insert({sb.family.ground.n, sb.family.members}).second) return;
    out.emplace_back(name, std::move(sb));
  };
  for (int n = 1; n <= max_points; ++n) add("chain" + std::to_string(n), chain(n));
  add("full2", full_power(2));
  if (max_points >= 4) add("box2x2", box(2, 2));
  if (max_points >= 6) add("box2x3", box(2, 3));
  for (int n = 1; n <= std::min(max_points, 6); ++n) {
    int idx = 0;
    for (const Tree& t : all_trees(n)) {
      add("tree" + std::to_string(n) + "_" + std::to_string(idx), subtrees(t));
      ++idx;
    }
  }
  return out;
}

std::vector<std::vector<int>> continuous_point_maps(const FiniteSpace& z, int codomain) {
  const std::vector<Mask> comps = components(z);
  std::vector<std::vector<int>> out;
  std::vector<int> assign(comps.size(), 0);
  for (;;) {
    std::vector<int> map(z.points.size(), 0);
    for (std::size_t c = 0; c < comps.size(); ++c)
      for (Mask rest = comps[c]; rest; rest &= rest - 1)
        map[static_cast<std::size_t>(lowest_point(rest))] = assign[c];
    out.push_back(std::move(map));
    std::size_t i = 0;
    while (i < assign.size() && ++assign[i] == codomain) assign[i++] = 0;
    if (i == assign.size()) return out;
  }
}

}  // namespace fixtures
}  // namespace supercomb
