#include <doctest.h>

#include "oracles.hpp"
#include "supercomb/convexity.hpp"
#include "supercomb/fixtures.hpp"

using namespace supercomb;
namespace fx = supercomb::fixtures;

namespace {

PointMap discrete_map(FiniteSpace z, int codomain, std::vector<int> values) {
  PointMap h;
  h.domain = std::move(z);
  h.codomain_size = codomain;
  h.values = std::move(values);
  return h;
}

}  // namespace

TEST_CASE("is_topology on the documented families") {
  FiniteSpace sierp = FiniteSpace::sierpinski();
  CHECK(is_topology(sierp.points, sierp.opens).holds);

  Verdict v = is_topology({"0", "1", "2"}, {0, 0b001, 0b010, 0b111});
  REQUIRE_FALSE(v.holds);
  CHECK(v.witness->sets == std::vector<Mask>{0b011});

  FiniteSpace d2 = FiniteSpace::discrete(2);
  CHECK(is_topology(d2.points, d2.opens).holds);
}

TEST_CASE("components of the documented spaces") {
  CHECK(components(FiniteSpace::sierpinski()) == std::vector<Mask>{0b11});
  CHECK(components(FiniteSpace::discrete(2)) == std::vector<Mask>{0b01, 0b10});

  // disjoint union of sierpinski and a point
  FiniteSpace z{{"a", "b", "c"}, {0, 0b001, 0b011, 0b100, 0b101, 0b111}};
  REQUIRE(is_topology(z.points, z.opens).holds);
  CHECK(components(z) == std::vector<Mask>{0b011, 0b100});
}

TEST_CASE("is_continuous into a discrete codomain") {
  FiniteSpace sierp = FiniteSpace::sierpinski();
  CHECK(is_continuous(discrete_map(sierp, 3, {2, 2})).holds);

  Verdict v = is_continuous(discrete_map(sierp, 2, {0, 1}));
  REQUIRE_FALSE(v.holds);
  CHECK(v.witness->sets == std::vector<Mask>{0b11});

  CHECK(is_continuous(discrete_map(FiniteSpace::discrete(3), 3, {0, 2, 1})).holds);
}

TEST_CASE("continuity into discrete X is exactly component-constancy, |Z| <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for (const FiniteSpace& z : fx::all_topologies(n)) {
      const std::vector<Mask> comps = components(z);
      std::vector<int> values(z.points.size(), 0);
      for (;;) {
        bool constant = true;
        for (Mask cls : comps) {
          const int v0 = values[static_cast<std::size_t>(lowest_point(cls))];
          for (Mask rest = cls; rest; rest &= rest - 1)
            if (values[static_cast<std::size_t>(lowest_point(rest))] != v0) constant = false;
        }
        CHECK(is_continuous(discrete_map(z, 2, values)).holds == constant);
        std::size_t i = 0;
        while (i < values.size() && ++values[i] == 2) values[i++] = 0;
        if (i == values.size()) break;
      }
    }
  }
}

TEST_CASE("is_s_continuous on the documented examples") {
  const Subbase c3 = fx::chain(3);
  FiniteSpace d2 = FiniteSpace::discrete(2);
  CHECK(is_s_continuous(make_set_valued_map(d2, GroundSet(3), {0b101, 0b011}), c3).holds);

  FiniteSpace sierp = FiniteSpace::sierpinski();
  CHECK(is_s_continuous(make_set_valued_map(sierp, GroundSet(3), {0b011, 0b011}), c3).holds);

  Verdict v = is_s_continuous(make_set_valued_map(sierp, GroundSet(3), {0b111, 0b011}), c3);
  REQUIRE_FALSE(v.holds);
  CHECK(v.witness->sets == std::vector<Mask>{0b100, 0b10});
  CHECK(v.witness->note == "containment set not open");
}

TEST_CASE("is_lsc / is_usc on the documented examples") {
  FiniteSpace sierp = FiniteSpace::sierpinski();
  SetValuedMap phi = make_set_valued_map(sierp, GroundSet(3), {0b111, 0b011});
  CHECK(is_lsc(phi).holds);
  Verdict v = is_usc(phi);
  REQUIRE_FALSE(v.holds);
  CHECK(v.witness->sets[0] == 0b011);

  SetValuedMap constant = make_set_valued_map(sierp, GroundSet(3), {0b010, 0b010});
  CHECK(is_lsc(constant).holds);
  CHECK(is_usc(constant).holds);

  SetValuedMap any = make_set_valued_map(FiniteSpace::discrete(2), GroundSet(3), {0b111, 0b001});
  CHECK(is_lsc(any).holds);
  CHECK(is_usc(any).holds);
}

TEST_CASE("continuous set-valued maps are S-continuous") {
  // lsc + usc against the topology generated by complements of members
  for (const auto& [name, sb] : fx::validated_subbases(3)) {
    CAPTURE(name);
    std::vector<Mask> comp_opens;
    const Mask full = sb.family.ground.full();
    for (Mask s : sb.family.members) comp_opens.push_back(full & ~s);
    comp_opens.push_back(0);
    comp_opens.push_back(full);
    SetFamily gen = lattice_close(family_from_masks(sb.family.ground, comp_opens));
    std::vector<Mask> opens(gen.members);
    opens.insert(opens.begin(), 0);
    FiniteSpace x{std::vector<std::string>(static_cast<std::size_t>(sb.family.ground.n), ""),
                  opens};
    for (int i = 0; i < sb.family.ground.n; ++i)
      x.points[static_cast<std::size_t>(i)] = std::to_string(i);
    REQUIRE(is_topology(x.points, x.opens).holds);
    std::vector<Mask> all_values;
    for (Mask v = 1; v <= full; ++v) all_values.push_back(v);
    for (const FiniteSpace& z : fx::all_topologies(2)) {
      std::vector<std::size_t> pick(z.points.size(), 0);
      for (;;) {
        std::vector<Mask> values;
        for (std::size_t p = 0; p < pick.size(); ++p) values.push_back(all_values[pick[p]]);
        SetValuedMap phi = make_set_valued_map(z, sb.family.ground, values);
        if (is_lsc(phi, x).holds && is_usc(phi, x).holds)
          CHECK(is_s_continuous(phi, sb).holds);
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == all_values.size()) pick[i++] = 0;
        if (i == pick.size()) break;
      }
    }
  }
}

TEST_CASE("is_s_open on the documented examples") {
  const Subbase c3 = fx::chain(3);
  Verdict v = is_s_open(make_point_fn(3, 2, {0, 1, 1}), c3);
  CHECK(v.holds);
  REQUIRE(v.trail.size() == 1);
  CHECK(v.trail[0].find("vacuous") != std::string::npos);

  CHECK(is_s_open(make_point_fn(3, 3, {0, 1, 2}), c3).holds);

  // f into sierpinski mapping the complement of {0} to the closed point
  FiniteSpace sierp = FiniteSpace::sierpinski();
  Verdict bad = is_s_open(make_point_fn(3, 2, {0, 1, 1}), c3, sierp);
  REQUIRE_FALSE(bad.holds);
  CHECK(bad.witness->sets[0] == 0b001);

  CHECK_THROWS_AS(is_s_open(make_point_fn(3, 2, {0, 0, 0}), c3), Error);
}

TEST_CASE("is_s_convex_map on the documented examples") {
  const Subbase c3 = fx::chain(3);
  CHECK(is_s_convex_map(make_point_fn(3, 2, {0, 1, 1}), c3).holds);

  Verdict v = is_s_convex_map(make_point_fn(3, 2, {0, 1, 0}), c3);
  REQUIRE_FALSE(v.holds);
  CHECK(v.witness->sets == std::vector<Mask>{0b101});
  CHECK(v.witness->points == std::vector<int>{0});

  CHECK(is_s_convex_map(make_point_fn(3, 3, {0, 1, 2}), c3).holds);
}

TEST_CASE("fiber_map on the documented examples") {
  PointFn f = make_point_fn(3, 2, {0, 1, 1});
  SetValuedMap phi = fiber_map(f);
  CHECK(phi.values == std::vector<Mask>{0b001, 0b110});

  PointFn id = make_point_fn(3, 3, {0, 1, 2});
  CHECK(fiber_map(id).values == std::vector<Mask>{1, 2, 4});

  PointFn constant = make_point_fn(3, 1, {0, 0, 0});
  CHECK(fiber_map(constant).values == std::vector<Mask>{0b111});

  CHECK_THROWS_AS(fiber_map(make_point_fn(3, 3, {0, 0, 1})), Error);
}

TEST_CASE("fibers of convex surjections stay convex through fiber_map") {
  const Subbase c4 = fx::chain(4);
  for (int m = 1; m <= 4; ++m) {
    std::vector<int> values(4, 0);
    for (;;) {
      PointFn f{4, m, values};
      if (f.surjective() && is_s_convex_map(f, c4).holds) {
        SetValuedMap phi = fiber_map(f);
        for (Mask v : phi.values) CHECK(is_convex(c4, v).holds);
      }
      std::size_t i = 0;
      while (i < values.size() && ++values[i] == m) values[i++] = 0;
      if (i == values.size()) break;
    }
  }
}

TEST_CASE("topology corpus generators match the known counts") {
  CHECK(fx::count_labeled_topologies(1) == 1);
  CHECK(fx::count_labeled_topologies(2) == 4);
  CHECK(fx::count_labeled_topologies(3) == 29);
  CHECK(fx::count_labeled_topologies(4) == 355);

  CHECK(fx::all_topologies(1).size() == 1);
  CHECK(fx::all_topologies(2).size() == 3);
  CHECK(fx::all_topologies(3).size() == 9);
  CHECK(fx::all_topologies(4).size() == 33);
  CHECK(fx::all_topologies(5).size() == 139);

  for (const FiniteSpace& z : fx::all_topologies(4))
    CHECK(is_topology(z.points, z.opens).holds);

  CHECK(fx::all_trees(4).size() == 2);
  CHECK(fx::all_trees(5).size() == 3);
  CHECK(fx::all_trees(6).size() == 6);
}

TEST_CASE("from_preorder builds the expected opens") {
  // 0 -> 1 specialization: opens are up-closed sets
  FiniteSpace z = FiniteSpace::from_preorder({0b011, 0b010});
  CHECK(is_topology(z.points, z.opens).holds);
  CHECK(z.opens == std::vector<Mask>{0, 0b010, 0b011});
}
