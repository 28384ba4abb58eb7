#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "supercomb/fixtures.hpp"
#include "supercomb/superext.hpp"

using namespace supercomb;
namespace fx = supercomb::fixtures;

namespace {

MLS delta3() { return mls_from_minimal(GroundSet(3), {0b011, 0b110, 0b101}); }

}  // namespace

TEST_CASE("mls_from_minimal validates the invariants") {
  CHECK(delta3().minimal == std::vector<Mask>{0b011, 0b101, 0b110});
  CHECK_THROWS_AS(mls_from_minimal(GroundSet(3), {0b001, 0b011}), Error);  // not an antichain
  CHECK_THROWS_AS(mls_from_minimal(GroundSet(3), {0b001, 0b010}), Error);  // not linked
  CHECK_THROWS_AS(mls_from_minimal(GroundSet(3), {0b011}), Error);         // not maximal
  CHECK_THROWS_AS(mls_from_minimal(GroundSet(3), {}), Error);
}

TEST_CASE("mls_contains checks the up-closure") {
  const MLS d = delta3();
  CHECK(mls_contains(d, 0b101));
  CHECK_FALSE(mls_contains(d, 0b010));
  CHECK(mls_contains(eta(0, GroundSet(3)), 0b101));
  CHECK(mls_contains(d, 0b111));
}

TEST_CASE("mls_complete extends linked families") {
  auto principal = mls_complete(normalize_family({{0}}, GroundSet(3)));
  REQUIRE(principal.size() == 1);
  CHECK(principal[0] == eta(0, GroundSet(3)));

  auto tri = mls_complete(fx::triangle());
  REQUIRE(tri.size() == 1);
  CHECK(tri[0] == delta3());

  auto everything = mls_complete(normalize_family({{0, 1, 2}}, GroundSet(3)));
  CHECK(everything.size() == 4);

  CHECK_THROWS_AS(mls_complete(normalize_family({{0}, {1}}, GroundSet(2))), Error);
}

TEST_CASE("enumerate_mls matches the documented counts and the antichain oracle") {
  const std::uint64_t expected[] = {0, 1, 2, 4, 12, 81, 2646};
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(count_mls(GroundSet(n)) == expected[n]);
    CHECK(testing::oracle_count_mls(GroundSet(n)) == expected[n]);
    CHECK(testing::clique_count_mls(GroundSet(n)) == expected[n]);
  }
  // element-wise agreement with the oracle
  for (int n = 1; n <= 5; ++n) {
    const Superextension lam = enumerate_mls(GroundSet(n));
    const auto oracle = testing::oracle_minimal_families(GroundSet(n));
    REQUIRE(lam.elements.size() == oracle.size());
    for (std::size_t i = 0; i < oracle.size(); ++i) CHECK(lam.elements[i].minimal == oracle[i]);
  }
  CHECK_THROWS_AS(count_mls(GroundSet(8)), Error);
}

TEST_CASE("enumerated systems satisfy the MLS invariants") {
  for (int n = 1; n <= 5; ++n) {
    const Superextension lam = enumerate_mls(GroundSet(n));
    for (const MLS& m : lam.elements) CHECK_NOTHROW(mls_from_minimal(m.ground, m.minimal));
    for (std::size_t i = 0; i + 1 < lam.elements.size(); ++i)
      CHECK(mls_less(lam.elements[i], lam.elements[i + 1]));
  }
}

TEST_CASE("parallel enumeration is identical to sequential") {
  for (int par : {2, 4, 8, 64}) {
    CAPTURE(par);
    const Superextension seq = enumerate_mls(GroundSet(5));
    const Superextension parallel = enumerate_mls(GroundSet(5), EnumOptions{par});
    REQUIRE(seq.elements.size() == parallel.elements.size());
    for (std::size_t i = 0; i < seq.elements.size(); ++i)
      CHECK(seq.elements[i] == parallel.elements[i]);
    CHECK(count_mls(GroundSet(6), EnumOptions{par}) == 2646);
  }
}

TEST_CASE("the enumerated set is closed under ground permutations") {
  // a transposition and a full cycle generate the whole symmetric group
  for (int n = 2; n <= 6; ++n) {
    const Superextension lam = enumerate_mls(GroundSet(n));
    std::vector<std::vector<Mask>> keys;
    for (const MLS& m : lam.elements) keys.push_back(m.minimal);
    std::vector<int> swap01(static_cast<std::size_t>(n));
    std::iota(swap01.begin(), swap01.end(), 0);
    std::swap(swap01[0], swap01[1]);
    std::vector<int> cycle(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % n;
    for (const auto& perm : {swap01, cycle}) {
      for (const MLS& m : lam.elements) {
        const MLS mapped = testing::permute_mls(m, perm);
        CHECK(std::binary_search(keys.begin(), keys.end(), mapped.minimal));
      }
    }
  }
}

TEST_CASE("eta is the principal system and embeds into the enumeration") {
  CHECK(eta(0, GroundSet(3)).minimal == std::vector<Mask>{0b001});
  CHECK_THROWS_AS(eta(1, GroundSet(1)), Error);
  for (int n = 1; n <= 4; ++n) {
    const Superextension lam = enumerate_mls(GroundSet(n));
    for (int x = 0; x < n; ++x) {
      const MLS ex = eta(x, GroundSet(n));
      bool found = false;
      for (const MLS& m : lam.elements)
        if (m == ex) found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("plus_set on the documented examples") {
  const Superextension lam = enumerate_mls(GroundSet(3));
  // canonical order: eta0, eta1, delta, eta2
  REQUIRE(lam.elements.size() == 4);
  CHECK(lam.elements[2] == delta3());

  CHECK(plus_set(0b010, lam) == std::vector<std::size_t>{1});
  CHECK(plus_set(0b011, lam) == std::vector<std::size_t>{0, 1, 2});
  CHECK(plus_set(0b111, lam) == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK_THROWS_AS(plus_set(0, lam), Error);
}

TEST_CASE("lambda_subbase over two points") {
  const Superextension lam = enumerate_mls(GroundSet(2));
  const Subbase sb = lambda_subbase(lam);
  CHECK(sb.family.ground.n == 2);
  CHECK(sb.family.members == std::vector<Mask>{0b01, 0b10, 0b11});
}

TEST_CASE("lambda_subbase is binary, normal and point-separating up to n = 4") {
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    const Subbase sb = lambda_subbase(enumerate_mls(GroundSet(n)));
    CHECK(validate_subbase(sb).holds);
  }
  // the plus-set family is not union-closed: the strict profile fails at n = 3
  Subbase strict = lambda_subbase(enumerate_mls(GroundSet(3)));
  strict.strictness = Strictness::PaperStrict;
  Verdict v = validate_subbase(strict);
  REQUIRE_FALSE(v.holds);
  CHECK(v.witness->kind == "not-union-closed");
}

TEST_CASE("lambda_map on the documented examples") {
  PointFn f = make_point_fn(3, 2, {0, 0, 1});
  CHECK(lambda_map(f, delta3()) == eta(0, GroundSet(2)));

  for (int n = 1; n <= 4; ++n) {
    std::vector<int> ident(static_cast<std::size_t>(n));
    std::iota(ident.begin(), ident.end(), 0);
    PointFn id = make_point_fn(n, n, ident);
    for (const MLS& m : enumerate_mls(GroundSet(n)).elements) CHECK(lambda_map(id, m) == m);
  }

  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 4; ++m) {
      std::vector<int> values(static_cast<std::size_t>(n), 0);
      for (;;) {
        PointFn fn{n, m, values};
        for (int x = 0; x < n; ++x)
          CHECK(lambda_map(fn, eta(x, GroundSet(n))) ==
                eta(values[static_cast<std::size_t>(x)], GroundSet(m)));
        std::size_t i = 0;
        while (i < values.size() && ++values[i] == m) values[i++] = 0;
        if (i == values.size()) break;
      }
    }
}

TEST_CASE("lambda functoriality: composition and identity") {
  // exhaustive over all f: [n]->[m], g: [m]->[l] with n,m,l <= 3
  for (int n = 1; n <= 3; ++n) {
    const Superextension lam = enumerate_mls(GroundSet(n));
    for (int m = 1; m <= 3; ++m) {
      std::vector<int> fv(static_cast<std::size_t>(n), 0);
      for (;;) {
        const PointFn f{n, m, fv};
        for (int l = 1; l <= 3; ++l) {
          std::vector<int> gv(static_cast<std::size_t>(m), 0);
          for (;;) {
            const PointFn g{m, l, gv};
            std::vector<int> comp;
            for (int x = 0; x < n; ++x)
              comp.push_back(gv[static_cast<std::size_t>(fv[static_cast<std::size_t>(x)])]);
            const PointFn gf{n, l, comp};
            for (const MLS& e : lam.elements)
              CHECK(lambda_map(gf, e) == lambda_map(g, lambda_map(f, e)));
            std::size_t i = 0;
            while (i < gv.size() && ++gv[i] == l) gv[i++] = 0;
            if (i == gv.size()) break;
          }
        }
        std::size_t i = 0;
        while (i < fv.size() && ++fv[i] == m) fv[i++] = 0;
        if (i == fv.size()) break;
      }
    }
  }
  // seeded spot checks at n = m = 4
  std::mt19937 rng(23);
  const Superextension lam4 = enumerate_mls(GroundSet(4));
  for (int round = 0; round < 50; ++round) {
    std::vector<int> fv(4), gv(4);
    for (auto& v : fv) v = static_cast<int>(rng() % 4);
    for (auto& v : gv) v = static_cast<int>(rng() % 4);
    const PointFn f{4, 4, fv}, g{4, 4, gv};
    std::vector<int> comp;
    for (int x = 0; x < 4; ++x)
      comp.push_back(gv[static_cast<std::size_t>(fv[static_cast<std::size_t>(x)])]);
    const PointFn gf{4, 4, comp};
    for (const MLS& e : lam4.elements)
      CHECK(lambda_map(gf, e) == lambda_map(g, lambda_map(f, e)));
  }
}

TEST_CASE("fiber identity for lambda_map up to n = 4") {
  for (int n = 1; n <= 4; ++n) {
    const Superextension lam = enumerate_mls(GroundSet(n));
    for (int m = 1; m <= 4; ++m) {
      const Superextension mu = enumerate_mls(GroundSet(m));
      std::vector<int> fv(static_cast<std::size_t>(n), 0);
      for (;;) {
        const PointFn f{n, m, fv};
        for (const MLS& nu : mu.elements) {
          // left side: the fiber of nu under lambda f
          std::vector<std::size_t> fiber;
          for (std::size_t i = 0; i < lam.elements.size(); ++i)
            if (lambda_map(f, lam.elements[i]) == nu) fiber.push_back(i);
          // right side: meet of the plus-sets of the preimages of the minimal
          // members; an empty preimage empties the whole meet
          bool empty = false;
          std::vector<std::size_t> meet;
          bool first = true;
          for (Mask h : nu.minimal) {
            const Mask pre = f.preimage(h);
            if (pre == 0) {
              empty = true;
              break;
            }
            const auto ps = plus_set(pre, lam);
            if (first) {
              meet = ps;
              first = false;
            } else {
              std::vector<std::size_t> keep;
              std::set_intersection(meet.begin(), meet.end(), ps.begin(), ps.end(),
                                    std::back_inserter(keep));
              meet = std::move(keep);
            }
          }
          if (empty) meet.clear();
          CHECK(fiber == meet);
        }
        std::size_t i = 0;
        while (i < fv.size() && ++fv[i] == m) fv[i++] = 0;
        if (i == fv.size()) break;
      }
    }
  }
}

TEST_CASE("retract on the documented examples") {
  const Subbase c3 = fx::chain(3);
  CHECK(retract(c3, delta3()) == 1);
  CHECK(retract(c3, eta(0, GroundSet(3))) == 0);

  CHECK_THROWS_AS(retract(Subbase{fx::triangle()}, delta3()), Error);
  try {
    retract(Subbase{fx::triangle()}, delta3());
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotSingleton);
  }
}

TEST_CASE("retract inverts eta on every validated fixture") {
  for (const auto& [name, sb] : fx::validated_subbases(6)) {
    CAPTURE(name);
    for (int x = 0; x < sb.family.ground.n; ++x)
      CHECK(retract(sb, eta(x, sb.family.ground)) == x);
  }
}
