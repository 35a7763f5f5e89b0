#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "atlas/config.hpp"
#include "atlas/lattice.hpp"
#include "atlas/weyl.hpp"

using namespace atlas;

TEST_CASE("close_subsystem") {
  const Root delta{LatticeVector{{2, -1, -1, -1, -1, -1, -1}}};
  const auto s = simple_roots();

  SECTION("single root closes to +-delta") {
    const auto sub = close_subsystem(std::vector<Root>{delta});
    REQUIRE(sub.roots.size() == 2);
    CHECK(sub.roots[0].vec() == -delta.vec());
    CHECK(sub.roots[1].vec() == delta.vec());
    CHECK(sub.label.str() == "A1");
    CHECK(sub.simple.size() == 1);
  }

  SECTION("two adjacent simple roots close to an A2 copy (6 roots)") {
    const auto sub = close_subsystem(std::vector<Root>{s[0], s[3]});
    CHECK(sub.roots.size() == 6);
    CHECK(sub.label.str() == "A2");
    // negation-closed
    for (const Root& r : sub.roots)
      CHECK(std::find_if(sub.roots.begin(), sub.roots.end(),
                         [&](const Root& q) { return q.vec() == -r.vec(); }) != sub.roots.end());
  }

  SECTION("all six simple roots close to the full system") {
    const auto sub = close_subsystem(std::vector<Root>(s.begin(), s.end()));
    CHECK(sub.roots.size() == 72);
    CHECK(sub.label.str() == "E6");
  }

  SECTION("empty input") {
    const auto sub = close_subsystem(std::vector<Root>{});
    CHECK(sub.roots.empty());
    CHECK(sub.label.empty());
  }
}

TEST_CASE("simple_system") {
  const Root delta{LatticeVector{{2, -1, -1, -1, -1, -1, -1}}};
  const auto s = simple_roots();

  SECTION("rank-1 subsystem") {
    const auto simple = simple_system(std::vector<Root>{delta, -delta});
    REQUIRE(simple.size() == 1);
    CHECK((simple[0].vec() == delta.vec() || simple[0].vec() == -delta.vec()));
  }

  SECTION("A2 copy: two simples with pairing 1") {
    const auto sub = close_subsystem(std::vector<Root>{s[0], s[3]});
    const auto simple = simple_system(sub.roots);
    REQUIRE(simple.size() == 2);
    CHECK(pairing(simple[0], simple[1]) == 1);
  }

  SECTION("full system gives back the six canonical simple roots") {
    std::vector<Root> all(root_system().roots());
    const auto simple = simple_system(all);
    REQUIRE(simple.size() == 6);
    std::set<LatticeVector> got, want;
    for (const Root& r : simple) got.insert(r.vec());
    for (const Root& r : s) want.insert(r.vec());
    CHECK(got == want);
  }

  SECTION("rejects non-closed input") {
    CHECK_THROWS_AS(simple_system(std::vector<Root>{delta}), NotClosed);  // missing -delta
  }

  SECTION("every closed-subsystem root is a one-signed combination of the simples") {
    const auto sub = close_subsystem(std::vector<Root>{s[1], s[2], s[4]});
    for (const Root& r : sub.roots) {
      // expand in the simple basis by brute force over small coefficients
      const int k = static_cast<int>(sub.simple.size());
      bool found_one_signed = false;
      std::vector<Coord> c(static_cast<std::size_t>(k), -3);
      while (true) {
        LatticeVector sum{};
        for (int i = 0; i < k; ++i) sum = sum + sub.simple[static_cast<std::size_t>(i)].vec() * c[static_cast<std::size_t>(i)];
        if (sum == r.vec()) {
          const bool nonneg = std::all_of(c.begin(), c.end(), [](Coord x) { return x >= 0; });
          const bool nonpos = std::all_of(c.begin(), c.end(), [](Coord x) { return x <= 0; });
          if (nonneg || nonpos) found_one_signed = true;
        }
        int i = 0;
        while (i < k && c[static_cast<std::size_t>(i)] == 3) c[static_cast<std::size_t>(i++)] = -3;
        if (i == k) break;
        c[static_cast<std::size_t>(i)] += 1;
      }
      CHECK(found_one_signed);
    }
  }
}

TEST_CASE("classify") {
  const Root delta{LatticeVector{{2, -1, -1, -1, -1, -1, -1}}};
  const auto s = simple_roots();

  CHECK(classify(std::vector<Root>{delta}).str() == "A1");
  CHECK(classify(std::vector<Root>(s.begin(), s.end())).str() == "E6");
  CHECK(classify(std::vector<Root>{Root{LatticeVector{{0, 1, -1, 0, 0, 0, 0}}},
                                   Root{LatticeVector{{0, 0, 0, 1, -1, 0, 0}}}})
            .str() == "2A1");
  CHECK(classify(std::vector<Root>{}).str() == "∅");

  // a D4 copy: the star around a4 = e3-e4
  CHECK(classify(std::vector<Root>{s[0], s[2], s[3], s[4]}).str() == "D4");
  // a D5 copy and an A5 copy
  CHECK(classify(std::vector<Root>{s[0], s[2], s[3], s[4], s[5]}).str() == "D5");
  CHECK(classify(std::vector<Root>{s[1], s[2], s[3], s[4], s[5]}).str() == "A5");
}

TEST_CASE("realize: deterministic embeddings for every table row") {
  for (const char* label :
       {"∅", "A1", "2A1", "A2", "3A1", "A1+A2", "A3", "4A1", "2A1+A2", "A1+A3", "2A2",
        "A4", "D4", "2A1+A3", "A1+2A2", "A1+A4", "A5", "D5", "A1+A5", "3A2", "E6"}) {
    const auto config = SubsystemConfig::parse(label);
    const auto gens = realize(config);
    CHECK(static_cast<int>(gens.size()) == config.total_rank());
    CHECK(classify(gens) == config);
    CHECK(close_subsystem(gens).roots.size() == config.root_count());
    // deterministic: a second call returns the same roots
    CHECK(realize(config) == gens);
  }
}

TEST_CASE("realize: impossible configurations") {
  CHECK_THROWS_AS(realize(SubsystemConfig::parse("A2+A3")), NotEmbeddable);
  CHECK_THROWS_AS(realize(SubsystemConfig::parse("4A2")), RankTooLarge);
  CHECK_THROWS_AS(realize(SubsystemConfig::parse("A6")), NotEmbeddable);
  CHECK_THROWS_AS(realize(SubsystemConfig::parse("D6")), NotEmbeddable);
  CHECK_THROWS_AS(realize(SubsystemConfig::parse("E7")), RankTooLarge);
  CHECK_THROWS_AS(realize(SubsystemConfig::parse("A3+D4")), RankTooLarge);
  // further non-embeddable rank <= 6 types
  CHECK_THROWS_AS(realize(SubsystemConfig::parse("A1+D4")), NotEmbeddable);
  CHECK_THROWS_AS(realize(SubsystemConfig::parse("2A1+A2+A1")), NotEmbeddable);  // = 3A1+A2
}

TEST_CASE("realize: E6 returns the canonical simple roots") {
  const auto gens = realize(SubsystemConfig::parse("E6"));
  const auto s = simple_roots();
  std::set<LatticeVector> got, want;
  for (const Root& r : gens) got.insert(r.vec());
  for (const Root& r : s) want.insert(r.vec());
  CHECK(got == want);
}

TEST_CASE("orbit_max") {
  const Root delta{LatticeVector{{2, -1, -1, -1, -1, -1, -1}}};
  const auto s = simple_roots();

  SECTION("rank 1: the positive root dominates") {
    const auto maxima = orbit_max({delta, -delta}, {delta});
    REQUIRE(maxima.size() == 1);
    CHECK(maxima[0].vec() == delta.vec());
  }

  SECTION("A2 copy: single maximal root, the component's highest root") {
    const auto sub = close_subsystem(std::vector<Root>{s[0], s[3]});
    const auto maxima = orbit_max(sub.roots, sub.simple);
    REQUIRE(maxima.size() == 1);
    // highest root of the A2 copy = sum of its two simples
    CHECK(maxima[0].vec() == sub.simple[0].vec() + sub.simple[1].vec());
  }

  SECTION("singleton orbit is its own maximum") {
    const Root fixed{LatticeVector{{0, 1, -1, 0, 0, 0, 0}}};
    REQUIRE(pairing(fixed, delta) == 0);
    const auto maxima = orbit_max({fixed}, {delta});
    REQUIRE(maxima.size() == 1);
    CHECK(maxima[0].vec() == fixed.vec());
  }

  SECTION("error paths") {
    CHECK_THROWS_AS(orbit_max({delta}, {delta}), NotAnOrbit);  // half an orbit
    CHECK_THROWS_AS(orbit_max({delta, -delta}, {delta, -delta}), NotSimpleSystem);
    CHECK_THROWS_AS(orbit_max({}, {delta}), NotAnOrbit);
  }

  SECTION("irreducible component: unique maximum is the highest root") {
    // the whole D4 copy is a single orbit of its Weyl group; the unique
    // maximal root cannot be extended by any simple root
    const auto sub = close_subsystem(realize(SubsystemConfig::parse("D4")));
    REQUIRE(sub.roots.size() == 24);
    const auto maxima = orbit_max(sub.roots, sub.simple);
    REQUIRE(maxima.size() == 1);
    const LatticeVector theta = maxima[0].vec();
    std::set<LatticeVector> member_set;
    for (const Root& r : sub.roots) member_set.insert(r.vec());
    CHECK(member_set.count(theta) == 1);
    for (const Root& a : sub.simple) CHECK(member_set.count(theta + a.vec()) == 0);
  }

  SECTION("orbit inside one factor of a reducible subsystem") {
    const Root d1{LatticeVector{{0, 1, -1, 0, 0, 0, 0}}};
    const Root d2{LatticeVector{{0, 0, 0, 1, -1, 0, 0}}};
    REQUIRE(pairing(d1, d2) == 0);
    const auto maxima = orbit_max({d1, -d1}, {d1, d2});
    REQUIRE(maxima.size() == 1);
    CHECK(maxima[0].vec() == d1.vec());
  }
}
