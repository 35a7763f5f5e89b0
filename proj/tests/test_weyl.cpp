#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "atlas/lattice.hpp"
#include "atlas/matrix.hpp"
#include "atlas/weyl.hpp"

using namespace atlas;

namespace {

// ---------------------------------------------------------------------------
// Independent closure oracle.  Everything here is built from scratch:
// reflections act by the formula b + (b,a)a on explicitly recomputed
// root vectors, elements are permutation arrays in a std::set, and the
// closure is a plain breadth-first sweep.  The resulting order 51840
// is the golden value the library's closure must reproduce.

using PermArray = std::array<std::uint8_t, 72>;

std::vector<LatticeVector> oracle_root_list() {
  std::vector<LatticeVector> out;
  LatticeVector v;
  for (v[0] = -2; v[0] <= 2; ++v[0])
    for (v[1] = -2; v[1] <= 2; ++v[1])
      for (v[2] = -2; v[2] <= 2; ++v[2])
        for (v[3] = -2; v[3] <= 2; ++v[3])
          for (v[4] = -2; v[4] <= 2; ++v[4])
            for (v[5] = -2; v[5] <= 2; ++v[5])
              for (v[6] = -2; v[6] <= 2; ++v[6]) {
                Coord sp = v[0] * v[0];
                for (int i = 1; i < 7; ++i) sp -= v[i] * v[i];
                Coord hp = 3 * v[0];
                for (int i = 1; i < 7; ++i) hp += v[i];
                if (sp == -2 && hp == 0) out.push_back(v);
              }
  return out;  // already lexicographically sorted
}

PermArray oracle_reflection(const std::vector<LatticeVector>& roots, const LatticeVector& alpha) {
  PermArray p{};
  for (std::size_t b = 0; b < roots.size(); ++b) {
    Coord coeff = roots[b][0] * alpha[0];
    for (int i = 1; i < 7; ++i) coeff -= roots[b][i] * alpha[i];
    const LatticeVector img = roots[b] + alpha * coeff;
    const auto it = std::lower_bound(roots.begin(), roots.end(), img);
    REQUIRE(it != roots.end());
    REQUIRE(*it == img);
    p[b] = static_cast<std::uint8_t>(it - roots.begin());
  }
  return p;
}

std::size_t oracle_closure_order(const std::vector<PermArray>& gens) {
  PermArray id{};
  for (std::size_t i = 0; i < 72; ++i) id[i] = static_cast<std::uint8_t>(i);
  std::set<PermArray> seen{id};
  std::vector<PermArray> frontier{id};
  while (!frontier.empty()) {
    std::vector<PermArray> next;
    for (const PermArray& e : frontier)
      for (const PermArray& g : gens) {
        PermArray c{};
        for (std::size_t i = 0; i < 72; ++i) c[i] = g[e[i]];
        if (seen.insert(c).second) next.push_back(c);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace

TEST_CASE("reflect: worked values") {
  const Root delta{LatticeVector{{2, -1, -1, -1, -1, -1, -1}}};
  const Root a1{LatticeVector{{1, -1, -1, -1, 0, 0, 0}}};

  CHECK(reflect(delta, delta.vec()) == -delta.vec());
  // orthogonal vectors are fixed
  const LatticeVector v{{0, 1, -1, 0, 0, 0, 0}};
  REQUIRE(pairing(v, delta.vec()) == 0);
  CHECK(reflect(delta, v) == v);
  // (e0-e1-e2-e3, delta) = -1, so the image is the difference
  CHECK(reflect(delta, a1.vec()) == LatticeVector{{-1, 0, 0, 0, 1, 1, 1}});
  CHECK(reflect(delta, a1.vec()) == -(LatticeVector{{1, 0, 0, 0, -1, -1, -1}}));
}

TEST_CASE("reflections are involutions preserving the pairing and fixing h") {
  const auto& rs = root_system();
  for (int a = 0; a < 72; a += 5) {
    const Root& alpha = rs[a];
    CHECK(reflect(alpha, hyperplane_class()) == hyperplane_class());
    for (int b = 0; b < 72; ++b) {
      const LatticeVector img = reflect(alpha, rs[b].vec());
      CHECK(reflect(alpha, img) == rs[b].vec());
      CHECK(rs.index_of(img) >= 0);
    }
    // pairing preserved on a sample of pairs
    for (int b = 0; b < 72; b += 7)
      for (int c = 0; c < 72; c += 11)
        CHECK(pairing(reflect(alpha, rs[b].vec()), reflect(alpha, rs[c].vec())) ==
              pairing(rs[b], rs[c]));
  }
}

TEST_CASE("picard_lefschetz_word") {
  const Root delta{LatticeVector{{2, -1, -1, -1, -1, -1, -1}}};
  const auto s = simple_roots();

  CHECK(picard_lefschetz_word({}).is_identity());
  CHECK(picard_lefschetz_word(std::vector<Root>{delta, delta}).is_identity());

  // adjacent roots (pairing 1) braid: r1 r4 has order 3
  REQUIRE(pairing(s[0], s[3]) == 1);
  const auto w = picard_lefschetz_word(std::vector<Root>{s[0], s[3]});
  CHECK(w.order() == 3);
  CHECK(picard_lefschetz_word(std::vector<Root>{s[0], s[3], s[0], s[3], s[0], s[3]}).is_identity());
}

TEST_CASE("weyl element matrix reconstruction is faithful") {
  const auto s = simple_roots();
  const WeylElement id(RootPerm::identity());
  CHECK(id.matrix() == Mat7::identity());

  const WeylElement r0 = reflection(s[0]);
  const WeylElement again(r0.perm());  // rebuild the matrix from the permutation alone
  CHECK(again.matrix() == r0.matrix());
  CHECK(r0.apply(hyperplane_class()) == hyperplane_class());
  CHECK((r0 * r0).is_identity());
}

TEST_CASE("group closure: golden order 51840 from the independent oracle") {
  const auto roots = oracle_root_list();
  REQUIRE(roots.size() == 72);

  const std::array<LatticeVector, 6> simple = {
      LatticeVector{{1, -1, -1, -1, 0, 0, 0}}, LatticeVector{{0, 1, -1, 0, 0, 0, 0}},
      LatticeVector{{0, 0, 1, -1, 0, 0, 0}},  LatticeVector{{0, 0, 0, 1, -1, 0, 0}},
      LatticeVector{{0, 0, 0, 0, 1, -1, 0}},  LatticeVector{{0, 0, 0, 0, 0, 1, -1}}};
  std::vector<PermArray> gens;
  for (const auto& a : simple) gens.push_back(oracle_reflection(roots, a));

  CHECK(oracle_closure_order(gens) == 51840);  // frozen golden value
  CHECK(full_weyl_group().order() == 51840);
}

TEST_CASE("small closures") {
  const Root delta{LatticeVector{{2, -1, -1, -1, -1, -1, -1}}};
  const auto s = simple_roots();

  CHECK(ReflectionGroup::generate({delta}).order() == 2);
  CHECK(ReflectionGroup::generate({s[0], s[3]}).order() == 6);  // W(A2)
  CHECK(51840 % ReflectionGroup::generate({s[0], s[3]}).order() == 0);
}

TEST_CASE("materialized groups are closed under composition and inverse") {
  const auto s = simple_roots();
  const auto g = ReflectionGroup::generate({s[0], s[3], s[1]});
  const auto& els = g.elements();
  CHECK(51840 % g.order() == 0);
  const std::set<RootPerm> members(els.begin(), els.end());
  CHECK(members.size() == g.order());
  for (const RootPerm& a : els) {
    CHECK(members.count(a.inverse()) == 1);
    for (const RootPerm& b : els) CHECK(members.count(compose(a, b)) == 1);
  }
  CHECK(members.count(RootPerm::identity()) == 1);
}

TEST_CASE("orbits: degenerate, A1 and full cases") {
  const auto s = simple_roots();
  const Root delta{LatticeVector{{2, -1, -1, -1, -1, -1, -1}}};

  SECTION("no generators: 72 singletons") {
    const auto blocks = orbits(std::vector<Root>{});
    CHECK(blocks.size() == 72);
    for (const auto& b : blocks) CHECK(b.size() == 1);
  }

  SECTION("single reflection: 51 blocks sized {1 x 30, 2 x 21}") {
    // independent union-find oracle
    const auto roots = oracle_root_list();
    std::vector<int> parent(72);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      return x;
    };
    const auto refl = oracle_reflection(roots, delta.vec());
    for (int x = 0; x < 72; ++x) {
      const int a = find(x), b = find(refl[static_cast<std::size_t>(x)]);
      if (a != b) parent[static_cast<std::size_t>(a)] = b;
    }
    std::map<int, int> size;
    for (int x = 0; x < 72; ++x) size[find(x)] += 1;
    int singletons = 0, pairs = 0;
    for (const auto& [root, n] : size) (n == 1 ? singletons : pairs) += 1;
    CHECK(size.size() == 51);
    CHECK(singletons == 30);
    CHECK(pairs == 21);

    const auto blocks = orbits(std::vector<Root>{delta});
    CHECK(blocks.size() == 51);
    int got_single = 0, got_double = 0;
    for (const auto& b : blocks) {
      if (b.size() == 1) ++got_single;
      else if (b.size() == 2) ++got_double;
      else FAIL("unexpected block size");
    }
    CHECK(got_single == 30);
    CHECK(got_double == 21);
  }

  SECTION("simple roots act transitively") {
    const auto blocks = orbits(std::vector<Root>(s.begin(), s.end()));
    REQUIRE(blocks.size() == 1);
    CHECK(blocks.front().size() == 72);
  }

  SECTION("blocks are sorted by least index and sum to 72") {
    const auto blocks = orbits(std::vector<Root>{delta});
    std::size_t total = 0;
    int prev = -1;
    for (const auto& b : blocks) {
      CHECK(std::is_sorted(b.begin(), b.end()));
      CHECK(b.front() > prev);
      prev = b.front();
      total += b.size();
    }
    CHECK(total == 72);
  }
}
