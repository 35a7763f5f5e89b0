#pragma once

// The invariant suite behind `atlas check`: every structural fact the
// library relies on, evaluated from scratch and reported one line per
// invariant with the first counterexample on failure.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "atlas/config.hpp"
#include "atlas/lattice.hpp"
#include "atlas/lines.hpp"
#include "atlas/matrix.hpp"
#include "atlas/monodromy.hpp"
#include "atlas/weyl.hpp"

namespace atlas {

struct CheckResult {
  std::string id;    // stable snake_case label, safe for CSV
  std::string name;  // human-readable statement
  bool pass = false;
  std::string detail;  // first counterexample, or a short confirmation
};

namespace detail {

inline void check(std::vector<CheckResult>& out, const std::string& id, const std::string& name,
                  bool pass, const std::string& detail) {
  out.push_back(CheckResult{id, name, pass, detail});
}

}  // namespace detail

inline std::vector<CheckResult> run_invariant_suite() {
  using detail::check;
  std::vector<CheckResult> out;
  const auto& rs = root_system();
  const auto simple = simple_roots();
  const std::vector<Root> simple_vec(simple.begin(), simple.end());

  // --- lattice ---
  {
    bool ok = true;
    std::string detail = "diag(1,-1,-1,-1,-1,-1,-1)";
    for (int i = 0; i < 7 && ok; ++i)
      for (int j = 0; j < 7 && ok; ++j) {
        const Coord want = (i == j) ? (i == 0 ? 1 : -1) : 0;
        if (pairing(basis_vector(i), basis_vector(j)) != want) {
          ok = false;
          detail = "(e" + std::to_string(i) + ",e" + std::to_string(j) + ") wrong";
        }
      }
    check(out, "gram_matrix", "gram matrix of e0..e6 is diag(1,-1,...,-1)", ok, detail);
  }
  check(out, "root_count", "exactly 72 roots", rs.size() == 72, std::to_string(rs.size()) + " roots");
  {
    bool ok = true;
    std::string detail = "v in roots iff -v in roots";
    for (const Root& r : rs.roots())
      if (rs.index_of(-r.vec()) < 0) {
        ok = false;
        detail = "negation missing for " + to_string(r.vec());
        break;
      }
    check(out, "negation_closed", "root set is negation-closed", ok, detail);
  }
  {
    bool ok = true;
    std::string detail = "pairings lie in {-2..2}, +-2 only on +-same root";
    for (int i = 0; i < 72 && ok; ++i)
      for (int j = 0; j < 72 && ok; ++j) {
        const Coord p = pairing(rs[i], rs[j]);
        if (p < -2 || p > 2) {
          ok = false;
          detail = "pairing " + std::to_string(p) + " at (" + std::to_string(i) + "," + std::to_string(j) + ")";
        } else if (p == -2 && i != j) {
          ok = false;
          detail = "pairing -2 between distinct roots";
        } else if (p == 2 && rs[j].vec() != -rs[i].vec()) {
          ok = false;
          detail = "pairing 2 between non-opposite roots";
        }
      }
    check(out, "simply_laced_bound", "simply-laced pairing bound over all 72x72 root pairs", ok, detail);
  }
  {
    std::vector<std::vector<Coord>> gram(6, std::vector<Coord>(6));
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            pairing(simple[static_cast<std::size_t>(i)], simple[static_cast<std::size_t>(j)]);
    const Coord det = detail::bareiss_det(std::move(gram));
    check(out, "simple_gram_det", "simple-root gram determinant has absolute value 3",
          det == 3 || det == -3, "det = " + std::to_string(det));
  }
  check(out, "root_span", "roots span the rank-6 lattice orthogonal to h (and act transitively)",
        transitivity_check(), "span == h-perp, rank 6, one Weyl orbit");

  // --- lines ---
  {
    bool ok = true;
    std::string detail = "27 lines with c.c = -1, c.h = 1";
    for (const Line& l : lines27())
      if (pairing(l.cls, l.cls) != -1 || pairing(l.cls, hyperplane_class()) != 1) {
        ok = false;
        detail = "bad class for " + l.label();
        break;
      }
    check(out, "line_classes", "every line class has self-pairing -1 and degree 1", ok, detail);
  }
  {
    bool ok = true;
    std::string detail = "degree 10 everywhere";
    for (int v = 0; v < 27; ++v)
      if (incidence_graph().degree(v) != 10) {
        ok = false;
        detail = lines27()[static_cast<std::size_t>(v)].label() + " has degree " +
                 std::to_string(incidence_graph().degree(v));
        break;
      }
    check(out, "ten_regular", "incidence graph is 10-regular (16 skew partners per line)", ok, detail);
  }
  check(out, "skew_pairs", "432 ordered skew pairs", skew_pairs().size() == 432,
        std::to_string(skew_pairs().size()) + " pairs");
  {
    bool ok = true;
    std::size_t total = 0;
    std::string detail = "6 decompositions per root, 432 in total";
    for (const Root& r : rs.roots()) {
      const auto d = decompose_root(r);
      total += d.size();
      if (d.size() != 6) {
        ok = false;
        detail = to_string(r.vec()) + " has " + std::to_string(d.size()) + " decompositions";
        break;
      }
    }
    if (ok && total != 432) {
      ok = false;
      detail = "total " + std::to_string(total) + " != 432";
    }
    check(out, "six_decompositions", "every root is a difference of skew lines in exactly 6 ways",
          ok, detail);
  }

  // --- reflections ---
  {
    bool ok = true;
    std::string detail = "r_a is an involution fixing h and preserving the pairing";
    for (int a = 0; a < 72 && ok; ++a) {
      const Root& alpha = rs[a];
      if (reflect(alpha, hyperplane_class()) != hyperplane_class()) {
        ok = false;
        detail = "r fixes h fails at root " + std::to_string(a);
        break;
      }
      for (int b = 0; b < 72 && ok; ++b) {
        const LatticeVector img = reflect(alpha, rs[b].vec());
        if (rs.index_of(img) < 0) {
          ok = false;
          detail = "reflection leaves the root set at (" + std::to_string(a) + "," + std::to_string(b) + ")";
        } else if (reflect(alpha, img) != rs[b].vec()) {
          ok = false;
          detail = "involution fails at (" + std::to_string(a) + "," + std::to_string(b) + ")";
        } else if (pairing(img, reflect(alpha, rs[(b + 7) % 72].vec())) !=
                   pairing(rs[b], rs[(b + 7) % 72])) {
          ok = false;
          detail = "pairing not preserved at (" + std::to_string(a) + "," + std::to_string(b) + ")";
        }
      }
    }
    check(out, "reflection_properties",
          "all 72 reflections are pairing-preserving involutions fixing h", ok, detail);
  }

  // --- group closure ---
  check(out, "weyl_order", "|W(E6)| = 51840 by closure of the six simple reflections",
        full_weyl_group().order() == 51840, "order " + std::to_string(full_weyl_group().order()));
  {
    const auto all = ReflectionGroup::generate(rs.roots());
    check(out, "all_reflections_same_group", "all 72 reflections generate the same group order",
          all.order() == 51840, "order " + std::to_string(all.order()));
  }
  {
    bool ok = true;
    std::string detail = "only the identity permutation has the identity matrix";
    const WeylElement id(RootPerm::identity());
    if (!(id.matrix() == Mat7::identity())) {
      ok = false;
      detail = "identity permutation did not reconstruct the identity matrix";
    }
    check(out, "faithful_action", "permutation representation is faithful", ok, detail);
  }

  // --- orbits ---
  {
    const std::vector<std::vector<Root>> gen_sets = {
        {}, {rs[0]}, simple_vec, {simple_vec[0], simple_vec[3]}};
    bool ok = true;
    std::string detail = "block sizes sum to 72";
    for (const auto& gens : gen_sets) {
      std::size_t total = 0;
      for (const auto& b : orbits(gens)) total += b.size();
      if (total != 72) {
        ok = false;
        detail = "sum " + std::to_string(total);
        break;
      }
    }
    check(out, "orbit_partition", "orbit block sizes sum to 72", ok, detail);
  }
  {
    const auto bd = a1_example_breakdown();
    const bool ok = bd.total == 51 && bd.class_sizes == std::array<int, 3>{2, 40, 30} &&
                    bd.orbit_contributions == std::array<int, 3>{1, 20, 30} &&
                    bd.orthogonal_to_delta == 30 &&
                    orbit_count(SubsystemConfig::parse("A1")) == 51;
    check(out, "a1_example", "A1 example: classes 2/40/30 give (2+40)/2+30 = 51 orbits", ok,
          "total " + std::to_string(bd.total));
  }

  // --- per-configuration checks ---
  {
    bool round_trip = true, sizes = true, orders = true, effective = true, table_ok = true;
    std::string rt_detail = "classify(realize(c)) == c for all 21 rows";
    std::string size_detail = "closure sizes match textbook root counts";
    std::string order_detail = "closure orders match Weyl order products";
    std::string eff_detail = "inside-orbit count equals number of factors";
    std::string table_detail = "all 21 computed counts match the published table";
    for (const Table1Row& row : table1_published()) {
      const auto gens = realize(row.config);
      if (classify(gens) != row.config) {
        round_trip = false;
        rt_detail = "round trip fails for " + row.config.str();
      }
      const auto sub = close_subsystem(gens);
      if (sub.roots.size() != row.config.root_count()) {
        sizes = false;
        size_detail = row.config.str() + " closure has " + std::to_string(sub.roots.size()) + " roots";
      }
      if (ReflectionGroup::generate(gens).order() != row.config.weyl_order()) {
        orders = false;
        order_detail = "order mismatch for " + row.config.str();
      }
      const auto split = effective_orbit_split(row.config);
      if (split.inside != row.config.factor_count() ||
          split.inside + split.outside != static_cast<int>(orbits(gens).size())) {
        effective = false;
        eff_detail = "split mismatch for " + row.config.str();
      }
      if (orbit_count(row.config) != row.count) {
        table_ok = false;
        table_detail = row.config.str() + " computed " + std::to_string(orbit_count(row.config)) +
                       ", published " + std::to_string(row.count);
      }
    }
    check(out, "classify_realize_round_trip", "classify(realize(c)) = c for every table configuration",
          round_trip, rt_detail);
    check(out, "subsystem_sizes", "sub-root system sizes match textbook root counts", sizes, size_detail);
    check(out, "weyl_order_products", "W(R_e) orders match the product of factor Weyl orders",
          orders, order_detail);
    check(out, "effective_bijection", "orbits inside R_e are in bijection with the singularities",
          effective, eff_detail);
    check(out, "table_values", "computed table equals the 21 published orbit counts", table_ok,
          table_detail);
  }

  // --- realization independence ---
  {
    bool ok = true;
    std::string detail = "orbit counts agree across 20 randomized realizations per configuration";
    for (const Table1Row& row : table1_published()) {
      if (row.config.empty()) continue;
      for (std::uint32_t seed = 1; seed <= 20 && ok; ++seed) {
        const auto gens = realize_randomized(row.config, seed);
        if (classify(gens) != row.config) {
          ok = false;
          detail = "randomized realization of " + row.config.str() + " classifies differently";
        } else if (static_cast<int>(orbits(gens).size()) != row.count) {
          ok = false;
          detail = row.config.str() + " seed " + std::to_string(seed) + " gives " +
                   std::to_string(orbits(gens).size()) + " orbits";
        }
      }
      if (!ok) break;
    }
    check(out, "realization_independence", "orbit counts do not depend on the realization chosen",
          ok, detail);
  }

  // --- Eckardt ---
  {
    const auto free3 = eckardt_search();
    bool ok = !free3.empty();
    std::string detail = std::to_string(free3.size()) + " fixed-point-free elements of order 3";
    for (const WeylElement& w : free3) {
      const auto cyc = w.perm().cycles();
      if (cyc.size() != 24) {
        ok = false;
        detail = "an element has " + std::to_string(cyc.size()) + " orbits";
        break;
      }
      for (const auto& c : cyc)
        if (c.size() != 3) {
          ok = false;
          detail = "an orbit has size " + std::to_string(c.size());
          break;
        }
    }
    check(out, "eckardt_free_elements", "free order-3 elements exist and give 24 orbits of size 3",
          ok, detail);

    const auto model = eckardt_line_model();
    const bool in_set = std::any_of(free3.begin(), free3.end(), [&](const WeylElement& w) {
      return w.perm() == model.induced.perm();
    });
    check(out, "eckardt_line_model",
          "line-model induced isometry is order 3, free, fixes h, and is in the search set",
          model.induced.order() == 3 && model.induced.perm().fixed_points() == 0 &&
              model.induced.apply(hyperplane_class()) == hyperplane_class() && in_set,
          in_set ? "present among " + std::to_string(free3.size()) + " elements"
                 : "missing from search set");
  }

  return out;
}

}  // namespace atlas
