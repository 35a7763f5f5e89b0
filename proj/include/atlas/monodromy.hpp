#pragma once

// Headline computations: orbit counts of W(R_e) acting on the 72 roots
// for every ADE configuration on a cubic surface (the 21-row table),
// the A1 worked example, the effective-orbit/singularity bijection,
// and the free Z3 monodromy at an Eckardt degeneration with its
// 27-line sheet model and 24 root orbits.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "atlas/config.hpp"
#include "atlas/errors.hpp"
#include "atlas/lattice.hpp"
#include "atlas/lines.hpp"
#include "atlas/matrix.hpp"
#include "atlas/weyl.hpp"

namespace atlas {

// ---------------------------------------------------------------------------
// Orbit counts per configuration

// Number of W(R_e)-orbits on the 72 roots for (a realization of) the
// configuration; equals the number of limiting primitive vanishing
// cycles on a cubic surface with those singularities.
inline int orbit_count(const SubsystemConfig& config) {
  return static_cast<int>(orbits(realize(config)).size());
}

struct Table1Row {
  SubsystemConfig config;
  std::string bruce_wall_type;  // Roman numeral I..XXI
  int count = 0;
};

// Published (configuration, Bruce-Wall type, count) triples, in table
// reading order (down the three column groups); the Roman types are
// presentation metadata, the counts are the values the computation
// must reproduce.
inline const std::vector<Table1Row>& table1_published() {
  static const std::vector<Table1Row> rows = [] {
    const std::vector<std::tuple<const char*, const char*, int>> data = {
        {"∅", "I", 72},   {"A1", "II", 51},      {"2A1", "IV", 36},
        {"A2", "III", 31},     {"3A1", "VIII", 25},   {"A1+A2", "VI", 22},
        {"A3", "V", 17},       {"4A1", "XVI", 17},    {"2A1+A2", "XIII", 15},
        {"A1+A3", "X", 12},    {"2A2", "IX", 14},     {"A4", "VII", 9},
        {"D4", "XII", 7},      {"2A1+A3", "XVIII", 8},{"A1+2A2", "XVII", 9},
        {"A1+A4", "XIV", 6},   {"A5", "XI", 5},       {"D5", "XV", 3},
        {"A1+A5", "XIX", 3},   {"3A2", "XXI", 5},     {"E6", "XX", 1}};
    std::vector<Table1Row> out;
    out.reserve(data.size());
    for (const auto& [cfg, type, count] : data)
      out.push_back(Table1Row{SubsystemConfig::parse(cfg), type, count});
    return out;
  }();
  return rows;
}

// All 21 rows with computed counts (the published values are only used
// for the type labels and for diffing).
inline std::vector<Table1Row> table1() {
  std::vector<Table1Row> out;
  out.reserve(table1_published().size());
  for (const Table1Row& row : table1_published())
    out.push_back(Table1Row{row.config, row.bruce_wall_type, orbit_count(row.config)});
  return out;
}

// ---------------------------------------------------------------------------
// Effective orbits

struct EffectiveSplit {
  int inside = 0;   // orbit blocks contained in R_e; one per singularity
  int outside = 0;  // the rest
};

inline EffectiveSplit effective_orbit_split(const SubsystemConfig& config) {
  const std::vector<Root> gens = realize(config);
  const ClosedSubsystem sub = close_subsystem(gens);
  const auto& rs = root_system();
  std::array<bool, 72> effective{};
  for (const Root& r : sub.roots) effective[static_cast<std::size_t>(rs.checked_index(r.vec()))] = true;

  EffectiveSplit split;
  for (const auto& block : orbits(gens)) {
    bool inside = true;
    for (int i : block)
      if (!effective[static_cast<std::size_t>(i)]) {
        inside = false;
        break;
      }
    (inside ? split.inside : split.outside) += 1;
  }
  return split;
}

// ---------------------------------------------------------------------------
// The A1 worked example

// With d = 2e0 - e1 - ... - e6 the 72 roots split into three classes:
// (1) +-d (2 roots), (2) +-(e0 - e_i - e_j - e_k) (40 roots),
// (3) e_i - e_j (30 roots).  Classes (1) and (2) pair nontrivially
// with d and fall into 2-element reflection orbits; class (3) is
// orthogonal to d and stays fixed, giving (2+40)/2 + 30 = 51 orbits.
struct A1Breakdown {
  LatticeVector delta;
  std::array<int, 3> class_sizes{};           // (2, 40, 30)
  std::array<int, 3> orbit_contributions{};   // (1, 20, 30)
  int total = 0;                              // 51
  int orthogonal_to_delta = 0;                // class (3) members
};

inline A1Breakdown a1_example_breakdown() {
  const Root delta{LatticeVector{{2, -1, -1, -1, -1, -1, -1}}};
  const auto& rs = root_system();

  // Class by |e0-coefficient|: 2 -> (1), 1 -> (2), 0 -> (3).
  auto class_of = [](const LatticeVector& v) {
    const Coord c0 = v[0] < 0 ? -v[0] : v[0];
    return c0 == 2 ? 0 : c0 == 1 ? 1 : 2;
  };

  A1Breakdown out;
  out.delta = delta.vec();
  for (int i = 0; i < 72; ++i) {
    out.class_sizes[static_cast<std::size_t>(class_of(rs[i].vec()))] += 1;
    if (pairing(rs[i].vec(), delta.vec()) == 0) out.orthogonal_to_delta += 1;
  }

  const auto blocks = orbits(std::vector<Root>{delta});
  out.total = static_cast<int>(blocks.size());
  for (const auto& block : blocks) {
    const int cls = class_of(rs[block.front()].vec());
    for (int i : block)
      if (class_of(rs[i].vec()) != cls)
        throw InternalError("a1_example_breakdown: reflection orbit mixes classes");
    out.orbit_contributions[static_cast<std::size_t>(cls)] += 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Eckardt degenerations: free Z3 monodromy

// All elements of W(E6) of order 3 whose root permutation is fixed-
// point-free, sorted by permutation.  Each partitions the 72 roots
// into 24 orbits of size 3.
inline std::vector<WeylElement> eckardt_search() {
  std::vector<RootPerm> hits;
  for (const RootPerm& p : full_weyl_group().elements())
    if (p.fixed_points() == 0 && p.order() == 3) hits.push_back(p);
  std::sort(hits.begin(), hits.end());
  std::vector<WeylElement> out;
  out.reserve(hits.size());
  for (const RootPerm& p : hits) out.emplace_back(p);
  return out;
}

namespace detail {

// Eisenstein integers x + y*w, w a primitive cube root of unity
// (w^2 = -1 - w); exact arithmetic for the line-incidence tests below.
struct Eis {
  Coord x = 0, y = 0;
  friend constexpr bool operator==(const Eis&, const Eis&) = default;
  constexpr Eis operator+(const Eis& o) const { return {x + o.x, y + o.y}; }
  constexpr Eis operator-(const Eis& o) const { return {x - o.x, y - o.y}; }
  constexpr Eis operator*(const Eis& o) const {
    return {x * o.x - y * o.y, x * o.y + y * o.x - y * o.y};
  }
  constexpr bool is_zero() const { return x == 0 && y == 0; }
};

constexpr Eis eis_unit(int k) {  // w^k
  switch (((k % 3) + 3) % 3) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    default: return {-1, -1};  // w^2
  }
}

inline Eis eis_det4(std::array<std::array<Eis, 4>, 4> a) {
  // Laplace expansion along the first column; 4x4 is small enough.
  auto det3 = [](const std::array<std::array<Eis, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  Eis det{};
  for (int r = 0; r < 4; ++r) {
    std::array<std::array<Eis, 3>, 3> minor{};
    int rr = 0;
    for (int i = 0; i < 4; ++i) {
      if (i == r) continue;
      for (int j = 1; j < 4; ++j) minor[static_cast<std::size_t>(rr)][static_cast<std::size_t>(j - 1)] = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      ++rr;
    }
    const Eis term = a[static_cast<std::size_t>(r)][0] * det3(minor);
    det = (r % 2 == 0) ? det + term : det - term;
  }
  return det;
}

// One line of the degree-3 cyclic cover of the plane branched along a
// smooth cubic, realized on the Fermat surface x^3+y^3+z^3+w^3 = 0:
// each line is cut out by two linear forms with unit coefficients.
// family 0: x + w^a y = 0, z + w^b t = 0   (over flex line x + w^a y)
// family 1: x + w^a z = 0, y + w^b t = 0   (over flex line x + w^a z)
// family 2: x + w^a t = 0, y + w^b z = 0   (over flex line y + w^b z)
// (t is the covering coordinate; the deck map t -> w t shifts the
// third index in families 0,1 and the first in family 2.)
struct CoverLine {
  int family = 0;  // 0, 1, 2
  int a = 0, b = 0;

  std::array<std::array<Eis, 4>, 4> forms_with(const CoverLine& o) const {
    std::array<std::array<Eis, 4>, 4> m{};
    fill_forms(m, 0);
    o.fill_forms(m, 2);
    return m;
  }

  int flex() const { return family == 2 ? 6 + b : 3 * family + a; }   // 0..8
  int sheet() const { return family == 2 ? a : b; }                   // 0..2

  CoverLine sheet_shifted() const {  // deck-inverse: sheet j -> j + 1
    CoverLine s = *this;
    if (family == 2) s.a = (s.a + 1) % 3;
    else s.b = (s.b + 1) % 3;
    return s;
  }

  friend bool operator==(const CoverLine&, const CoverLine&) = default;

 private:
  void fill_forms(std::array<std::array<Eis, 4>, 4>& m, int row) const {
    const std::size_t r0 = static_cast<std::size_t>(row), r1 = r0 + 1;
    switch (family) {
      case 0:
        m[r0][0] = {1, 0}; m[r0][1] = eis_unit(a);
        m[r1][2] = {1, 0}; m[r1][3] = eis_unit(b);
        break;
      case 1:
        m[r0][0] = {1, 0}; m[r0][2] = eis_unit(a);
        m[r1][1] = {1, 0}; m[r1][3] = eis_unit(b);
        break;
      default:
        m[r0][0] = {1, 0}; m[r0][3] = eis_unit(a);
        m[r1][1] = {1, 0}; m[r1][2] = eis_unit(b);
        break;
    }
  }
};

// Two lines in P^3 meet iff their four defining forms are dependent.
inline bool cover_lines_meet(const CoverLine& p, const CoverLine& q) {
  return eis_det4(p.forms_with(q)).is_zero();
}

}  // namespace detail

// The 27-line sheet model of the Eckardt semistable limit: lines L_ij
// indexed by flex tangent i = 1..9 and sheet j = 1..3, the adjacency
// computed from the cyclic-cover geometry, the sheet rotation
// j -> j+1, and the Weyl element it induces on the standard lattice.
struct EckardtModel {
  std::array<std::string, 27> labels;                 // "L<i><j>"
  std::array<int, 27> flex{};                         // 1..9
  std::array<int, 27> sheet{};                        // 1..3
  std::array<std::array<int, 27>, 27> adjacency{};    // 0/1
  std::array<int, 27> sheet_shift{};                  // abstract line permutation
  std::array<int, 27> to_standard{};                  // graph isomorphism onto lines27()
  std::array<int, 27> induced_line_perm{};            // on standard line indices
  WeylElement induced = WeylElement::identity();
};

namespace detail {

// Backtracking isomorphism search between two 27-vertex graphs given
// as 0/1 matrices; vertices are matched in a fixed order, candidates
// pruned against all previously matched neighbours.
inline std::optional<std::array<int, 27>> find_graph_isomorphism(
    const std::array<std::array<int, 27>, 27>& g,
    const std::array<std::array<int, 27>, 27>& h) {
  std::array<int, 27> map;
  map.fill(-1);
  std::array<bool, 27> used{};

  auto search = [&](auto&& self, int v) -> bool {
    if (v == 27) return true;
    for (int cand = 0; cand < 27; ++cand) {
      if (used[static_cast<std::size_t>(cand)]) continue;
      bool ok = true;
      for (int u = 0; u < v; ++u)
        if (g[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] !=
            h[static_cast<std::size_t>(cand)][static_cast<std::size_t>(map[static_cast<std::size_t>(u)])]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      map[static_cast<std::size_t>(v)] = cand;
      used[static_cast<std::size_t>(cand)] = true;
      if (self(self, v + 1)) return true;
      map[static_cast<std::size_t>(v)] = -1;
      used[static_cast<std::size_t>(cand)] = false;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return map;
}

}  // namespace detail

inline EckardtModel eckardt_line_model() {
  using detail::CoverLine;

  // Abstract lines in (family, a, b) order.
  std::array<CoverLine, 27> cover;
  {
    int n = 0;
    for (int family = 0; family < 3; ++family)
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) cover[static_cast<std::size_t>(n++)] = CoverLine{family, a, b};
  }
  auto cover_index = [&](const CoverLine& l) {
    for (int k = 0; k < 27; ++k)
      if (cover[static_cast<std::size_t>(k)] == l) return k;
    throw InternalError("eckardt_line_model: unindexed cover line");
  };

  EckardtModel model;
  for (int k = 0; k < 27; ++k) {
    model.flex[static_cast<std::size_t>(k)] = cover[static_cast<std::size_t>(k)].flex() + 1;
    model.sheet[static_cast<std::size_t>(k)] = cover[static_cast<std::size_t>(k)].sheet() + 1;
    model.labels[static_cast<std::size_t>(k)] =
        "L" + std::to_string(model.flex[static_cast<std::size_t>(k)]) + std::to_string(model.sheet[static_cast<std::size_t>(k)]);
    model.sheet_shift[static_cast<std::size_t>(k)] = cover_index(cover[static_cast<std::size_t>(k)].sheet_shifted());
  }

  for (int p = 0; p < 27; ++p)
    for (int q = 0; q < 27; ++q)
      model.adjacency[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] =
          (p != q && detail::cover_lines_meet(cover[static_cast<std::size_t>(p)], cover[static_cast<std::size_t>(q)])) ? 1 : 0;

  // Sanity on the model itself: 10 neighbours each, the three lines
  // over one flex pairwise meet, and the sheet rotation has no fixed
  // line and preserves adjacency.
  for (int p = 0; p < 27; ++p) {
    int deg = 0;
    for (int q = 0; q < 27; ++q) deg += model.adjacency[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
    if (deg != 10) throw InternalError("eckardt_line_model: line does not meet exactly 10 others");
    if (model.sheet_shift[static_cast<std::size_t>(p)] == p)
      throw InternalError("eckardt_line_model: sheet rotation fixes a line");
  }
  for (int p = 0; p < 27; ++p)
    for (int q = 0; q < 27; ++q) {
      if (model.flex[static_cast<std::size_t>(p)] == model.flex[static_cast<std::size_t>(q)] && p != q &&
          !model.adjacency[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)])
        throw InternalError("eckardt_line_model: same-flex lines must meet");
      if (model.adjacency[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] !=
          model.adjacency[static_cast<std::size_t>(model.sheet_shift[static_cast<std::size_t>(p)])]
                         [static_cast<std::size_t>(model.sheet_shift[static_cast<std::size_t>(q)])])
        throw InternalError("eckardt_line_model: sheet rotation is not an automorphism");
    }

  // Transport onto the standard 27 lines.
  const auto iso = detail::find_graph_isomorphism(model.adjacency, incidence_graph().adj);
  if (!iso)
    throw InternalError("eckardt_line_model: NoIsomorphism - model is not Schlaefli");
  model.to_standard = *iso;

  std::array<int, 27> inv{};
  for (int k = 0; k < 27; ++k) inv[static_cast<std::size_t>(model.to_standard[static_cast<std::size_t>(k)])] = k;
  for (int s = 0; s < 27; ++s)
    model.induced_line_perm[static_cast<std::size_t>(s)] =
        model.to_standard[static_cast<std::size_t>(model.sheet_shift[static_cast<std::size_t>(inv[static_cast<std::size_t>(s)])])];

  // The induced map on line classes extends to a unique lattice map;
  // solve on a basis of classes and check it is an isometry fixing h.
  const auto& ls = lines27();
  std::array<LatticeVector, 7> basis, image;
  const std::array<int, 7> basis_lines{0, 1, 2, 3, 4, 5, 6};  // E1..E6, F12
  for (int k = 0; k < 7; ++k) {
    basis[static_cast<std::size_t>(k)] = ls[static_cast<std::size_t>(basis_lines[static_cast<std::size_t>(k)])].cls;
    image[static_cast<std::size_t>(k)] =
        ls[static_cast<std::size_t>(model.induced_line_perm[static_cast<std::size_t>(basis_lines[static_cast<std::size_t>(k)])])].cls;
  }
  const Mat7 m = solve_matrix(basis, image);
  if (!preserves_pairing(m) || m.apply(hyperplane_class()) != hyperplane_class())
    throw InternalError("eckardt_line_model: NotIsometry");
  for (int s = 0; s < 27; ++s)
    if (m.apply(ls[static_cast<std::size_t>(s)].cls) !=
        ls[static_cast<std::size_t>(model.induced_line_perm[static_cast<std::size_t>(s)])].cls)
      throw InternalError("eckardt_line_model: lattice map disagrees with line permutation");

  const auto& rs = root_system();
  RootPerm perm;
  for (int i = 0; i < 72; ++i) {
    const int img = rs.index_of(m.apply(rs[i].vec()));
    if (img < 0) throw InternalError("eckardt_line_model: NotIsometry on roots");
    perm.map[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(img);
  }
  model.induced = WeylElement(perm, m);

  if (model.induced.order() != 3)
    throw InternalError("eckardt_line_model: induced element does not have order 3");
  if (perm.fixed_points() != 0)
    throw InternalError("eckardt_line_model: induced element fixes a root");
  if (perm.cycles().size() != 24)
    throw InternalError("eckardt_line_model: induced element does not give 24 orbits");
  return model;
}

// ---------------------------------------------------------------------------
// Transitivity / full-rank checks

// True iff the six simple reflections act transitively on the 72 roots
// and the roots span exactly the rank-6 lattice orthogonal to h.
inline bool transitivity_check() {
  const auto simple = simple_roots();
  const auto blocks = orbits(std::vector<Root>(simple.begin(), simple.end()));
  if (blocks.size() != 1 || blocks.front().size() != 72) return false;

  std::vector<LatticeVector> rows;
  rows.reserve(72);
  for (const Root& r : root_system().roots()) rows.push_back(r.vec());
  // Kernel basis of v |-> (v, h): e0 - 3 e1 and the consecutive
  // differences e_i - e_{i+1}.
  std::vector<LatticeVector> kernel = {LatticeVector{{1, -3, 0, 0, 0, 0, 0}}};
  for (int i = 1; i < 6; ++i) {
    LatticeVector v{};
    v[i] = 1;
    v[i + 1] = -1;
    kernel.push_back(v);
  }
  return lattice_rank(rows) == 6 && row_lattice_hnf(rows) == row_lattice_hnf(kernel);
}

}  // namespace atlas
