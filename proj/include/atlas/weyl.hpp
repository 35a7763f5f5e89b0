#pragma once

// Reflection machinery on the 72 roots: Picard-Lefschetz operators,
// reflection-group closure in the permutation representation, orbit
// partitions, closed sub-root systems, simple-system extraction,
// Dynkin-diagram recognition, and embedding of ADE configurations.
//
// Group elements live as permutations of the canonically ordered 72
// roots; permutation composition is the hot path and 51,840 elements
// fit trivially in memory.  The 7x7 lattice matrix of an element is
// reconstructed on demand by solving against a spanning set of roots
// plus h (the action on roots is faithful because the roots span
// h-perp and h is fixed).

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <unordered_set>
#include <vector>

#include "atlas/config.hpp"
#include "atlas/errors.hpp"
#include "atlas/lattice.hpp"
#include "atlas/matrix.hpp"

namespace atlas {

// ---------------------------------------------------------------------------
// Permutations of the 72 roots

struct RootPerm {
  std::array<std::uint8_t, 72> map{};

  static RootPerm identity() {
    RootPerm p;
    for (int i = 0; i < 72; ++i) p.map[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    return p;
  }

  std::uint8_t operator[](int i) const { return map[static_cast<std::size_t>(i)]; }

  bool is_identity() const {
    for (int i = 0; i < 72; ++i)
      if (map[static_cast<std::size_t>(i)] != i) return false;
    return true;
  }

  RootPerm inverse() const {
    RootPerm inv;
    for (int i = 0; i < 72; ++i) inv.map[map[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
    return inv;
  }

  // Order as a permutation; equals the group-element order since the
  // action on roots is faithful.
  int order() const {
    std::array<bool, 72> seen{};
    long long ord = 1;
    for (int i = 0; i < 72; ++i) {
      if (seen[static_cast<std::size_t>(i)]) continue;
      int len = 0;
      for (int j = i; !seen[static_cast<std::size_t>(j)]; j = map[static_cast<std::size_t>(j)]) {
        seen[static_cast<std::size_t>(j)] = true;
        ++len;
      }
      ord = std::lcm(ord, static_cast<long long>(len));
    }
    return static_cast<int>(ord);
  }

  int fixed_points() const {
    int n = 0;
    for (int i = 0; i < 72; ++i) n += (map[static_cast<std::size_t>(i)] == i);
    return n;
  }

  // Nontrivial cycles, each rotated to start at its least element,
  // listed by least element.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::array<bool, 72> seen{};
    for (int i = 0; i < 72; ++i) {
      if (seen[static_cast<std::size_t>(i)] || map[static_cast<std::size_t>(i)] == i) continue;
      std::vector<int> cyc;
      for (int j = i; !seen[static_cast<std::size_t>(j)]; j = map[static_cast<std::size_t>(j)]) {
        seen[static_cast<std::size_t>(j)] = true;
        cyc.push_back(j);
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  friend bool operator==(const RootPerm&, const RootPerm&) = default;
  friend auto operator<=>(const RootPerm&, const RootPerm&) = default;
};

// (a * b)(x) = a(b(x)).
inline RootPerm compose(const RootPerm& a, const RootPerm& b) {
  RootPerm r;
  for (int i = 0; i < 72; ++i) r.map[static_cast<std::size_t>(i)] = a.map[b.map[static_cast<std::size_t>(i)]];
  return r;
}

struct RootPermHash {
  std::size_t operator()(const RootPerm& p) const {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (auto b : p.map) {
      h ^= b;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// Permutation induced on the 72 roots by the reflection in a root.
inline const RootPerm& reflection_perm(int root_index) {
  static const std::array<RootPerm, 72> table = [] {
    std::array<RootPerm, 72> t;
    const auto& rs = root_system();
    for (int a = 0; a < 72; ++a)
      for (int b = 0; b < 72; ++b)
        t[static_cast<std::size_t>(a)].map[static_cast<std::size_t>(b)] =
            static_cast<std::uint8_t>(rs.checked_index(reflect(rs[a], rs[b].vec())));
    return t;
  }();
  return table[static_cast<std::size_t>(root_index)];
}

inline const RootPerm& reflection_perm(const Root& a) {
  return reflection_perm(root_system().checked_index(a.vec()));
}

// ---------------------------------------------------------------------------
// Weyl elements: root permutation plus the lattice matrix it induces

class WeylElement {
 public:
  explicit WeylElement(const RootPerm& perm) : perm_(perm), matrix_(solve_from_perm(perm)) {}

  WeylElement(const RootPerm& perm, const Mat7& matrix) : perm_(perm), matrix_(matrix) { validate(); }

  static const WeylElement& identity() {
    static const WeylElement id(RootPerm::identity(), Mat7::identity());
    return id;
  }

  const RootPerm& perm() const { return perm_; }
  const Mat7& matrix() const { return matrix_; }
  LatticeVector apply(const LatticeVector& v) const { return matrix_.apply(v); }
  int order() const { return perm_.order(); }
  bool is_identity() const { return perm_.is_identity(); }

  friend WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    return WeylElement(compose(a.perm_, b.perm_), a.matrix_ * b.matrix_);
  }

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.perm_ == b.perm_; }

 private:
  static Mat7 solve_from_perm(const RootPerm& perm) {
    const auto& rs = root_system();
    const auto simple = simple_roots();
    std::array<LatticeVector, 7> basis, image;
    for (int k = 0; k < 6; ++k) {
      const int idx = rs.checked_index(simple[static_cast<std::size_t>(k)].vec());
      basis[static_cast<std::size_t>(k)] = simple[static_cast<std::size_t>(k)].vec();
      image[static_cast<std::size_t>(k)] = rs[perm[idx]].vec();
    }
    basis[6] = hyperplane_class();
    image[6] = hyperplane_class();
    return solve_matrix(basis, image);
  }

  void validate() const {
    if (!preserves_pairing(matrix_)) throw InternalError("WeylElement: matrix is not an isometry");
    if (matrix_.apply(hyperplane_class()) != hyperplane_class())
      throw InternalError("WeylElement: matrix does not fix h");
    const auto& rs = root_system();
    for (int i = 0; i < 72; ++i)
      if (rs.index_of(matrix_.apply(rs[i].vec())) != static_cast<int>(perm_[i]))
        throw InternalError("WeylElement: matrix and permutation disagree");
  }

  RootPerm perm_;
  Mat7 matrix_;
};

// Reflection in a root as a full Weyl element (matrix built directly).
inline WeylElement reflection(const Root& a) {
  Mat7 m;
  for (int c = 0; c < 7; ++c) {
    const LatticeVector img = reflect(a, basis_vector(c));
    for (int r = 0; r < 7; ++r) m.m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = img[r];
  }
  return WeylElement(reflection_perm(a), m);
}

// Monodromy image of a loop word: the composition r_{d1} o ... o r_{dk}.
inline WeylElement picard_lefschetz_word(std::span<const Root> deltas) {
  WeylElement w = WeylElement::identity();
  for (const Root& d : deltas) w = w * reflection(d);
  return w;
}

// ---------------------------------------------------------------------------
// Reflection groups by breadth-first closure

class ReflectionGroup {
 public:
  static ReflectionGroup generate(std::vector<Root> generators) {
    ReflectionGroup g;
    g.generators_ = std::move(generators);

    std::vector<RootPerm> gen_perms;
    gen_perms.reserve(g.generators_.size());
    for (const Root& r : g.generators_) gen_perms.push_back(reflection_perm(r));

    std::unordered_set<RootPerm, RootPermHash> seen;
    g.elements_.push_back(RootPerm::identity());
    seen.insert(g.elements_.front());
    for (std::size_t head = 0; head < g.elements_.size(); ++head) {
      const RootPerm cur = g.elements_[head];
      for (const RootPerm& gen : gen_perms) {
        RootPerm next = compose(gen, cur);
        if (seen.insert(next).second) g.elements_.push_back(next);
      }
    }
    return g;
  }

  const std::vector<Root>& generators() const { return generators_; }
  const std::vector<RootPerm>& elements() const { return elements_; }  // discovery order
  std::uint64_t order() const { return elements_.size(); }
  WeylElement element(std::size_t i) const { return WeylElement(elements_[i]); }

 private:
  ReflectionGroup() = default;
  std::vector<Root> generators_;
  std::vector<RootPerm> elements_;
};

// The full Weyl group W(E6), generated by the six simple reflections.
inline const ReflectionGroup& full_weyl_group() {
  static const ReflectionGroup g = [] {
    const auto simple = simple_roots();
    return ReflectionGroup::generate(std::vector<Root>(simple.begin(), simple.end()));
  }();
  return g;
}

// ---------------------------------------------------------------------------
// Orbits of the 72 roots under the group generated by reflections

// Connected components of the graph x ~ r_g(x); no group
// materialization.  Blocks are listed by least root index, members
// ascending.
inline std::vector<std::vector<int>> orbits(std::span<const Root> generators) {
  std::vector<const RootPerm*> gens;
  gens.reserve(generators.size());
  for (const Root& r : generators) gens.push_back(&reflection_perm(r));

  std::array<bool, 72> seen{};
  std::vector<std::vector<int>> blocks;
  for (int start = 0; start < 72; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> block{start};
    seen[static_cast<std::size_t>(start)] = true;
    for (std::size_t head = 0; head < block.size(); ++head)
      for (const RootPerm* g : gens) {
        const int y = (*g)[block[head]];
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = true;
          block.push_back(y);
        }
      }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  return blocks;
}

inline std::vector<std::vector<int>> orbits(const std::vector<Root>& generators) {
  return orbits(std::span<const Root>(generators));
}

// ---------------------------------------------------------------------------
// Closed sub-root systems

namespace detail {

// Indices of the smallest reflection-closed subset containing the input.
inline std::vector<int> close_indices(std::span<const Root> seed) {
  const auto& rs = root_system();
  std::array<bool, 72> in{};
  std::vector<int> members;
  for (const Root& r : seed) {
    const int i = rs.checked_index(r.vec());
    if (!in[static_cast<std::size_t>(i)]) {
      in[static_cast<std::size_t>(i)] = true;
      members.push_back(i);
    }
  }
  // Fixed-point iteration: reflect every member in every member.
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = 0; b <= a; ++b)
      for (int img : {reflection_perm(members[a])[members[b]], reflection_perm(members[b])[members[a]]})
        if (!in[static_cast<std::size_t>(img)]) {
          in[static_cast<std::size_t>(img)] = true;
          members.push_back(img);
        }
  std::sort(members.begin(), members.end());
  return members;
}

inline bool is_reflection_closed(const std::vector<int>& sorted_members) {
  std::array<bool, 72> in{};
  for (int i : sorted_members) in[static_cast<std::size_t>(i)] = true;
  for (int a : sorted_members)
    for (int b : sorted_members)
      if (!in[reflection_perm(a)[b]]) return false;
  return true;
}

}  // namespace detail

// Positive roots of a reflection-closed set are those with positive
// functional value; the simple ones are the positives that are not a
// sum of two positives.
inline std::vector<Root> simple_system(const std::vector<Root>& closed) {
  const auto& rs = root_system();
  std::vector<int> members;
  members.reserve(closed.size());
  for (const Root& r : closed) members.push_back(rs.checked_index(r.vec()));
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!detail::is_reflection_closed(members))
    throw NotClosed("simple_system: input is not reflection-closed");

  std::vector<LatticeVector> positives;
  for (int i : members)
    if (positivity(rs[i].vec()) > 0) positives.push_back(rs[i].vec());

  std::vector<Root> simple;
  for (const LatticeVector& p : positives) {
    bool decomposable = false;
    for (const LatticeVector& q : positives) {
      if (q == p) continue;
      if (std::find(positives.begin(), positives.end(), p - q) != positives.end()) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.emplace_back(p);
  }
  std::sort(simple.begin(), simple.end());

  std::vector<LatticeVector> span_rows;
  for (int i : members) span_rows.push_back(rs[i].vec());
  if (static_cast<int>(simple.size()) != lattice_rank(span_rows))
    throw InternalError("simple_system: size does not match rank of span");
  return simple;
}

struct ClosedSubsystem {
  std::vector<Root> roots;   // canonical (index) order
  std::vector<Root> simple;  // simple system for the fixed functional
  SubsystemConfig label;
};

namespace detail {

// Recognize one connected simply-laced diagram given its adjacency.
// Inside E6 only A_n, D_n and E6 itself can occur; anything else means
// the library is broken.
inline AdeFactor recognize_component(const std::vector<int>& nodes,
                                     const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(nodes.size());
  int edges = 0;
  std::vector<int> degree(nodes.size(), 0);
  std::vector<int> pos(adj.size(), -1);
  for (std::size_t k = 0; k < nodes.size(); ++k) pos[static_cast<std::size_t>(nodes[k])] = static_cast<int>(k);
  for (std::size_t k = 0; k < nodes.size(); ++k)
    for (int nb : adj[static_cast<std::size_t>(nodes[k])])
      if (pos[static_cast<std::size_t>(nb)] >= 0) {
        ++degree[k];
        ++edges;
      }
  edges /= 2;
  if (edges != n - 1) throw InternalError("UnrecognizedDiagram: component has a cycle");

  std::vector<int> branch;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (degree[k] > 3) throw InternalError("UnrecognizedDiagram: node of degree > 3");
    if (degree[k] == 3) branch.push_back(static_cast<int>(k));
  }
  if (branch.empty()) return AdeFactor{'A', n};
  if (branch.size() > 1) throw InternalError("UnrecognizedDiagram: two branch nodes");

  // Arm lengths from the unique trivalent node.
  std::vector<int> arms;
  for (int nb : adj[static_cast<std::size_t>(nodes[static_cast<std::size_t>(branch[0])])]) {
    if (pos[static_cast<std::size_t>(nb)] < 0) continue;
    int len = 1;
    int prev = nodes[static_cast<std::size_t>(branch[0])];
    int cur = nb;
    while (true) {
      int next = -1;
      for (int nb2 : adj[static_cast<std::size_t>(cur)])
        if (nb2 != prev && pos[static_cast<std::size_t>(nb2)] >= 0) next = nb2;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() == 3 && arms[0] == 1 && arms[1] == 1) return AdeFactor{'D', n};
  if (arms.size() == 3 && arms[0] == 1 && arms[1] == 2 && arms[2] == 2 && n == 6)
    return AdeFactor{'E', 6};
  throw InternalError("UnrecognizedDiagram: T-shape not of type D or E6");
}

}  // namespace detail

// ADE type of the sub-root system generated by the given roots.
inline SubsystemConfig classify(std::span<const Root> roots) {
  const auto& rs = root_system();
  const std::vector<int> members = detail::close_indices(roots);
  if (members.empty()) return SubsystemConfig{};

  std::vector<Root> closed;
  closed.reserve(members.size());
  for (int i : members) closed.push_back(rs[i]);
  const std::vector<Root> simple = simple_system(closed);

  const int n = static_cast<int>(simple.size());
  std::vector<std::vector<int>> adj(simple.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      const Coord p = pairing(simple[static_cast<std::size_t>(a)], simple[static_cast<std::size_t>(b)]);
      if (p == 1) adj[static_cast<std::size_t>(a)].push_back(b);
      else if (p != 0)
        throw InternalError("classify: simple roots pair outside {0,1}");
    }

  std::vector<AdeFactor> factors;
  std::vector<bool> used(simple.size(), false);
  for (int s = 0; s < n; ++s) {
    if (used[static_cast<std::size_t>(s)]) continue;
    std::vector<int> comp{s};
    used[static_cast<std::size_t>(s)] = true;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (int nb : adj[static_cast<std::size_t>(comp[head])])
        if (!used[static_cast<std::size_t>(nb)]) {
          used[static_cast<std::size_t>(nb)] = true;
          comp.push_back(nb);
        }
    factors.push_back(detail::recognize_component(comp, adj));
  }
  return SubsystemConfig{std::move(factors)};
}

inline SubsystemConfig classify(const std::vector<Root>& roots) {
  return classify(std::span<const Root>(roots));
}

// Smallest reflection-closed (hence negation-closed) subset of the 72
// roots containing the input, with its simple system and ADE label.
inline ClosedSubsystem close_subsystem(std::span<const Root> seed) {
  const auto& rs = root_system();
  ClosedSubsystem out;
  for (int i : detail::close_indices(seed)) out.roots.push_back(rs[i]);
  out.simple = out.roots.empty() ? std::vector<Root>{} : simple_system(out.roots);
  out.label = classify(std::span<const Root>(out.roots));
  return out;
}

inline ClosedSubsystem close_subsystem(const std::vector<Root>& seed) {
  return close_subsystem(std::span<const Root>(seed));
}

// ---------------------------------------------------------------------------
// Embedding ADE configurations into E6

namespace detail {

// Node adjacency of the Dynkin diagram for one factor, nodes numbered
// 0..rank-1 within the factor.
inline void add_factor_edges(const AdeFactor& f, int base,
                             std::vector<std::pair<int, int>>& edges) {
  if (f.family == 'A') {
    for (int k = 0; k + 1 < f.rank; ++k) edges.emplace_back(base + k, base + k + 1);
  } else if (f.family == 'D') {
    for (int k = 0; k + 2 < f.rank; ++k) edges.emplace_back(base + k, base + k + 1);
    edges.emplace_back(base + f.rank - 3, base + f.rank - 1);
  } else {  // E6
    for (int k = 0; k + 2 < f.rank; ++k) edges.emplace_back(base + k, base + k + 1);
    edges.emplace_back(base + 2, base + 5);
  }
}

inline std::vector<Root> realize_impl(const SubsystemConfig& config,
                                      std::optional<std::uint32_t> shuffle_seed) {
  const int rank = config.total_rank();
  if (rank > 6)
    throw RankTooLarge("configuration " + config.str() + " has rank " + std::to_string(rank) +
                       " > 6");
  if (rank == 0) return {};

  std::vector<std::pair<int, int>> edges;
  std::vector<int> factor_first;  // first node of each factor
  std::vector<AdeFactor> factor_of;
  {
    int base = 0;
    for (const AdeFactor& f : config.factors()) {
      factor_first.push_back(base);
      factor_of.push_back(f);
      add_factor_edges(f, base, edges);
      base += f.rank;
    }
  }
  std::vector<std::vector<bool>> adjacent(static_cast<std::size_t>(rank),
                                          std::vector<bool>(static_cast<std::size_t>(rank), false));
  for (auto [a, b] : edges) {
    adjacent[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
    adjacent[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = true;
  }

  const auto& rs = root_system();
  std::vector<int> candidates(72);
  std::iota(candidates.begin(), candidates.end(), 0);
  if (shuffle_seed) {
    std::mt19937 rng(*shuffle_seed);
    std::shuffle(candidates.begin(), candidates.end(), rng);
  }
  std::vector<int> pos_of(72);  // position in candidate order, for symmetry cuts
  for (int k = 0; k < 72; ++k) pos_of[static_cast<std::size_t>(candidates[static_cast<std::size_t>(k)])] = k;

  std::vector<int> chosen(static_cast<std::size_t>(rank), -1);

  // Backtracking over candidate roots with Gram-matrix pruning.  Equal
  // factors are forced into ascending first-node position to cut the
  // permutation symmetry; this never loses solutions.
  auto search = [&](auto&& self, int node) -> bool {
    if (node == rank) return true;
    int factor = 0;
    for (std::size_t f = 0; f < factor_first.size(); ++f)
      if (factor_first[f] <= node) factor = static_cast<int>(f);
    const bool is_factor_first = factor_first[static_cast<std::size_t>(factor)] == node;

    for (int cand : candidates) {
      if (is_factor_first && factor > 0 &&
          factor_of[static_cast<std::size_t>(factor)] == factor_of[static_cast<std::size_t>(factor - 1)] &&
          pos_of[static_cast<std::size_t>(cand)] <=
              pos_of[static_cast<std::size_t>(chosen[static_cast<std::size_t>(factor_first[static_cast<std::size_t>(factor - 1)])])])
        continue;
      bool ok = true;
      for (int s = 0; s < node; ++s) {
        const Coord want = adjacent[static_cast<std::size_t>(node)][static_cast<std::size_t>(s)] ? 1 : 0;
        if (pairing(rs[cand], rs[chosen[static_cast<std::size_t>(s)]]) != want) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen[static_cast<std::size_t>(node)] = cand;
      if (self(self, node + 1)) return true;
      chosen[static_cast<std::size_t>(node)] = -1;
    }
    return false;
  };

  if (!search(search, 0))
    throw NotEmbeddable("no sub-root system of type " + config.str() +
                        " embeds into E6 (exhaustive search)");

  std::vector<Root> out;
  out.reserve(chosen.size());
  for (int i : chosen) out.push_back(rs[i]);
  if (classify(std::span<const Root>(out)) != config)
    throw InternalError("realize: classification of found embedding disagrees");
  return out;
}

}  // namespace detail

// Deterministic first-found embedding: the returned roots form a simple
// system whose Dynkin diagram is exactly `config`.  The full system is
// pinned to the canonical base rather than searched.
inline std::vector<Root> realize(const SubsystemConfig& config) {
  if (config == SubsystemConfig::parse("E6")) {
    const auto s = simple_roots();
    return std::vector<Root>(s.begin(), s.end());
  }
  return detail::realize_impl(config, std::nullopt);
}

// Same search run over a seeded shuffle of the candidate order; used to
// probe that orbit invariants do not depend on the realization chosen.
inline std::vector<Root> realize_randomized(const SubsystemConfig& config, std::uint32_t seed) {
  return detail::realize_impl(config, seed);
}

// ---------------------------------------------------------------------------
// Maximal roots of an orbit

namespace detail {

// Coordinates of d in the basis `simple`, or nullopt when d is not an
// integer combination of it.
inline std::optional<std::vector<Coord>> coords_in_simple(const std::vector<Root>& simple,
                                                          const LatticeVector& d) {
  const int k = static_cast<int>(simple.size());
  if (k == 0) {
    if (d == LatticeVector{}) return std::vector<Coord>{};
    return std::nullopt;
  }

  std::vector<std::vector<Coord>> gram(static_cast<std::size_t>(k), std::vector<Coord>(static_cast<std::size_t>(k)));
  std::vector<Coord> rhs(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    rhs[static_cast<std::size_t>(i)] = pairing(simple[static_cast<std::size_t>(i)].vec(), d);
    for (int j = 0; j < k; ++j)
      gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          pairing(simple[static_cast<std::size_t>(i)], simple[static_cast<std::size_t>(j)]);
  }
  const Coord det = bareiss_det(gram);
  if (det == 0) return std::nullopt;

  std::vector<Coord> coords(static_cast<std::size_t>(k));
  for (int c = 0; c < k; ++c) {
    auto a = gram;
    for (int i = 0; i < k; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = rhs[static_cast<std::size_t>(i)];
    const Coord num = bareiss_det(std::move(a));
    if (num % det != 0) return std::nullopt;
    coords[static_cast<std::size_t>(c)] = num / det;
  }
  // The Gram solve is only valid when d lies in the span; confirm.
  LatticeVector recon{};
  for (int i = 0; i < k; ++i) recon = recon + simple[static_cast<std::size_t>(i)].vec() * coords[static_cast<std::size_t>(i)];
  if (recon != d) return std::nullopt;
  return coords;
}

}  // namespace detail

// Elements of the orbit that are maximal for: b >= c iff b - c is a
// nonnegative integer combination of `simple`.  For an orbit inside a
// closed subsystem this yields one root per irreducible component the
// orbit meets (the highest root of that component).
inline std::vector<Root> orbit_max(const std::vector<Root>& orbit, const std::vector<Root>& simple) {
  if (orbit.empty()) throw NotAnOrbit("orbit_max: empty orbit");

  // `simple` must be a simple system of a closed subsystem: every root
  // of the closure must be an all-nonnegative or all-nonpositive
  // integer combination of it.
  for (std::size_t i = 0; i < simple.size(); ++i)
    for (std::size_t j = i + 1; j < simple.size(); ++j) {
      const Coord p = pairing(simple[i], simple[j]);
      if (p != 0 && p != 1)
        throw NotSimpleSystem("orbit_max: simple roots must pair to 0 or 1");
    }
  const ClosedSubsystem sub = close_subsystem(simple);
  for (const Root& r : sub.roots) {
    auto coords = detail::coords_in_simple(simple, r.vec());
    if (!coords) throw NotSimpleSystem("orbit_max: root outside the span of the simple system");
    const bool nonneg = std::all_of(coords->begin(), coords->end(), [](Coord c) { return c >= 0; });
    const bool nonpos = std::all_of(coords->begin(), coords->end(), [](Coord c) { return c <= 0; });
    if (!nonneg && !nonpos)
      throw NotSimpleSystem("orbit_max: mixed-sign coordinates in the closure");
  }

  // The orbit must be exactly one W(R_e)-orbit.
  {
    const auto& rs = root_system();
    std::vector<int> want;
    want.reserve(orbit.size());
    for (const Root& r : orbit) want.push_back(rs.checked_index(r.vec()));
    std::sort(want.begin(), want.end());
    if (std::adjacent_find(want.begin(), want.end()) != want.end())
      throw NotAnOrbit("orbit_max: repeated orbit member");

    std::vector<int> reach{want.front()};
    std::array<bool, 72> seen{};
    seen[static_cast<std::size_t>(want.front())] = true;
    for (std::size_t head = 0; head < reach.size(); ++head)
      for (const Root& s : simple) {
        const int y = reflection_perm(s)[reach[head]];
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = true;
          reach.push_back(y);
        }
      }
    std::sort(reach.begin(), reach.end());
    if (reach != want) throw NotAnOrbit("orbit_max: input is not a single W(R_e)-orbit");
  }

  auto dominates = [&](const Root& b, const Root& c) {
    auto coords = detail::coords_in_simple(simple, b.vec() - c.vec());
    return coords && std::all_of(coords->begin(), coords->end(), [](Coord x) { return x >= 0; });
  };

  std::vector<Root> maximal;
  for (const Root& b : orbit) {
    bool dominated = false;
    for (const Root& c : orbit)
      if (!(c == b) && dominates(c, b)) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.push_back(b);
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

}  // namespace atlas
