#pragma once

// The integer lattice I^{1,6} = Z e0 + Z e1 + ... + Z e6 with the
// signature-(1,6) intersection pairing, the hyperplane class
// h = 3 e0 - e1 - ... - e6, and the 72 roots
//     { v : v.v = -2, v.h = 0 },
// which form an E6 root system (in the intersection-form sign
// convention: roots square to -2, adjacency shows up as pairing +1).

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "atlas/errors.hpp"

namespace atlas {

using Coord = std::int64_t;

struct LatticeVector {
  std::array<Coord, 7> c{};  // coefficients of e0, e1, ..., e6

  constexpr Coord& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  constexpr Coord operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

  friend constexpr bool operator==(const LatticeVector&, const LatticeVector&) = default;
  // Lexicographic comparison on coordinates; this is the canonical order
  // used to index roots and to make all serialized output byte-stable.
  friend constexpr auto operator<=>(const LatticeVector&, const LatticeVector&) = default;

  constexpr LatticeVector operator+(const LatticeVector& o) const {
    LatticeVector r;
    for (int i = 0; i < 7; ++i) r[i] = c[static_cast<std::size_t>(i)] + o[i];
    return r;
  }
  constexpr LatticeVector operator-(const LatticeVector& o) const {
    LatticeVector r;
    for (int i = 0; i < 7; ++i) r[i] = c[static_cast<std::size_t>(i)] - o[i];
    return r;
  }
  constexpr LatticeVector operator-() const {
    LatticeVector r;
    for (int i = 0; i < 7; ++i) r[i] = -c[static_cast<std::size_t>(i)];
    return r;
  }
  constexpr LatticeVector operator*(Coord k) const {
    LatticeVector r;
    for (int i = 0; i < 7; ++i) r[i] = k * c[static_cast<std::size_t>(i)];
    return r;
  }
};

inline std::string to_string(const LatticeVector& v) {
  std::string s = "(";
  for (int i = 0; i < 7; ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  s += ')';
  return s;
}

// Intersection pairing: (u,v) = u0 v0 - u1 v1 - ... - u6 v6.
constexpr Coord pairing(const LatticeVector& u, const LatticeVector& v) {
  Coord s = u[0] * v[0];
  for (int i = 1; i < 7; ++i) s -= u[i] * v[i];
  return s;
}

constexpr LatticeVector basis_vector(int i) {
  LatticeVector v{};
  v[i] = 1;
  return v;
}

// h = 3 e0 - e1 - ... - e6, with h.h = 3.
constexpr LatticeVector hyperplane_class() {
  return LatticeVector{{3, -1, -1, -1, -1, -1, -1}};
}

constexpr bool is_root(const LatticeVector& v) {
  return pairing(v, v) == -2 && pairing(v, hyperplane_class()) == 0;
}

// A lattice class with self-pairing -2 orthogonal to h.  Construction
// validates, so holding a Root is holding the proof.
class Root {
 public:
  explicit Root(const LatticeVector& v) : vec_(v) {
    if (!is_root(v))
      throw NotARoot("not a root: " + to_string(v) + " has v.v=" +
                     std::to_string(pairing(v, v)) + ", v.h=" +
                     std::to_string(pairing(v, hyperplane_class())));
  }

  const LatticeVector& vec() const { return vec_; }
  Root operator-() const { return Root(-vec_); }

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;

 private:
  LatticeVector vec_;
};

inline Coord pairing(const Root& a, const Root& b) { return pairing(a.vec(), b.vec()); }
inline Coord pairing(const Root& a, const LatticeVector& b) { return pairing(a.vec(), b); }
inline Coord pairing(const LatticeVector& a, const Root& b) { return pairing(a, b.vec()); }

// Picard-Lefschetz / Weyl reflection in the root a:
//   b |-> b + (b,a) a.
// An involution; preserves the pairing and fixes h.
inline LatticeVector reflect(const Root& a, const LatticeVector& b) {
  return b + a.vec() * pairing(b, a.vec());
}

// Generic positivity functional used to split (sub)root systems into
// positive and negative halves: f(v) = sum_i v_i * 100^(6-i).  Root
// coordinates are bounded by 2, so f is just the lexicographic order
// and never vanishes on a nonzero vector.
constexpr Coord positivity(const LatticeVector& v) {
  Coord s = 0;
  for (int i = 0; i < 7; ++i) s = s * 100 + v[i];
  return s;
}

// All 72 roots in lexicographic order, with index lookup.
class RootSystem72 {
 public:
  static const RootSystem72& get() {
    static const RootSystem72 instance;
    return instance;
  }

  const std::vector<Root>& roots() const { return roots_; }
  int size() const { return static_cast<int>(roots_.size()); }
  const Root& operator[](int i) const { return roots_[static_cast<std::size_t>(i)]; }

  // Position of v in the canonical order, or -1 when v is not a root.
  int index_of(const LatticeVector& v) const {
    auto it = std::lower_bound(vecs_.begin(), vecs_.end(), v);
    if (it == vecs_.end() || *it != v) return -1;
    return static_cast<int>(it - vecs_.begin());
  }

  int index_of(const Root& r) const { return index_of(r.vec()); }

  int checked_index(const LatticeVector& v) const {
    int i = index_of(v);
    if (i < 0) throw NotARoot("not a root: " + to_string(v));
    return i;
  }

 private:
  RootSystem72() {
    // Bounded exhaustive search.  For a root, c0^2 + 2 = sum c_i^2 and
    // sum c_i = -3 c0, so Cauchy-Schwarz gives 9 c0^2 <= 6 (c0^2 + 2),
    // i.e. |c0| <= 2 and then |c_i| <= 2; the window [-3,3]^7 is
    // therefore complete with room to spare.
    LatticeVector v;
    for (v[0] = -3; v[0] <= 3; ++v[0])
      for (v[1] = -3; v[1] <= 3; ++v[1])
        for (v[2] = -3; v[2] <= 3; ++v[2])
          for (v[3] = -3; v[3] <= 3; ++v[3])
            for (v[4] = -3; v[4] <= 3; ++v[4])
              for (v[5] = -3; v[5] <= 3; ++v[5])
                for (v[6] = -3; v[6] <= 3; ++v[6])
                  if (is_root(v)) {
                    vecs_.push_back(v);
                    roots_.emplace_back(v);
                  }
    if (roots_.size() != 72)
      throw InternalError("root enumeration found " + std::to_string(roots_.size()) +
                          " roots, expected 72");
    // vecs_ is lex-sorted by construction (ascending loops).
    for (const auto& r : roots_)
      if (positivity(r.vec()) == 0)
        throw InternalError("positivity functional vanishes on root " + to_string(r.vec()));
  }

  std::vector<Root> roots_;
  std::vector<LatticeVector> vecs_;
};

inline const RootSystem72& root_system() { return RootSystem72::get(); }

// Simple roots a1 = e0-e1-e2-e3, a_i = e_{i-1} - e_i (i = 2..6).
// Their Dynkin diagram is the E6 T-shape: the chain a2-a3-a4-a5-a6
// with a1 attached to a4.
inline std::array<Root, 6> simple_roots() {
  return {Root(LatticeVector{{1, -1, -1, -1, 0, 0, 0}}),
          Root(LatticeVector{{0, 1, -1, 0, 0, 0, 0}}),
          Root(LatticeVector{{0, 0, 1, -1, 0, 0, 0}}),
          Root(LatticeVector{{0, 0, 0, 1, -1, 0, 0}}),
          Root(LatticeVector{{0, 0, 0, 0, 1, -1, 0}}),
          Root(LatticeVector{{0, 0, 0, 0, 0, 1, -1}})};
}

}  // namespace atlas
