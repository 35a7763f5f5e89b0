#pragma once

// Small exact integer linear algebra: 7x7 matrices acting on the
// lattice, fraction-free determinants, and Hermite normal forms for
// comparing integer row lattices.  Everything stays in int64; entries
// that show up here are tiny.

#include <array>
#include <cstdint>
#include <vector>

#include "atlas/errors.hpp"
#include "atlas/lattice.hpp"

namespace atlas {

struct Mat7 {
  // m[r][c]: row r, column c.  Column i is the image of e_i.
  std::array<std::array<Coord, 7>, 7> m{};

  static constexpr Mat7 identity() {
    Mat7 id;
    for (int i = 0; i < 7; ++i) id.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return id;
  }

  friend constexpr bool operator==(const Mat7&, const Mat7&) = default;

  constexpr LatticeVector apply(const LatticeVector& v) const {
    LatticeVector r{};
    for (int i = 0; i < 7; ++i) {
      Coord s = 0;
      for (int j = 0; j < 7; ++j) s += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * v[j];
      r[i] = s;
    }
    return r;
  }

  constexpr Mat7 operator*(const Mat7& o) const {
    Mat7 r;
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) {
        Coord s = 0;
        for (int k = 0; k < 7; ++k)
          s += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
               o.m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        r.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s;
      }
    return r;
  }
};

namespace detail {

// Fraction-free Bareiss determinant of an n x n int64 matrix.
inline Coord bareiss_det(std::vector<std::vector<Coord>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Coord sign = 1;
  Coord prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace detail

// Determinant of the 7x7 matrix whose columns are the given vectors.
inline Coord det_of_columns(const std::array<LatticeVector, 7>& cols) {
  std::vector<std::vector<Coord>> a(7, std::vector<Coord>(7));
  for (int r = 0; r < 7; ++r)
    for (int c = 0; c < 7; ++c) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = cols[static_cast<std::size_t>(c)][r];
  return detail::bareiss_det(std::move(a));
}

// Solve M * basis[k] = image[k] (k = 0..6) for an integer matrix M by
// Cramer's rule; the basis need not be unimodular, but M must come out
// integral (it does whenever the data comes from a lattice isometry).
inline Mat7 solve_matrix(const std::array<LatticeVector, 7>& basis,
                         const std::array<LatticeVector, 7>& image) {
  const Coord det = det_of_columns(basis);
  if (det == 0) throw InternalError("solve_matrix: basis is singular");
  Mat7 res;
  for (int r = 0; r < 7; ++r) {
    // Row r of M solves basis^T x = (r-th coordinates of the images);
    // Cramer with the fraction-free determinant keeps it exact.
    for (int c = 0; c < 7; ++c) {
      std::vector<std::vector<Coord>> a(7, std::vector<Coord>(7));
      for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
          a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = basis[static_cast<std::size_t>(i)][j];
      for (int i = 0; i < 7; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = image[static_cast<std::size_t>(i)][r];
      const Coord num = detail::bareiss_det(std::move(a));
      if (num % det != 0)
        throw InternalError("solve_matrix: non-integral solution entry");
      res.m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = num / det;
    }
  }
  return res;
}

// True when M preserves the intersection pairing on the basis vectors.
inline bool preserves_pairing(const Mat7& M) {
  std::array<LatticeVector, 7> img;
  for (int i = 0; i < 7; ++i) img[static_cast<std::size_t>(i)] = M.apply(basis_vector(i));
  for (int i = 0; i < 7; ++i)
    for (int j = i; j < 7; ++j) {
      const Coord want = (i == j) ? (i == 0 ? 1 : -1) : 0;
      if (pairing(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(j)]) != want) return false;
    }
  return true;
}

// Hermite normal form of the row lattice spanned by the given vectors.
// Returns the nonzero rows in canonical form, so two generating sets
// span the same lattice iff their HNFs are equal.
inline std::vector<std::array<Coord, 7>> row_lattice_hnf(const std::vector<LatticeVector>& rows) {
  std::vector<std::array<Coord, 7>> a;
  a.reserve(rows.size());
  for (const auto& v : rows) a.push_back(v.c);

  std::size_t row = 0;
  for (int col = 0; col < 7 && row < a.size(); ++col) {
    // Euclidean elimination below position (row, col).
    while (true) {
      std::size_t piv = a.size();
      for (std::size_t i = row; i < a.size(); ++i)
        if (a[i][static_cast<std::size_t>(col)] != 0 &&
            (piv == a.size() ||
             std::abs(a[i][static_cast<std::size_t>(col)]) < std::abs(a[piv][static_cast<std::size_t>(col)])))
          piv = i;
      if (piv == a.size()) break;  // column is zero below
      std::swap(a[row], a[piv]);
      bool cleared = true;
      for (std::size_t i = row + 1; i < a.size(); ++i) {
        if (a[i][static_cast<std::size_t>(col)] == 0) continue;
        const Coord q = a[i][static_cast<std::size_t>(col)] / a[row][static_cast<std::size_t>(col)];
        for (int j = 0; j < 7; ++j) a[i][static_cast<std::size_t>(j)] -= q * a[row][static_cast<std::size_t>(j)];
        if (a[i][static_cast<std::size_t>(col)] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (a[row][static_cast<std::size_t>(col)] != 0) {
      if (a[row][static_cast<std::size_t>(col)] < 0)
        for (int j = 0; j < 7; ++j) a[row][static_cast<std::size_t>(j)] = -a[row][static_cast<std::size_t>(j)];
      // Reduce the entries above the pivot into [0, pivot).
      for (std::size_t i = 0; i < row; ++i) {
        Coord q = a[i][static_cast<std::size_t>(col)] / a[row][static_cast<std::size_t>(col)];
        if (a[i][static_cast<std::size_t>(col)] % a[row][static_cast<std::size_t>(col)] < 0) q -= 1;
        if (q != 0)
          for (int j = 0; j < 7; ++j) a[i][static_cast<std::size_t>(j)] -= q * a[row][static_cast<std::size_t>(j)];
      }
      ++row;
    }
  }
  a.resize(row);
  return a;
}

inline int lattice_rank(const std::vector<LatticeVector>& rows) {
  return static_cast<int>(row_lattice_hnf(rows).size());
}

}  // namespace atlas
