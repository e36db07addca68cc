#pragma once

// Hermite and Smith normal forms of integer matrices, with the unimodular
// transforms tracked exactly, plus the integer kernel computation built on
// them. Naive cubic algorithms; target dimensions stay in single digits.

#include <utility>

#include "csl/matrix.hpp"

namespace csl {

struct HnfResult {
  IntMatrix H;  // H = U * M, row echelon, positive pivots, entries above each pivot reduced
  IntMatrix U;  // unimodular
  int rank = 0;
};

namespace nfdetail {

inline void swap_rows(IntMatrix& m, int a, int b) {
  for (int j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

inline void negate_row(IntMatrix& m, int r) {
  for (int j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

// row dst += k * row src
inline void addmul_row(IntMatrix& m, int dst, int src, const Int& k) {
  for (int j = 0; j < m.cols(); ++j) m(dst, j) += k * m(src, j);
}

inline void swap_cols(IntMatrix& m, int a, int b) {
  for (int i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

inline void negate_col(IntMatrix& m, int c) {
  for (int i = 0; i < m.rows(); ++i) m(i, c) = -m(i, c);
}

inline void addmul_col(IntMatrix& m, int dst, int src, const Int& k) {
  for (int i = 0; i < m.rows(); ++i) m(i, dst) += k * m(i, src);
}

}  // namespace nfdetail

// Row-style Hermite normal form: U*M = H with U unimodular, H in echelon
// form with positive pivots; within each pivot column the entries above the
// pivot are reduced into [0, pivot). Errors with RankDeficient when M lacks
// full column rank, unless allow_rank_deficient is set (then trailing zero
// rows and skipped pivot columns record the deficiency).
inline HnfResult hnf(const IntMatrix& m, bool allow_rank_deficient = false) {
  using namespace nfdetail;
  HnfResult res{m, IntMatrix::identity(m.rows()), 0};
  IntMatrix& h = res.H;
  IntMatrix& u = res.U;
  int rows = h.rows(), cols = h.cols();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    // Euclidean sweep: concentrate the column gcd at (r, c).
    for (;;) {
      int best = -1;
      for (int i = r; i < rows; ++i)
        if (h(i, c) != 0 && (best < 0 || abs_int(h(i, c)) < abs_int(h(best, c))))
          best = i;
      if (best < 0) break;
      if (best != r) {
        swap_rows(h, r, best);
        swap_rows(u, r, best);
      }
      bool clean = true;
      for (int i = r + 1; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        Int q = floor_div(h(i, c), h(r, c));
        if (q != 0) {
          addmul_row(h, i, r, -q);
          addmul_row(u, i, r, -q);
        }
        if (h(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(r, c) == 0) continue;  // no pivot in this column
    if (h(r, c) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (int i = 0; i < r; ++i) {
      Int q = floor_div(h(i, c), h(r, c));
      if (q != 0) {
        addmul_row(h, i, r, -q);
        addmul_row(u, i, r, -q);
      }
    }
    ++r;
  }
  res.rank = r;
  if (!allow_rank_deficient && res.rank < cols)
    fail(errc::rank_deficient, "matrix does not have full column rank");
  return res;
}

struct SnfResult {
  IntMatrix D;  // diagonal, d_i >= 0, d_i | d_{i+1}
  IntMatrix U;  // unimodular, U * M * V = D
  IntMatrix V;  // unimodular
};

// Smith normal form of a square nonsingular integer matrix.
inline SnfResult snf(const IntMatrix& m) {
  using namespace nfdetail;
  if (!m.is_square()) fail(errc::internal, "snf expects a square matrix");
  int n = m.rows();
  SnfResult res{m, IntMatrix::identity(n), IntMatrix::identity(n)};
  IntMatrix& d = res.D;
  IntMatrix& u = res.U;
  IntMatrix& v = res.V;

  for (int t = 0; t < n; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block to the pivot slot
      int bi = -1, bj = -1;
      for (int i = t; i < n; ++i)
        for (int j = t; j < n; ++j)
          if (d(i, j) != 0 &&
              (bi < 0 || abs_int(d(i, j)) < abs_int(d(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi < 0) fail(errc::singular, "singular matrix has no Smith normal form here");
      if (bi != t) {
        swap_rows(d, t, bi);
        swap_rows(u, t, bi);
      }
      if (bj != t) {
        swap_cols(d, t, bj);
        swap_cols(v, t, bj);
      }

      bool dirty = false;
      for (int i = t + 1; i < n; ++i) {
        if (d(i, t) == 0) continue;
        Int q = floor_div(d(i, t), d(t, t));
        addmul_row(d, i, t, -q);
        addmul_row(u, i, t, -q);
        if (d(i, t) != 0) dirty = true;
      }
      for (int j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Int q = floor_div(d(t, j), d(t, t));
        addmul_col(d, j, t, -q);
        addmul_col(v, j, t, -q);
        if (d(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // pivot must divide the whole trailing block for the chain to hold
      bool fixed = false;
      for (int i = t + 1; i < n && !fixed; ++i)
        for (int j = t + 1; j < n && !fixed; ++j)
          if (d(i, j) % d(t, t) != 0) {
            addmul_row(d, t, i, 1);
            addmul_row(u, t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (d(t, t) < 0) {
      negate_row(d, t);
      negate_row(u, t);
    }
  }
  return res;
}

// Basis of { x : M x = 0 } as columns; empty kernel gives a 0-column result
// reported through cols() of a rows x 0 matrix being invalid, so callers
// that expect a nontrivial kernel should check kernel_rank first.
inline int kernel_rank(const IntMatrix& m) {
  return m.cols() - hnf(m.transpose(), true).rank;
}

inline IntMatrix kernel_basis(const IntMatrix& m) {
  HnfResult t = hnf(m.transpose(), true);
  int k = m.cols() - t.rank;
  if (k <= 0) fail(errc::internal, "kernel_basis: trivial kernel");
  IntMatrix out(m.cols(), k);
  for (int c = 0; c < k; ++c)
    for (int i = 0; i < m.cols(); ++i) out(i, c) = t.U(t.rank + c, i);
  return out;
}

}  // namespace csl
