#pragma once

// Dense row-major matrices over an exact scalar type. Everything is a
// value; no views, no floating point. Field operations (det, inverse,
// solve) work for any exact field scalar (Rational, QuadExt).

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "csl/numbers.hpp"
#include "csl/quadext.hpp"

namespace csl {

template <class T>
class Mat {
 public:
  Mat() = default;

  Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {
    if (rows <= 0 || cols <= 0) fail(errc::internal, "matrix dimensions must be positive");
  }

  Mat(int rows, int cols, std::initializer_list<T> entries) : Mat(rows, cols) {
    if (entries.size() != e_.size()) fail(errc::internal, "entry count mismatch");
    size_t k = 0;
    for (const T& v : entries) e_[k++] = v;
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(int i, int j) { return e_[size_t(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Mat block(int row0, int col0, int nrows, int ncols) const {
    Mat b(nrows, ncols);
    for (int i = 0; i < nrows; ++i)
      for (int j = 0; j < ncols; ++j) b(i, j) = (*this)(row0 + i, col0 + j);
    return b;
  }

  template <class F>
  auto map(F&& f) const -> Mat<std::decay_t<decltype(f(std::declval<T>()))>> {
    Mat<std::decay_t<decltype(f(std::declval<T>()))>> out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  friend Mat operator+(const Mat& x, const Mat& y) {
    same_shape(x, y);
    Mat out(x.rows_, x.cols_);
    for (size_t k = 0; k < x.e_.size(); ++k) out.e_[k] = x.e_[k] + y.e_[k];
    return out;
  }

  friend Mat operator-(const Mat& x, const Mat& y) {
    same_shape(x, y);
    Mat out(x.rows_, x.cols_);
    for (size_t k = 0; k < x.e_.size(); ++k) out.e_[k] = x.e_[k] - y.e_[k];
    return out;
  }

  friend Mat operator-(const Mat& x) {
    Mat out(x.rows_, x.cols_);
    for (size_t k = 0; k < x.e_.size(); ++k) out.e_[k] = -x.e_[k];
    return out;
  }

  friend Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols_ != y.rows_) fail(errc::internal, "matrix product shape mismatch");
    Mat out(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
      for (int k = 0; k < x.cols_; ++k) {
        const T& xik = x(i, k);
        if (xik == T(0)) continue;
        for (int j = 0; j < y.cols_; ++j) out(i, j) += xik * y(k, j);
      }
    return out;
  }

  friend Mat operator*(const T& c, const Mat& x) {
    Mat out(x.rows_, x.cols_);
    for (size_t k = 0; k < x.e_.size(); ++k) out.e_[k] = c * x.e_[k];
    return out;
  }

  friend Mat operator*(const Mat& x, const T& c) { return c * x; }

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.e_ == y.e_;
  }

 private:
  static void same_shape(const Mat& x, const Mat& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
      fail(errc::internal, "matrix shape mismatch");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> e_;
};

using IntMatrix = Mat<Int>;
using RatMatrix = Mat<Rational>;
using QuadMatrix = Mat<QuadExt>;

inline RatMatrix to_rational(const IntMatrix& m) {
  return m.map([](const Int& v) { return Rational(v); });
}

inline bool is_integer_matrix(const RatMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (den(m(i, j)) != 1) return false;
  return true;
}

inline IntMatrix to_integer(const RatMatrix& m) {
  if (!is_integer_matrix(m)) fail(errc::internal, "matrix has non-integer entries");
  return m.map([](const Rational& v) { return num(v); });
}

inline QuadMatrix to_quad(const RatMatrix& m, long radicand = 0) {
  (void)radicand;  // pure rational entries carry no radicand
  return m.map([](const Rational& v) { return QuadExt(v); });
}

inline bool is_rational_matrix(const QuadMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_rational()) return false;
  return true;
}

inline RatMatrix rational_part(const QuadMatrix& m) {
  if (!is_rational_matrix(m)) fail(errc::internal, "matrix has irrational entries");
  return m.map([](const QuadExt& v) { return v.rational_value(); });
}

template <class T>
Mat<T> concat_cols(const Mat<T>& x, const Mat<T>& y) {
  if (x.rows() != y.rows()) fail(errc::internal, "concat_cols row mismatch");
  Mat<T> out(x.rows(), x.cols() + y.cols());
  for (int i = 0; i < x.rows(); ++i) {
    for (int j = 0; j < x.cols(); ++j) out(i, j) = x(i, j);
    for (int j = 0; j < y.cols(); ++j) out(i, x.cols() + j) = y(i, j);
  }
  return out;
}

// Gaussian elimination over an exact field.
template <class T>
T det(const Mat<T>& m) {
  if (!m.is_square()) fail(errc::internal, "determinant of a non-square matrix");
  Mat<T> a = m;
  int n = a.rows();
  T d(1);
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int i = c; i < n; ++i)
      if (!(a(i, c) == T(0))) {
        pivot = i;
        break;
      }
    if (pivot < 0) return T(0);
    if (pivot != c) {
      for (int j = 0; j < n; ++j) std::swap(a(c, j), a(pivot, j));
      d = -d;
    }
    d = d * a(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (a(i, c) == T(0)) continue;
      T f = a(i, c) / a(c, c);
      for (int j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return d;
}

inline Int int_det(const IntMatrix& m) {
  Rational d = det(to_rational(m));
  return num(d);  // exact: determinant of an integer matrix is an integer
}

// Solve A * X = B exactly over a field; throws Singular.
template <class T>
Mat<T> solve(const Mat<T>& a0, const Mat<T>& b0) {
  if (!a0.is_square() || a0.rows() != b0.rows())
    fail(errc::internal, "solve shape mismatch");
  Mat<T> a = a0;
  Mat<T> x = b0;
  int n = a.rows();
  int w = x.cols();
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int i = c; i < n; ++i)
      if (!(a(i, c) == T(0))) {
        pivot = i;
        break;
      }
    if (pivot < 0) fail(errc::singular, "singular matrix");
    if (pivot != c) {
      for (int j = 0; j < n; ++j) std::swap(a(c, j), a(pivot, j));
      for (int j = 0; j < w; ++j) std::swap(x(c, j), x(pivot, j));
    }
    T inv = T(1) / a(c, c);
    for (int j = 0; j < n; ++j) a(c, j) = a(c, j) * inv;
    for (int j = 0; j < w; ++j) x(c, j) = x(c, j) * inv;
    for (int i = 0; i < n; ++i) {
      if (i == c || a(i, c) == T(0)) continue;
      T f = a(i, c);
      for (int j = 0; j < n; ++j) a(i, j) -= f * a(c, j);
      for (int j = 0; j < w; ++j) x(i, j) -= f * x(c, j);
    }
  }
  return x;
}

template <class T>
Mat<T> inverse(const Mat<T>& m) {
  if (!m.is_square()) fail(errc::internal, "inverse of a non-square matrix");
  return solve(m, Mat<T>::identity(m.rows()));
}

// Exact inverse of a rational matrix; M * rat_inverse(M) == identity.
inline RatMatrix rat_inverse(const RatMatrix& m) { return inverse(m); }

template <class T, class Fmt>
std::string format_matrix_with(const Mat<T>& m, Fmt&& fmt) {
  std::string out = "[";
  for (int i = 0; i < m.rows(); ++i) {
    out += (i ? "; " : "");
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += fmt(m(i, j));
    }
  }
  return out + "]";
}

inline std::string format_matrix(const RatMatrix& m) {
  return format_matrix_with(m, [](const Rational& v) { return format_rational(v); });
}

inline std::string format_matrix(const IntMatrix& m) {
  return format_matrix_with(m, [](const Int& v) { return v.str(); });
}

}  // namespace csl
