#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

#include <Eigen/Core>

#include "w0sig/checked.hpp"
#include "w0sig/errors.hpp"
#include "w0sig/rational.hpp"

namespace w0sig {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntVector = Vector<std::int64_t>;
using IntMatrix = Matrix<std::int64_t>;
using RationalVector = Vector<Rational>;
using RationalMatrix = Matrix<Rational>;

/// Hash for small integer vectors used as map keys (weights, restricted
/// weights).
struct VectorHash {
  std::size_t operator()(const IntVector& v) const noexcept {
    std::size_t h = static_cast<std::size_t>(v.size()) * 0x9e3779b97f4a7c15ULL;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      h ^= std::hash<std::int64_t>{}(v[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

/// Eigen's operator== on differently sized vectors is undefined; keys in a
/// map always have the same size but this keeps the comparison total.
struct VectorEqual {
  bool operator()(const IntVector& a, const IntVector& b) const noexcept {
    return a.size() == b.size() && a == b;
  }
};

template <typename Scalar>
bool lex_less(const Vector<Scalar>& a, const Vector<Scalar>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

/// Strict lexicographic order on vectors, usable as a std::map comparator.
struct LexLess {
  template <typename Scalar>
  bool operator()(const Vector<Scalar>& a, const Vector<Scalar>& b) const {
    return lex_less(a, b);
  }
};

struct LexGreater {
  template <typename Scalar>
  bool operator()(const Vector<Scalar>& a, const Vector<Scalar>& b) const {
    return lex_less(b, a);
  }
};

inline std::int64_t checked_dot(const IntVector& a, const IntVector& b) {
  std::int64_t s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

inline std::int64_t coefficient_sum(const IntVector& v) { return v.sum(); }

inline bool is_nonnegative(const IntVector& v) { return (v.array() >= 0).all(); }

inline RationalMatrix to_rational(const IntMatrix& m) { return m.cast<Rational>(); }
inline RationalVector to_rational(const IntVector& v) { return v.cast<Rational>(); }

/// Converts a rational vector to integers; throws LatticeError if any entry
/// is not integral.
inline IntVector to_integer(const RationalVector& v) {
  IntVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = v[i].to_integer();
  return out;
}

inline IntMatrix to_integer(const RationalMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_integer();
  return out;
}

namespace detail {

// In-place Gauss-Jordan elimination over an exact field. Returns the rank and
// accumulates the determinant of the leading square block.
template <typename Scalar, typename Derived>
Eigen::Index row_reduce(Eigen::MatrixBase<Derived>& m, Scalar* det = nullptr,
                        Eigen::Index pivot_cols = -1) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = pivot_cols < 0 ? m.cols() : pivot_cols;
  Scalar d(1);
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index p = rank;
    while (p < rows && m(p, c) == Scalar(0)) ++p;
    if (p == rows) {
      d = Scalar(0);
      continue;
    }
    if (p != rank) {
      m.row(p).swap(m.row(rank));
      d = -d;
    }
    const Scalar pivot = m(rank, c);
    d *= pivot;
    m.row(rank) /= pivot;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == rank || m(r, c) == Scalar(0)) continue;
      const Scalar f = m(r, c);
      m.row(r) -= f * m.row(rank);
    }
    ++rank;
  }
  if (det) *det = rank == rows ? d : Scalar(0);
  return rank;
}

}  // namespace detail

template <typename Scalar>
Eigen::Index exact_rank(Matrix<Scalar> m) {
  return detail::row_reduce<Scalar>(m);
}

template <typename Scalar>
Scalar exact_determinant(Matrix<Scalar> m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  Scalar det(0);
  detail::row_reduce<Scalar>(m, &det);
  return det;
}

/// Exact inverse; throws DomainError when the matrix is singular.
template <typename Scalar>
Matrix<Scalar> exact_inverse(const Matrix<Scalar>& m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw DomainError("inverse of a non-square matrix");
  Matrix<Scalar> aug(n, 2 * n);
  aug << m, Matrix<Scalar>::Identity(n, n);
  if (detail::row_reduce<Scalar>(aug, static_cast<Scalar*>(nullptr), n) != n)
    throw DomainError("matrix is singular");
  return aug.rightCols(n);
}

/// Solves m * x = b for square invertible m.
template <typename Scalar>
Vector<Scalar> exact_solve(const Matrix<Scalar>& m, const Vector<Scalar>& b) {
  return exact_inverse(m) * b;
}

/// Row-style Hermite normal form of an integer matrix: the returned rows form
/// a basis of the row lattice, in echelon form with positive pivots and the
/// entries above each pivot reduced into [0, pivot). Zero rows are dropped.
IntMatrix hermite_rows(IntMatrix m);

/// Determinant of an integer matrix via fraction-free (Bareiss) elimination.
std::int64_t integer_determinant(IntMatrix m);

std::string format_vector(const IntVector& v, char sep = ',');
std::string format_vector(const RationalVector& v, char sep = ',');

}  // namespace w0sig
