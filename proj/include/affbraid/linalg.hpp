#pragma once

#include <Eigen/Core>

#include <optional>
#include <string>
#include <vector>

#include "affbraid/cyclotomic.hpp"
#include "affbraid/error.hpp"

namespace Eigen {

template <>
struct NumTraits<affb::Rational> : GenericNumTraits<affb::Rational> {
  using Real = affb::Rational;
  using NonInteger = affb::Rational;
  using Nested = affb::Rational;
  using Literal = affb::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<affb::Cyclotomic> : GenericNumTraits<affb::Cyclotomic> {
  using Real = affb::Cyclotomic;
  using NonInteger = affb::Cyclotomic;
  using Nested = affb::Cyclotomic;
  using Literal = affb::Cyclotomic;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 128
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace affb {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using CMat = Mat<Cyclotomic>;
using CVec = Vec<Cyclotomic>;
using QMat = Mat<Rational>;

template <class S>
Mat<S> identity(Eigen::Index n) {
  Mat<S> m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = S(i == j ? 1 : 0);
  return m;
}

template <class S>
Mat<S> zero_mat(Eigen::Index r, Eigen::Index c) {
  Mat<S> m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = S(0);
  return m;
}

template <class S>
bool equal(const Mat<S>& a, const Mat<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

template <class S>
bool is_zero_mat(const Mat<S>& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!is_zero(a(i, j))) return false;
  return true;
}

template <class S>
Mat<S> matmul(const Mat<S>& a, const Mat<S>& b) {
  if (a.cols() != b.rows()) throw Error(Errc::DimensionMismatch, "matmul");
  Mat<S> r(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      S acc(0);
      for (Eigen::Index k = 0; k < a.cols(); ++k) {
        if (is_zero(a(i, k)) || is_zero(b(k, j))) continue;
        acc += a(i, k) * b(k, j);
      }
      r(i, j) = std::move(acc);
    }
  }
  return r;
}

template <class S>
Vec<S> matvec(const Mat<S>& a, const Vec<S>& v) {
  if (a.cols() != v.size()) throw Error(Errc::DimensionMismatch, "matvec");
  Vec<S> r(a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    S acc(0);
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k)) || is_zero(v(k))) continue;
      acc += a(i, k) * v(k);
    }
    r(i) = std::move(acc);
  }
  return r;
}

template <class S>
Mat<S> matpow(const Mat<S>& m, long long e);

// Reduced row echelon form in place; returns pivot columns.
template <class S>
std::vector<Eigen::Index> rref(Mat<S>& m) {
  std::vector<Eigen::Index> piv;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Eigen::Index best = -1;
    int best_cost = 0;
    for (Eigen::Index i = r; i < m.rows(); ++i) {
      if (is_zero(m(i, c))) continue;
      int cost = pivot_cost(m(i, c));
      if (best < 0 || cost < best_cost) {
        best = i;
        best_cost = cost;
      }
    }
    if (best < 0) continue;
    if (best != r) m.row(best).swap(m.row(r));
    S s = inv(m(r, c));
    for (Eigen::Index j = c; j < m.cols(); ++j)
      if (!is_zero(m(r, j))) m(r, j) = m(r, j) * s;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      S f = m(i, c);
      for (Eigen::Index j = c; j < m.cols(); ++j)
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

template <class S>
int rank(const Mat<S>& m) {
  Mat<S> t = m;
  return static_cast<int>(rref(t).size());
}

// Kernel basis as the rows of a matrix in reduced row echelon form.
template <class S>
Mat<S> kernel(const Mat<S>& m) {
  Mat<S> t = m;
  auto piv = rref(t);
  const Eigen::Index n = m.cols();
  std::vector<bool> is_piv(n, false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<Vec<S>> basis;
  for (Eigen::Index f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    Vec<S> v(n);
    for (Eigen::Index j = 0; j < n; ++j) v(j) = S(0);
    v(f) = S(1);
    for (std::size_t r = 0; r < piv.size(); ++r) v(piv[r]) = -t(static_cast<Eigen::Index>(r), f);
    basis.push_back(std::move(v));
  }
  Mat<S> b(static_cast<Eigen::Index>(basis.size()), n);
  for (std::size_t i = 0; i < basis.size(); ++i) b.row(static_cast<Eigen::Index>(i)) = basis[i].transpose();
  if (b.rows() > 0) rref(b);
  return b;
}

// Canonical basis of a row space: reduced echelon form with zero rows dropped.
template <class S>
Mat<S> row_space(const Mat<S>& m) {
  Mat<S> t = m;
  auto piv = rref(t);
  return t.topRows(static_cast<Eigen::Index>(piv.size()));
}

template <class S>
S det(const Mat<S>& m) {
  if (m.rows() != m.cols()) throw Error(Errc::DimensionMismatch, "det of non-square matrix");
  Mat<S> t = m;
  const Eigen::Index n = t.rows();
  S d(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index best = -1;
    int best_cost = 0;
    for (Eigen::Index i = c; i < n; ++i) {
      if (is_zero(t(i, c))) continue;
      int cost = pivot_cost(t(i, c));
      if (best < 0 || cost < best_cost) {
        best = i;
        best_cost = cost;
      }
    }
    if (best < 0) return S(0);
    if (best != c) {
      t.row(best).swap(t.row(c));
      d = -d;
    }
    d = d * t(c, c);
    S s = inv(t(c, c));
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (is_zero(t(i, c))) continue;
      S f = t(i, c) * s;
      for (Eigen::Index j = c; j < n; ++j)
        if (!is_zero(t(c, j))) t(i, j) -= f * t(c, j);
    }
  }
  return d;
}

template <class S>
Mat<S> matinv(const Mat<S>& m) {
  if (m.rows() != m.cols()) throw Error(Errc::DimensionMismatch, "inverse of non-square matrix");
  const Eigen::Index n = m.rows();
  Mat<S> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = identity<S>(n);
  auto piv = rref(aug);
  if (static_cast<Eigen::Index>(piv.size()) < n || piv[n - 1] != n - 1) {
    throw Error(Errc::SingularMatrix, "matrix is singular");
  }
  return aug.rightCols(n);
}

template <class S>
S trace(const Mat<S>& m) {
  S t(0);
  for (Eigen::Index i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

template <class S>
Mat<S> matpow(const Mat<S>& m, long long e) {
  if (e < 0) return matpow(matinv(m), -e);
  Mat<S> r = identity<S>(m.rows());
  Mat<S> b = m;
  while (e > 0) {
    if (e & 1) r = matmul(r, b);
    e >>= 1;
    if (e) b = matmul(b, b);
  }
  return r;
}

template <class S>
bool is_identity(const Mat<S>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const S& x = m(i, j);
      if (i == j ? !(x == S(1)) : !is_zero(x)) return false;
    }
  return true;
}

template <class S>
bool is_scalar(const Mat<S>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (i == j ? !(m(i, i) == m(0, 0)) : !is_zero(m(i, j))) return false;
    }
  return true;
}

struct ReflectionInfo {
  bool is_reflection = false;
  Cyclotomic eigenvalue;
};

// rank(m - I) == 1; the nontrivial eigenvalue is then trace(m) - (dim - 1).
template <class S>
ReflectionInfo is_complex_reflection(const Mat<S>& m) {
  if (m.rows() != m.cols()) throw Error(Errc::DimensionMismatch, "is_complex_reflection");
  Mat<S> d = m - identity<S>(m.rows());
  ReflectionInfo info;
  if (rank(d) != 1) return info;
  info.is_reflection = true;
  info.eigenvalue = Cyclotomic(trace(m) - S(static_cast<long long>(m.rows() - 1)));
  return info;
}

inline CMat eigenspace(const CMat& m, const Cyclotomic& ev) {
  CMat d = m;
  for (Eigen::Index i = 0; i < m.rows(); ++i) d(i, i) = d(i, i) - ev;
  return kernel(d);
}

template <class S>
std::optional<long long> matrix_order(const Mat<S>& m, long long bound) {
  Mat<S> p = m;
  for (long long k = 1; k <= bound; ++k) {
    if (is_identity(p)) return k;
    p = matmul(p, m);
  }
  return std::nullopt;
}

template <class S>
std::optional<long long> projective_order(const Mat<S>& m, long long bound) {
  Mat<S> p = m;
  for (long long k = 1; k <= bound; ++k) {
    if (is_scalar(p)) return k;
    p = matmul(p, m);
  }
  return std::nullopt;
}

// Scale so that the first nonzero entry (row-major) is 1.
inline CVec projective_normalize(const CVec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!v(i).is_zero()) {
      if (v(i).is_one()) return v;
      Cyclotomic s = v(i).inv();
      CVec r(v.size());
      for (Eigen::Index j = 0; j < v.size(); ++j) r(j) = j < i ? Cyclotomic(0) : (j == i ? Cyclotomic(1) : v(j) * s);
      return r;
    }
  }
  return v;
}

inline CMat projective_normalize(const CMat& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) {
        Cyclotomic s = m(i, j).inv();
        CMat r = m;
        for (Eigen::Index a = 0; a < m.rows(); ++a)
          for (Eigen::Index b = 0; b < m.cols(); ++b)
            if (!r(a, b).is_zero()) r(a, b) = r(a, b) * s;
        return r;
      }
  return m;
}

// Promote every entry to a common conductor so that keys are canonical.
int common_conductor(const CMat& m, int base = 1);
CMat promote_all(const CMat& m, int N);
std::string mat_key(const CMat& m);
std::string render(const CMat& m);
CMat to_cmat(const QMat& m);
CMat cmat(std::initializer_list<std::initializer_list<Cyclotomic>> rows);
Eigen::MatrixXcd to_numeric(const CMat& m);

}  // namespace affb
