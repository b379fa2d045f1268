#include "affbraid/linalg.hpp"

#include <numeric>

namespace affb {

int common_conductor(const CMat& m, int base) {
  int N = base;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_rational()) N = std::lcm(N, m(i, j).conductor());
  return N;
}

CMat promote_all(const CMat& m, int N) {
  CMat r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).promote(N);
  return r;
}

std::string mat_key(const CMat& m) {
  std::string k;
  k.reserve(static_cast<std::size_t>(m.size()) * 12);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      m(i, j).append_key(k);
      k += ';';
    }
  }
  return k;
}

std::string render(const CMat& m) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    s += i ? ", [" : "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) s += ", ";
      s += m(i, j).str();
    }
    s += "]";
  }
  return s + "]";
}

CMat to_cmat(const QMat& m) {
  CMat r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Cyclotomic(m(i, j));
  return r;
}

CMat cmat(std::initializer_list<std::initializer_list<Cyclotomic>> rows) {
  Eigen::Index r = static_cast<Eigen::Index>(rows.size());
  Eigen::Index c = r ? static_cast<Eigen::Index>(rows.begin()->size()) : 0;
  CMat m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != c) throw Error(Errc::DimensionMismatch, "ragged matrix literal");
    Eigen::Index j = 0;
    for (const auto& x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

Eigen::MatrixXcd to_numeric(const CMat& m) {
  Eigen::MatrixXcd r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).to_complex();
  return r;
}

}  // namespace affb
