#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "sjlab/errors.hpp"

namespace sjlab {

using complex = std::complex<double>;

/// Dense row-major real matrix. Small fixed-size workloads only; every
/// public operation leaves all entries finite.
class RealMatrix {
 public:
  RealMatrix() = default;
  RealMatrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, fill) {
    if (rows <= 0 || cols <= 0) throw InvariantViolation("matrix dims must be positive");
  }

  static RealMatrix identity(int n) {
    RealMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  const std::vector<double>& data() const { return a_; }
  std::vector<double>& data() { return a_; }

  RealMatrix transpose() const {
    RealMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  double norm_inf() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::abs(v));
    return m;
  }

  double trace() const {
    double s = 0.0;
    for (int i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
    return s;
  }

  bool is_finite() const {
    for (double v : a_)
      if (!std::isfinite(v)) return false;
    return true;
  }

  RealMatrix& operator+=(const RealMatrix& o) {
    check_same_shape(o);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  RealMatrix& operator-=(const RealMatrix& o) {
    check_same_shape(o);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  RealMatrix& operator*=(double s) {
    for (double& v : a_) v *= s;
    return *this;
  }

 private:
  void check_same_shape(const RealMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvariantViolation("shape mismatch");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> a_;
};

inline RealMatrix operator+(RealMatrix a, const RealMatrix& b) { return a += b; }
inline RealMatrix operator-(RealMatrix a, const RealMatrix& b) { return a -= b; }
inline RealMatrix operator*(RealMatrix a, double s) { return a *= s; }
inline RealMatrix operator*(double s, RealMatrix a) { return a *= s; }

inline RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
  if (a.cols() != b.rows()) throw InvariantViolation("shape mismatch in product");
  RealMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

inline RealMatrix symmetrize(const RealMatrix& s) {
  RealMatrix r(s.rows(), s.cols());
  for (int i = 0; i < s.rows(); ++i)
    for (int j = 0; j < s.cols(); ++j) r(i, j) = 0.5 * (s(i, j) + s(j, i));
  return r;
}

inline double symmetry_residual(const RealMatrix& s) {
  double m = 0.0;
  for (int i = 0; i < s.rows(); ++i)
    for (int j = 0; j < s.cols(); ++j) m = std::max(m, std::abs(s(i, j) - s(j, i)));
  return m;
}

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols, complex fill = complex(0.0, 0.0))
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, fill) {
    if (rows <= 0 || cols <= 0) throw InvariantViolation("matrix dims must be positive");
  }

  ComplexMatrix(const RealMatrix& re, const RealMatrix& im)
      : ComplexMatrix(re.rows(), re.cols()) {
    if (re.rows() != im.rows() || re.cols() != im.cols())
      throw InvariantViolation("re/im shape mismatch");
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) (*this)(i, j) = complex(re(i, j), im(i, j));
  }

  static ComplexMatrix identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix from_real(const RealMatrix& r) {
    ComplexMatrix m(r.rows(), r.cols());
    for (int i = 0; i < r.rows(); ++i)
      for (int j = 0; j < r.cols(); ++j) m(i, j) = r(i, j);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  complex& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  complex operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  const std::vector<complex>& data() const { return a_; }

  ComplexMatrix transpose() const {
    ComplexMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  ComplexMatrix conj() const {
    ComplexMatrix c(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) c(i, j) = std::conj((*this)(i, j));
    return c;
  }

  RealMatrix real() const {
    RealMatrix r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j).real();
    return r;
  }

  RealMatrix imag() const {
    RealMatrix r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j).imag();
    return r;
  }

  double norm_inf() const {
    double m = 0.0;
    for (const complex& v : a_) m = std::max(m, std::abs(v));
    return m;
  }

  complex trace() const {
    complex s = 0.0;
    for (int i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
    return s;
  }

  bool is_finite() const {
    for (const complex& v : a_)
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    check_same_shape(o);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    check_same_shape(o);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  ComplexMatrix& operator*=(complex s) {
    for (complex& v : a_) v *= s;
    return *this;
  }

 private:
  void check_same_shape(const ComplexMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvariantViolation("shape mismatch");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<complex> a_;
};

inline ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
inline ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
inline ComplexMatrix operator*(ComplexMatrix a, complex s) { return a *= s; }
inline ComplexMatrix operator*(complex s, ComplexMatrix a) { return a *= s; }

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw InvariantViolation("shape mismatch in product");
  ComplexMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const complex aik = a(i, k);
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

inline ComplexMatrix symmetrize(const ComplexMatrix& s) {
  ComplexMatrix r(s.rows(), s.cols());
  for (int i = 0; i < s.rows(); ++i)
    for (int j = 0; j < s.cols(); ++j) r(i, j) = 0.5 * (s(i, j) + s(j, i));
  return r;
}

inline double max_abs_diff(const RealMatrix& a, const RealMatrix& b) {
  double m = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  double m = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

}  // namespace sjlab
