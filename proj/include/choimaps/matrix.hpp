// Copyright 2026 The choimaps Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

namespace choimaps {

using Complex = std::complex<double>;

/// Numerical thresholds shared by the PSD / Hermiticity / eigenvalue checks.
struct Tolerance {
  double psd_tol = 1e-10;
  double herm_tol = 1e-12;
  double eig_tol = 1e-10;

  /// Throws std::invalid_argument unless every threshold is strictly positive.
  void validate() const;
};

/// Dense square complex matrix. Storage is an Eigen matrix; the wrapper only
/// guarantees squareness and gives the rest of the library one value type.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  explicit ComplexMatrix(Eigen::MatrixXcd m);

  static ComplexMatrix zero(std::size_t dim) { return ComplexMatrix(dim); }
  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(const std::vector<Complex>& d);
  static ComplexMatrix diagonal(std::initializer_list<double> d);
  /// Row-major construction from dim*dim entries.
  static ComplexMatrix from_rows(std::size_t dim, const std::vector<Complex>& entries);
  /// |v><v| for a column vector v (not normalised).
  static ComplexMatrix outer(const Eigen::VectorXcd& v);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }

  Complex& operator()(std::size_t i, std::size_t j) { return m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)); }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

  const Eigen::MatrixXcd& eigen() const { return m_; }

  ComplexMatrix adjoint() const { return ComplexMatrix(m_.adjoint()); }
  ComplexMatrix transpose() const { return ComplexMatrix(m_.transpose()); }
  Complex trace() const { return m_.trace(); }

  /// max_{i,j} |m_ij - conj(m_ji)|
  double hermiticity_defect() const;
  bool is_hermitian(double tol = Tolerance{}.herm_tol) const { return hermiticity_defect() <= tol; }
  /// max_{i,j} |m_ij|
  double max_abs() const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a.dim() == b.dim() && a.m_ == b.m_;
  }

 private:
  Eigen::MatrixXcd m_;
};

/// max_{i,j} |a_ij - b_ij|; dimensions must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// 12 significant digits ("%.12g"); used for labels and report output.
std::string format_number(double v);

// Matrix JSON: {"dim": n, "re": [n*n row-major], "im": [n*n row-major]}
void to_json(nlohmann::json& j, const ComplexMatrix& m);
void from_json(const nlohmann::json& j, ComplexMatrix& m);

}  // namespace choimaps
