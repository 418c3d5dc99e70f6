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

#include "choimaps/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace choimaps {

void Tolerance::validate() const {
  if (!(psd_tol > 0.0) || !(herm_tol > 0.0) || !(eig_tol > 0.0)) {
    throw std::invalid_argument("Tolerance: all thresholds must be strictly positive");
  }
}

ComplexMatrix::ComplexMatrix(std::size_t dim)
    : m_(Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim))) {}

ComplexMatrix::ComplexMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) {
    throw std::invalid_argument("ComplexMatrix: matrix must be square, got " + std::to_string(m_.rows()) + "x" +
                                std::to_string(m_.cols()));
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  return ComplexMatrix(Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim)));
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& d) {
  ComplexMatrix out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out(i, i) = d[i];
  return out;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> d) {
  return diagonal(std::vector<Complex>(d.begin(), d.end()));
}

ComplexMatrix ComplexMatrix::from_rows(std::size_t dim, const std::vector<Complex>& entries) {
  if (entries.size() != dim * dim) {
    throw std::invalid_argument("ComplexMatrix::from_rows: expected " + std::to_string(dim * dim) + " entries, got " +
                                std::to_string(entries.size()));
  }
  ComplexMatrix out(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) out(i, j) = entries[i * dim + j];
  return out;
}

ComplexMatrix ComplexMatrix::outer(const Eigen::VectorXcd& v) { return ComplexMatrix(v * v.adjoint()); }

double ComplexMatrix::hermiticity_defect() const {
  double worst = 0.0;
  const auto n = m_.rows();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) worst = std::max(worst, std::abs(m_(i, j) - std::conj(m_(j, i))));
  return worst;
}

double ComplexMatrix::max_abs() const { return m_.size() == 0 ? 0.0 : m_.cwiseAbs().maxCoeff(); }

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (dim() != o.dim()) throw std::invalid_argument("ComplexMatrix: dimension mismatch in +");
  m_ += o.m_;
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (dim() != o.dim()) throw std::invalid_argument("ComplexMatrix: dimension mismatch in -");
  m_ -= o.m_;
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  m_ *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("ComplexMatrix: dimension mismatch in *");
  return ComplexMatrix(Eigen::MatrixXcd(a.m_ * b.m_));
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).max_abs(); }

void to_json(nlohmann::json& j, const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<double> re(n * n), im(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      re[r * n + c] = m(r, c).real();
      im[r * n + c] = m(r, c).imag();
    }
  }
  j = nlohmann::json{{"dim", n}, {"re", re}, {"im", im}};
}

void from_json(const nlohmann::json& j, ComplexMatrix& m) {
  const auto n = j.at("dim").get<std::size_t>();
  const auto re = j.at("re").get<std::vector<double>>();
  const auto im = j.at("im").get<std::vector<double>>();
  if (n == 0 || re.size() != n * n || im.size() != n * n) {
    throw std::invalid_argument("matrix JSON: 're' and 'im' must each hold dim*dim entries");
  }
  std::vector<Complex> entries(n * n);
  for (std::size_t k = 0; k < n * n; ++k) entries[k] = {re[k], im[k]};
  m = ComplexMatrix::from_rows(n, entries);
}

}  // namespace choimaps
