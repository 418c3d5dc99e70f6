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

#include "choimaps/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace choimaps {

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  ComplexMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, std::size_t dimA, std::size_t dimB, Subsystem which) {
  if (dimA == 0 || dimB == 0 || m.dim() != dimA * dimB) {
    throw std::invalid_argument("partial_transpose: matrix dimension " + std::to_string(m.dim()) + " != " +
                                std::to_string(dimA) + "*" + std::to_string(dimB));
  }
  ComplexMatrix out(m.dim());
  for (std::size_t i = 0; i < dimA; ++i)
    for (std::size_t j = 0; j < dimA; ++j)
      for (std::size_t k = 0; k < dimB; ++k)
        for (std::size_t l = 0; l < dimB; ++l) {
          const Complex v = m(i * dimB + k, j * dimB + l);
          if (which == Subsystem::B) {
            out(i * dimB + l, j * dimB + k) = v;
          } else {
            out(j * dimB + k, i * dimB + l) = v;
          }
        }
  return out;
}

HermitianEigen eig_hermitian_decompose(const ComplexMatrix& m, const Tolerance& tol) {
  const double defect = m.hermiticity_defect();
  if (defect > tol.herm_tol) {
    throw std::invalid_argument("eig_hermitian: matrix is not Hermitian (defect " + std::to_string(defect) + ")");
  }
  if (m.dim() == 0) return {{}, ComplexMatrix()};
  // Solve on the exactly Hermitian part so sub-tolerance asymmetry cannot leak in.
  const Eigen::MatrixXcd h = 0.5 * (m.eigen() + m.eigen().adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eig_hermitian: eigensolver did not converge");
  const auto& ev = solver.eigenvalues();
  // Eigen already sorts ascending.
  return {std::vector<double>(ev.data(), ev.data() + ev.size()), ComplexMatrix(solver.eigenvectors())};
}

std::vector<double> eig_hermitian(const ComplexMatrix& m, const Tolerance& tol) {
  return eig_hermitian_decompose(m, tol).values;
}

double min_eigenvalue(const ComplexMatrix& m, const Tolerance& tol) {
  const auto values = eig_hermitian(m, tol);
  if (values.empty()) throw std::invalid_argument("min_eigenvalue: empty matrix");
  return values.front();
}

bool is_psd(const ComplexMatrix& m, const Tolerance& tol) { return min_eigenvalue(m, tol) >= -tol.psd_tol; }

Complex determinant(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  Eigen::MatrixXcd a = m.eigen();
  Complex det{1.0, 0.0};
  for (std::size_t col = 0; col < n; ++col) {
    const auto c = static_cast<Eigen::Index>(col);
    Eigen::Index pivot = c;
    double best = std::abs(a(c, c));
    for (Eigen::Index r = c + 1; r < static_cast<Eigen::Index>(n); ++r) {
      if (std::abs(a(r, c)) > best) {
        best = std::abs(a(r, c));
        pivot = r;
      }
    }
    if (best == 0.0) return {0.0, 0.0};
    if (pivot != c) {
      a.row(pivot).swap(a.row(c));
      det = -det;
    }
    det *= a(c, c);
    for (Eigen::Index r = c + 1; r < static_cast<Eigen::Index>(n); ++r) {
      const Complex factor = a(r, c) / a(c, c);
      a.row(r).tail(n - col) -= factor * a.row(c).tail(n - col);
    }
  }
  return det;
}

std::vector<PrincipalMinor> principal_minors(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  if (n > 16) throw std::invalid_argument("principal_minors: dim > 16 not supported");
  std::vector<PrincipalMinor> out;
  out.reserve((std::size_t{1} << n) - 1);
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    PrincipalMinor pm;
    for (std::size_t k = 0; k < n; ++k)
      if (mask & (std::size_t{1} << k)) pm.indices.push_back(k);
    ComplexMatrix sub(pm.indices.size());
    for (std::size_t r = 0; r < pm.indices.size(); ++r)
      for (std::size_t c = 0; c < pm.indices.size(); ++c) sub(r, c) = m(pm.indices[r], pm.indices[c]);
    const Complex d = determinant(sub);
    pm.value = d.real();
    pm.imag_residue = std::abs(d.imag());
    out.push_back(std::move(pm));
  }
  return out;
}

}  // namespace choimaps
