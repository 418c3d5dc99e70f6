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

#include <cstddef>
#include <vector>

#include "choimaps/matrix.hpp"

namespace choimaps {

enum class Subsystem { A, B };

/// Kronecker product; entry (i*b.dim+k, j*b.dim+l) = a(i,j) * b(k,l).
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Partial transpose of an operator on C^dimA (x) C^dimB, basis index i*dimB + k.
/// Subsystem::B transposes every dimB x dimB block in place; Subsystem::A
/// swaps block (i,j) with block (j,i) and leaves the blocks themselves alone.
ComplexMatrix partial_transpose(const ComplexMatrix& m, std::size_t dimA, std::size_t dimB, Subsystem which);

struct HermitianEigen {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // columns are the matching eigenvectors
};

/// Eigenvalues in ascending order. Throws std::invalid_argument when m is not
/// Hermitian within tol.herm_tol.
std::vector<double> eig_hermitian(const ComplexMatrix& m, const Tolerance& tol = {});
HermitianEigen eig_hermitian_decompose(const ComplexMatrix& m, const Tolerance& tol = {});

double min_eigenvalue(const ComplexMatrix& m, const Tolerance& tol = {});

/// min_eigenvalue(m) >= -tol.psd_tol
bool is_psd(const ComplexMatrix& m, const Tolerance& tol = {});

/// Determinant by LU factorisation with partial pivoting.
Complex determinant(const ComplexMatrix& m);

struct PrincipalMinor {
  std::vector<std::size_t> indices;  // 0-based, ascending
  double value = 0.0;
  double imag_residue = 0.0;
};

/// All 2^dim - 1 nonempty principal minors, ordered by subset bitmask
/// (bit k set <=> index k kept). Supports dim <= 16.
std::vector<PrincipalMinor> principal_minors(const ComplexMatrix& m);

}  // namespace choimaps
