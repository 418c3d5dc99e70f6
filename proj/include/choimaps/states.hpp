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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "choimaps/linalg.hpp"
#include "choimaps/maps.hpp"
#include "choimaps/matrix.hpp"

namespace choimaps {

/// Parameters of the 4x4 family rho_{beta,gamma}: 0 <= beta <= 10, gamma >= 0.
struct RhoFamilyParams {
  double beta = 0.0;
  double gamma = 0.0;

  void validate() const;
};

/// Parameter of the 2x4 Horodecki family: 0 < b < 1.
struct HorodeckiParams {
  double b = 0.5;

  void validate() const;
};

/// Density matrix on C^dimA (x) C^dimB, basis index i*dimB + k.
/// Construction checks Hermiticity (1e-12), unit trace (1e-12) and
/// positivity (min eigenvalue >= -1e-10); violations throw std::invalid_argument.
class BipartiteState {
 public:
  BipartiteState(std::size_t dimA, std::size_t dimB, ComplexMatrix matrix, std::string label,
                 std::optional<RhoFamilyParams> rho_params = std::nullopt);

  std::size_t dimA() const { return dimA_; }
  std::size_t dimB() const { return dimB_; }
  const ComplexMatrix& matrix() const { return matrix_; }
  const std::string& label() const { return label_; }
  /// Set for members of the rho_{beta,gamma} family (enables the analytic eigenvalue).
  const std::optional<RhoFamilyParams>& rho_params() const { return rho_params_; }

 private:
  std::size_t dimA_, dimB_;
  ComplexMatrix matrix_;
  std::string label_;
  std::optional<RhoFamilyParams> rho_params_;
};

/// Matrix JSON plus {"dimA", "dimB", "label"}.
void to_json(nlohmann::json& j, const BipartiteState& s);
BipartiteState bipartite_state_from_json(const nlohmann::json& j);

ComplexMatrix partial_transpose(const BipartiteState& rho, Subsystem which);

/// (I_dimA (x) Phi)(rho); rho.dimB() must be 4.
ComplexMatrix extend_map(const MapParams& p, const BipartiteState& rho);

BipartiteState build_rho_beta_gamma(const RhoFamilyParams& p);
BipartiteState build_sigma_b(const HorodeckiParams& p);
BipartiteState build_varrho_b(const HorodeckiParams& p);

/// The 64 operators P_a (x) P_b (x) P_c, a,b,c in {I, X, Y, Z}, ordered with a
/// slowest. P_a acts on subsystem A (qubit), P_b (x) P_c on subsystem B.
std::vector<ComplexMatrix> pauli_local_unitaries();
/// "IXZ"-style name of entry `index` of pauli_local_unitaries().
std::string pauli_cube_label(std::size_t index);

/// U rho U^dagger for every U in `us`.
std::vector<BipartiteState> local_unitary_orbit(const BipartiteState& state, const std::vector<ComplexMatrix>& us);

/// G G^dagger / tr(G G^dagger), G with iid standard complex Gaussian entries
/// drawn from a generator seeded with `seed`.
ComplexMatrix random_density_matrix(std::size_t dim, std::uint64_t seed);

/// rho_A (x) rho_B with both factors from random_density_matrix (seeds 2*seed, 2*seed+1).
BipartiteState random_product_state(std::size_t dimA, std::size_t dimB, std::uint64_t seed);

}  // namespace choimaps
