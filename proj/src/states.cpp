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

#include "choimaps/states.hpp"

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

namespace choimaps {

void RhoFamilyParams::validate() const {
  if (!std::isfinite(beta) || beta < 0.0 || beta > 10.0) {
    throw std::invalid_argument("rho-beta-gamma: beta must lie in [0, 10], got " + format_number(beta));
  }
  if (!std::isfinite(gamma) || gamma < 0.0) {
    throw std::invalid_argument("rho-beta-gamma: gamma must be >= 0, got " + format_number(gamma));
  }
}

void HorodeckiParams::validate() const {
  if (!std::isfinite(b) || b <= 0.0 || b >= 1.0) {
    throw std::invalid_argument("Horodecki state: b must lie in the open interval (0, 1), got " + format_number(b));
  }
}

BipartiteState::BipartiteState(std::size_t dimA, std::size_t dimB, ComplexMatrix matrix, std::string label,
                               std::optional<RhoFamilyParams> rho_params)
    : dimA_(dimA), dimB_(dimB), matrix_(std::move(matrix)), label_(std::move(label)), rho_params_(rho_params) {
  if (dimA_ == 0 || dimB_ == 0 || matrix_.dim() != dimA_ * dimB_) {
    throw std::invalid_argument("BipartiteState '" + label_ + "': matrix dim " + std::to_string(matrix_.dim()) +
                                " != dimA*dimB = " + std::to_string(dimA_ * dimB_));
  }
  const double defect = matrix_.hermiticity_defect();
  if (defect > 1e-12) {
    throw std::invalid_argument("BipartiteState '" + label_ + "': not Hermitian (defect " + format_number(defect) +
                                ")");
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - Complex{1.0, 0.0}) > 1e-12) {
    throw std::invalid_argument("BipartiteState '" + label_ + "': trace " + format_number(tr.real()) + " != 1");
  }
  const double lo = min_eigenvalue(matrix_);
  if (lo < -1e-10) {
    throw std::invalid_argument("BipartiteState '" + label_ + "': not positive semidefinite (min eigenvalue " +
                                format_number(lo) + ")");
  }
}

void to_json(nlohmann::json& j, const BipartiteState& s) {
  to_json(j, s.matrix());
  j["dimA"] = s.dimA();
  j["dimB"] = s.dimB();
  j["label"] = s.label();
}

BipartiteState bipartite_state_from_json(const nlohmann::json& j) {
  ComplexMatrix m;
  from_json(j, m);
  return {j.at("dimA").get<std::size_t>(), j.at("dimB").get<std::size_t>(), std::move(m),
          j.value("label", std::string{})};
}

ComplexMatrix partial_transpose(const BipartiteState& rho, Subsystem which) {
  return partial_transpose(rho.matrix(), rho.dimA(), rho.dimB(), which);
}

ComplexMatrix extend_map(const MapParams& p, const BipartiteState& rho) {
  if (rho.dimB() != 4) {
    throw std::invalid_argument("extend_map: subsystem B must be 4-dimensional, got " + std::to_string(rho.dimB()));
  }
  return extend_map(p, rho.dimA(), rho.matrix());
}

BipartiteState build_rho_beta_gamma(const RhoFamilyParams& p) {
  p.validate();
  constexpr std::size_t d = 4;
  const auto idx = [](std::size_t i, std::size_t j) { return i * d + j; };
  const double norm = 13.0 + p.gamma;

  // sigma_1..sigma_3 are uniform mixtures of |i, i+s> for shifts s = 1, 2, 3.
  const std::array<double, 3> weight = {p.beta, p.gamma, 10.0 - p.beta};
  ComplexMatrix m(d * d);
  for (std::size_t s = 1; s <= 3; ++s) {
    for (std::size_t i = 0; i < d; ++i) {
      const std::size_t k = idx(i, (i + s) % d);
      m(k, k) += weight[s - 1] / (4.0 * norm);
    }
  }
  // sigma_4 = |psi><psi|, |psi> = (|00> + |11> + |22> + |33>) / 2
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(idx(i, i), idx(j, j)) += 3.0 / (4.0 * norm);

  return {d, d, std::move(m),
          "rho-beta-gamma(beta=" + format_number(p.beta) + ",gamma=" + format_number(p.gamma) + ")", p};
}

BipartiteState build_sigma_b(const HorodeckiParams& p) {
  p.validate();
  const double b = p.b;
  const double diag = (1.0 + b) / 2.0;
  const double off = std::sqrt(1.0 - b * b) / 2.0;
  ComplexMatrix m(8);
  for (std::size_t k = 0; k < 4; ++k) m(k, k) = b;
  m(4, 4) = diag;
  m(5, 5) = b;
  m(6, 6) = b;
  m(7, 7) = diag;
  for (auto [r, c] : std::initializer_list<std::pair<std::size_t, std::size_t>>{{0, 5}, {1, 6}, {2, 7}}) {
    m(r, c) = b;
    m(c, r) = b;
  }
  m(4, 7) = off;
  m(7, 4) = off;
  m *= 1.0 / (7.0 * b + 1.0);
  return {2, 4, std::move(m), "sigma-b(b=" + format_number(b) + ")"};
}

BipartiteState build_varrho_b(const HorodeckiParams& p) {
  p.validate();
  const double b = p.b;
  const double diag = (1.0 + b) / 2.0;
  const double off = std::sqrt(1.0 - b * b) / 2.0;
  ComplexMatrix m(8);
  for (std::size_t k : {0, 1, 2, 3, 4, 7}) m(k, k) = b;
  m(5, 5) = diag;
  m(6, 6) = diag;
  m(0, 7) = -b;
  m(7, 0) = -b;
  m(1, 4) = b;
  m(4, 1) = b;
  m(3, 6) = b;
  m(6, 3) = b;
  m(5, 6) = off;
  m(6, 5) = off;
  m *= 1.0 / (7.0 * b + 1.0);
  return {2, 4, std::move(m), "varrho-b(b=" + format_number(b) + ")"};
}

namespace {

const std::array<ComplexMatrix, 4>& paulis() {
  static const std::array<ComplexMatrix, 4> p = [] {
    const Complex i{0.0, 1.0};
    return std::array<ComplexMatrix, 4>{
        ComplexMatrix::identity(2),
        ComplexMatrix::from_rows(2, {0.0, 1.0, 1.0, 0.0}),
        ComplexMatrix::from_rows(2, {0.0, -i, i, 0.0}),
        ComplexMatrix::from_rows(2, {1.0, 0.0, 0.0, -1.0}),
    };
  }();
  return p;
}

}  // namespace

std::vector<ComplexMatrix> pauli_local_unitaries() {
  const auto& p = paulis();
  std::vector<ComplexMatrix> out;
  out.reserve(64);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      for (std::size_t c = 0; c < 4; ++c) out.push_back(tensor(p[a], tensor(p[b], p[c])));
  return out;
}

std::string pauli_cube_label(std::size_t index) {
  if (index >= 64) throw std::out_of_range("pauli_cube_label: index must be < 64");
  static constexpr char kNames[] = {'I', 'X', 'Y', 'Z'};
  return {kNames[index / 16], kNames[(index / 4) % 4], kNames[index % 4]};
}

std::vector<BipartiteState> local_unitary_orbit(const BipartiteState& state, const std::vector<ComplexMatrix>& us) {
  std::vector<BipartiteState> out;
  out.reserve(us.size());
  const bool pauli_cube = us.size() == 64;
  for (std::size_t k = 0; k < us.size(); ++k) {
    const auto& u = us[k];
    if (u.dim() != state.matrix().dim()) {
      throw std::invalid_argument("local_unitary_orbit: unitary dim " + std::to_string(u.dim()) +
                                  " != state dim " + std::to_string(state.matrix().dim()));
    }
    const std::string tag = pauli_cube ? pauli_cube_label(k) : std::to_string(k);
    out.emplace_back(state.dimA(), state.dimB(), u * state.matrix() * u.adjoint(), state.label() + "|U=" + tag);
  }
  return out;
}

ComplexMatrix random_density_matrix(std::size_t dim, std::uint64_t seed) {
  if (dim == 0) throw std::invalid_argument("random_density_matrix: dim must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  const auto n = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXcd g(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(r, c) = {re, im};
    }
  Eigen::MatrixXcd rho = g * g.adjoint();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  rho /= rho.trace().real();
  return ComplexMatrix(std::move(rho));
}

BipartiteState random_product_state(std::size_t dimA, std::size_t dimB, std::uint64_t seed) {
  ComplexMatrix m = tensor(random_density_matrix(dimA, 2 * seed), random_density_matrix(dimB, 2 * seed + 1));
  // Re-normalise: the product of two unit traces can drift by an ulp or so.
  m *= 1.0 / m.trace().real();
  return {dimA, dimB, std::move(m), "product(seed=" + std::to_string(seed) + ")"};
}

}  // namespace choimaps
