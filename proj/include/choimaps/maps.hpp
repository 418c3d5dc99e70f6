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

#include <array>
#include <cstddef>
#include <string>

#include <nlohmann/json.hpp>

#include "choimaps/matrix.hpp"

namespace choimaps {

/// Parameters (w, x, y, z) of the four-parameter Choi-type map on M_4. All entries are
/// nonnegative and finite; the constructor enforces it.
class MapParams {
 public:
  MapParams(double w, double x, double y, double z);

  double w() const { return w_; }
  double x() const { return x_; }
  double y() const { return y_; }
  double z() const { return z_; }
  double sum() const { return w_ + x_ + y_ + z_; }

  /// Parses "w,x,y,z" (exactly four comma-separated decimals).
  static MapParams parse(const std::string& text);
  std::string to_string() const;

  friend bool operator==(const MapParams&, const MapParams&) = default;

 private:
  double w_, x_, y_, z_;
};

void to_json(nlohmann::json& j, const MapParams& p);
MapParams map_params_from_json(const nlohmann::json& j);

/// Elementary operators on C^4 (0-based indices): E(i,j) = |e_i><e_j|,
/// F(i,j) = (E_ii + E_jj)/sqrt2 and G(i,j) = (E_ii - E_jj)/sqrt2 for i < j.
class ElementaryOps {
 public:
  static constexpr std::size_t kDim = 4;

  static const ElementaryOps& instance();

  const ComplexMatrix& E(std::size_t i, std::size_t j) const { return e_.at(i).at(j); }
  const ComplexMatrix& F(std::size_t i, std::size_t j) const;
  const ComplexMatrix& G(std::size_t i, std::size_t j) const;

 private:
  ElementaryOps();
  std::array<std::array<ComplexMatrix, kDim>, kDim> e_;
  std::array<std::array<ComplexMatrix, kDim>, kDim> f_;
  std::array<std::array<ComplexMatrix, kDim>, kDim> g_;
};

/// Operator-sum evaluation: w sum_i E_ii X E_ii^dag + x (E_12, E_23, E_34, E_41 terms)
/// + y (E_13, E_31, E_24, E_42) + z (E_14, E_43, E_21, E_32)
/// + sum_{i<j} G_ij X G_ij^dag - sum_{i<j} F_ij X F_ij^dag.
/// Kept as an independent cross-check of apply_map_closed.
ComplexMatrix apply_map_kraus(const MapParams& p, const ComplexMatrix& X);

/// Closed form: off-diagonals negated, diagonal
///   out_kk = w X_kk + x X_{k+1,k+1} + y X_{k+2,k+2} + z X_{k+3,k+3}  (indices mod 4).
ComplexMatrix apply_map_closed(const MapParams& p, const ComplexMatrix& X);

/// (I_dimA (x) Phi) applied to a dimA*4 square operator, block by block.
ComplexMatrix extend_map(const MapParams& p, std::size_t dimA, const ComplexMatrix& rho);

}  // namespace choimaps
