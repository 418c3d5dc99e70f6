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

#include "choimaps/maps.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace choimaps {

namespace {

void require_4x4(const ComplexMatrix& X, const char* who) {
  if (X.dim() != 4) {
    throw std::invalid_argument(std::string(who) + ": expected a 4x4 matrix, got dim " + std::to_string(X.dim()));
  }
}

// A X A^dagger
ComplexMatrix sandwich(const ComplexMatrix& A, const ComplexMatrix& X) { return A * X * A.adjoint(); }

}  // namespace

MapParams::MapParams(double w, double x, double y, double z) : w_(w), x_(x), y_(y), z_(z) {
  for (double v : {w, x, y, z}) {
    if (!std::isfinite(v) || v < 0.0) {
      throw std::invalid_argument("MapParams: w, x, y, z must be finite and >= 0 (got " + to_string() + ")");
    }
  }
}

MapParams MapParams::parse(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("map parameters: '" + item + "' is not a number");
    }
    // Surrounding blanks are allowed; anything else after the number is not.
    if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument("map parameters: '" + item + "' is not a number");
    values.push_back(v);
  }
  if (values.size() != 4 || (!text.empty() && text.back() == ',')) {
    throw std::invalid_argument("map parameters: expected w,x,y,z, got '" + text + "'");
  }
  return {values[0], values[1], values[2], values[3]};
}

std::string MapParams::to_string() const {
  return format_number(w_) + "," + format_number(x_) + "," + format_number(y_) + "," + format_number(z_);
}

void to_json(nlohmann::json& j, const MapParams& p) {
  j = nlohmann::json{{"w", p.w()}, {"x", p.x()}, {"y", p.y()}, {"z", p.z()}};
}

MapParams map_params_from_json(const nlohmann::json& j) {
  return {j.at("w").get<double>(), j.at("x").get<double>(), j.at("y").get<double>(), j.at("z").get<double>()};
}

const ElementaryOps& ElementaryOps::instance() {
  static const ElementaryOps ops;
  return ops;
}

ElementaryOps::ElementaryOps() {
  const double r = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      e_[i][j] = ComplexMatrix(kDim);
      e_[i][j](i, j) = 1.0;
    }
  }
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = i + 1; j < kDim; ++j) {
      f_[i][j] = (e_[i][i] + e_[j][j]) * Complex(r);
      g_[i][j] = (e_[i][i] - e_[j][j]) * Complex(r);
    }
  }
}

const ComplexMatrix& ElementaryOps::F(std::size_t i, std::size_t j) const {
  if (i >= j || j >= kDim) throw std::out_of_range("ElementaryOps::F: need i < j < 4");
  return f_[i][j];
}

const ComplexMatrix& ElementaryOps::G(std::size_t i, std::size_t j) const {
  if (i >= j || j >= kDim) throw std::out_of_range("ElementaryOps::G: need i < j < 4");
  return g_[i][j];
}

ComplexMatrix apply_map_kraus(const MapParams& p, const ComplexMatrix& X) {
  require_4x4(X, "apply_map_kraus");
  const auto& ops = ElementaryOps::instance();
  using Pair = std::pair<std::size_t, std::size_t>;
  // 0-based versions of (12,23,34,41), (13,31,24,42), (14,43,21,32).
  static constexpr Pair kXPairs[] = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  static constexpr Pair kYPairs[] = {{0, 2}, {2, 0}, {1, 3}, {3, 1}};
  static constexpr Pair kZPairs[] = {{0, 3}, {3, 2}, {1, 0}, {2, 1}};

  ComplexMatrix out(4);
  for (std::size_t i = 0; i < 4; ++i) out += p.w() * sandwich(ops.E(i, i), X);
  for (auto [i, j] : kXPairs) out += p.x() * sandwich(ops.E(i, j), X);
  for (auto [i, j] : kYPairs) out += p.y() * sandwich(ops.E(i, j), X);
  for (auto [i, j] : kZPairs) out += p.z() * sandwich(ops.E(i, j), X);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      out += sandwich(ops.G(i, j), X);
      out -= sandwich(ops.F(i, j), X);
    }
  }
  return out;
}

ComplexMatrix apply_map_closed(const MapParams& p, const ComplexMatrix& X) {
  require_4x4(X, "apply_map_closed");
  ComplexMatrix out(4);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      if (r != c) out(r, c) = -X(r, c);
    }
  }
  for (std::size_t k = 0; k < 4; ++k) {
    out(k, k) = p.w() * X(k, k) + p.x() * X((k + 1) % 4, (k + 1) % 4) + p.y() * X((k + 2) % 4, (k + 2) % 4) +
                p.z() * X((k + 3) % 4, (k + 3) % 4);
  }
  return out;
}

ComplexMatrix extend_map(const MapParams& p, std::size_t dimA, const ComplexMatrix& rho) {
  constexpr std::size_t dimB = 4;
  if (dimA == 0 || rho.dim() != dimA * dimB) {
    throw std::invalid_argument("extend_map: matrix dimension " + std::to_string(rho.dim()) + " is not " +
                                std::to_string(dimA) + "*4");
  }
  ComplexMatrix out(rho.dim());
  ComplexMatrix block(dimB);
  for (std::size_t i = 0; i < dimA; ++i) {
    for (std::size_t j = 0; j < dimA; ++j) {
      for (std::size_t k = 0; k < dimB; ++k)
        for (std::size_t l = 0; l < dimB; ++l) block(k, l) = rho(i * dimB + k, j * dimB + l);
      const ComplexMatrix mapped = apply_map_closed(p, block);
      for (std::size_t k = 0; k < dimB; ++k)
        for (std::size_t l = 0; l < dimB; ++l) out(i * dimB + k, j * dimB + l) = mapped(k, l);
    }
  }
  return out;
}

}  // namespace choimaps
