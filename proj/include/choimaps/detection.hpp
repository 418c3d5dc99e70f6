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
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "choimaps/maps.hpp"
#include "choimaps/matrix.hpp"
#include "choimaps/states.hpp"

namespace choimaps {

enum class Classification { NptEntangled, PptEntangledDetected, NotDetected };

std::string to_string(Classification c);
Classification classification_from_string(const std::string& s);

/// Per-state, per-map verdict.
///
/// Invariants (established by detect()):
///   PptEntangledDetected => ppt && min_eig_mapped < -psd_tol
///   NptEntangled         => !ppt
///   NotDetected          => min_eig_mapped >= -psd_tol
struct DetectionReport {
  DetectionReport(std::string label, MapParams p) : state_label(std::move(label)), map(p) {}

  std::string state_label;
  MapParams map;
  double min_eig_mapped = 0.0;
  std::optional<double> lambda_analytic;
  bool ppt = false;
  Classification classification = Classification::NotDetected;
  /// min_eig_mapped < -psd_tol, whatever the PPT status.
  bool map_detects = false;
  /// |lambda_analytic| <= 1e-8: the point sits on a strict-inequality edge.
  bool boundary = false;
};

// {"state", "map", "min_eig", "lambda", "ppt", "class", "boundary"}
void to_json(nlohmann::json& j, const DetectionReport& r);
DetectionReport detection_report_from_json(const nlohmann::json& j);

/// Closed-form candidate negative eigenvalue of (I_4 (x) Phi)(rho_{beta,gamma}):
/// (-9 + 3w + (10 - beta) z + x beta + y gamma) / (52 + 4 gamma).
double lambda_formula(const MapParams& p, const RhoFamilyParams& s);

inline constexpr double kBoundaryBand = 1e-8;

DetectionReport detect(const BipartiteState& state, const MapParams& p, const Tolerance& tol = {});

/// Subset of [0, 10]; empty, or one interval with independently open/closed ends.
struct BetaInterval {
  bool empty = true;
  double lo = 0.0;
  double hi = 0.0;
  bool lo_closed = false;
  bool hi_closed = false;

  bool contains(double beta) const;
  std::string to_string() const;
};

/// The beta in [0, 10] for which lambda_formula(p, {beta, gamma}) < 0.
BetaInterval detection_interval_beta(const MapParams& p, double gamma);

enum class Family { RhoBetaGamma, SigmaB, VarrhoB };

std::string to_string(Family f);
Family family_from_string(const std::string& s);

/// Inclusive grid lo, lo+step, ..., up to hi (with 1e-9 relative slack).
/// hi < lo yields no points.
struct GridRange {
  double lo = 0.0;
  double hi = 0.0;
  double step = 1.0;

  static GridRange single(double v) { return {v, v, 1.0}; }
  /// "LO:HI:STEP"
  static GridRange parse(const std::string& text);

  void validate() const;
  std::vector<double> values() const;
};

struct ScanSpec {
  Family family = Family::RhoBetaGamma;
  GridRange beta = GridRange::single(0.0);   // rho-beta-gamma only
  GridRange gamma = GridRange::single(0.0);  // rho-beta-gamma only
  GridRange b = GridRange::single(0.5);      // sigma-b / varrho-b only
};

struct ScanPoint {
  std::vector<double> coords;  // matches ScanResult::axes
  DetectionReport report;
};

struct ScanResult {
  Family family = Family::RhoBetaGamma;
  std::vector<std::string> axes;
  std::vector<ScanPoint> points;
};

/// One report per grid point. For rho-beta-gamma, gamma is the outer loop and
/// beta the inner one. Points may be evaluated on `threads` workers (0 = hardware
/// concurrency); the output order does not depend on it.
ScanResult scan_grid(const ScanSpec& spec, const MapParams& p, const Tolerance& tol = {}, unsigned threads = 0);

struct PositivityConditions {
  bool w_ge_1 = false;
  bool y_ge_1 = false;
  bool xz_ge_1 = false;

  bool all() const { return w_ge_1 && y_ge_1 && xz_ge_1; }
};

PositivityConditions positivity_conditions(const MapParams& p);

struct PositivityVerdict {
  MapParams map;
  std::size_t samples = 0;
  std::size_t adversarial = 0;
  double min_observed = 0.0;
  std::optional<ComplexMatrix> counterexample;
  PositivityConditions conditions;
};

void to_json(nlohmann::json& j, const PositivityVerdict& v);

/// Fixed probe set: every E_ii, and (e_i + e^{i theta} e_j)(e_i + e^{i theta} e_j)^dagger
/// for i < j and theta in {0, pi/2, pi, 3pi/2}. The vectors are not normalised.
std::vector<ComplexMatrix> adversarial_probes();

/// Falsification search for non-positivity of Phi: the adversarial probes first,
/// then `samples` random density matrices (sample k uses seed + k). Records the
/// smallest eigenvalue of Phi(X) seen and the first X with one below -psd_tol.
PositivityVerdict verify_map_positivity(const MapParams& p, std::size_t samples, std::uint64_t seed,
                                        const Tolerance& tol = {}, unsigned threads = 0);

/// The 8x8 matrix (I_2 (x) Phi)(sigma_b) assembled entry by entry from
/// f = w+x+y+z and the four diagonal combinations g, h, i, j.
ComplexMatrix sigma_b_mapped_closed_form(double b, const MapParams& p);

/// True iff (I_2 (x) Phi)(sigma_b) is PSD and so is the image of every member
/// of its 64-element Pauli local-unitary orbit. Requires w >= 1.
bool nondetection_certificate(double b, const MapParams& p, const Tolerance& tol = {});

}  // namespace choimaps
