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

#include "choimaps/detection.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "parallel.hpp"

namespace choimaps {

namespace {

// Round-trips through "%.12g" so serialised reals carry 12 significant digits.
double round12(double v) { return std::isfinite(v) ? std::stod(format_number(v)) : v; }

}  // namespace

std::string to_string(Classification c) {
  switch (c) {
    case Classification::NptEntangled:
      return "NPT_ENTANGLED";
    case Classification::PptEntangledDetected:
      return "PPT_ENTANGLED_DETECTED";
    case Classification::NotDetected:
      return "NOT_DETECTED";
  }
  return "UNKNOWN";
}

Classification classification_from_string(const std::string& s) {
  if (s == "NPT_ENTANGLED") return Classification::NptEntangled;
  if (s == "PPT_ENTANGLED_DETECTED") return Classification::PptEntangledDetected;
  if (s == "NOT_DETECTED") return Classification::NotDetected;
  throw std::invalid_argument("unknown classification '" + s + "'");
}

void to_json(nlohmann::json& j, const DetectionReport& r) {
  j = nlohmann::json{{"state", r.state_label},
                     {"map", r.map},
                     {"min_eig", round12(r.min_eig_mapped)},
                     {"lambda", nullptr},
                     {"ppt", r.ppt},
                     {"class", to_string(r.classification)},
                     {"boundary", r.boundary}};
  if (r.lambda_analytic) j["lambda"] = round12(*r.lambda_analytic);
}

DetectionReport detection_report_from_json(const nlohmann::json& j) {
  DetectionReport r{j.at("state").get<std::string>(), map_params_from_json(j.at("map"))};
  r.min_eig_mapped = j.at("min_eig").get<double>();
  if (!j.at("lambda").is_null()) r.lambda_analytic = j.at("lambda").get<double>();
  r.ppt = j.at("ppt").get<bool>();
  r.classification = classification_from_string(j.at("class").get<std::string>());
  r.boundary = j.value("boundary", false);
  return r;
}

double lambda_formula(const MapParams& p, const RhoFamilyParams& s) {
  return (-9.0 + 3.0 * p.w() + (10.0 - s.beta) * p.z() + p.x() * s.beta + p.y() * s.gamma) / (52.0 + 4.0 * s.gamma);
}

DetectionReport detect(const BipartiteState& state, const MapParams& p, const Tolerance& tol) {
  tol.validate();
  if (state.dimB() != 4) {
    throw std::invalid_argument("detect: subsystem B of '" + state.label() + "' must be 4-dimensional");
  }
  DetectionReport r{state.label(), p};
  r.ppt = is_psd(partial_transpose(state, Subsystem::B), tol);
  r.min_eig_mapped = min_eigenvalue(extend_map(p, state), tol);
  r.map_detects = r.min_eig_mapped < -tol.psd_tol;
  if (state.rho_params()) {
    r.lambda_analytic = lambda_formula(p, *state.rho_params());
    r.boundary = std::abs(*r.lambda_analytic) <= kBoundaryBand;
  }
  if (!r.ppt) {
    r.classification = Classification::NptEntangled;
  } else if (r.map_detects) {
    r.classification = Classification::PptEntangledDetected;
  } else {
    r.classification = Classification::NotDetected;
  }
  return r;
}

bool BetaInterval::contains(double beta) const {
  if (empty) return false;
  const bool above = lo_closed ? beta >= lo : beta > lo;
  const bool below = hi_closed ? beta <= hi : beta < hi;
  return above && below;
}

std::string BetaInterval::to_string() const {
  if (empty) return "empty";
  return std::string(lo_closed ? "[" : "(") + format_number(lo) + ", " + format_number(hi) + (hi_closed ? "]" : ")");
}

BetaInterval detection_interval_beta(const MapParams& p, double gamma) {
  // lambda < 0  <=>  c0 + c1 * beta < 0 (the denominator is positive).
  const double c0 = -9.0 + 3.0 * p.w() + 10.0 * p.z() + p.y() * gamma;
  const double c1 = p.x() - p.z();
  const BetaInterval all{false, 0.0, 10.0, true, true};
  const BetaInterval none{};
  if (c1 == 0.0) return c0 < 0.0 ? all : none;
  const double t = -c0 / c1;
  if (c1 > 0.0) {
    if (t <= 0.0) return none;
    if (t > 10.0) return all;
    return {false, 0.0, t, true, false};
  }
  if (t >= 10.0) return none;
  if (t < 0.0) return all;
  return {false, t, 10.0, false, true};
}

std::string to_string(Family f) {
  switch (f) {
    case Family::RhoBetaGamma:
      return "rho-beta-gamma";
    case Family::SigmaB:
      return "sigma-b";
    case Family::VarrhoB:
      return "varrho-b";
  }
  return "unknown";
}

Family family_from_string(const std::string& s) {
  if (s == "rho-beta-gamma") return Family::RhoBetaGamma;
  if (s == "sigma-b") return Family::SigmaB;
  if (s == "varrho-b") return Family::VarrhoB;
  throw std::invalid_argument("unknown state family '" + s + "' (expected rho-beta-gamma, sigma-b or varrho-b)");
}

GridRange GridRange::parse(const std::string& text) {
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? std::string::npos : text.find(':', first + 1);
  if (second == std::string::npos || text.find(':', second + 1) != std::string::npos) {
    throw std::invalid_argument("range '" + text + "': expected LO:HI:STEP");
  }
  const auto number = [&](const std::string& part) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (part.empty() || used != part.size()) {
      throw std::invalid_argument("range '" + text + "': '" + part + "' is not a number");
    }
    return v;
  };
  GridRange r{number(text.substr(0, first)), number(text.substr(first + 1, second - first - 1)),
              number(text.substr(second + 1))};
  r.validate();
  return r;
}

void GridRange::validate() const {
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw std::invalid_argument("grid range bounds must be finite");
  if (!std::isfinite(step) || step <= 0.0) throw std::invalid_argument("grid step must be > 0");
}

std::vector<double> GridRange::values() const {
  validate();
  std::vector<double> out;
  if (hi < lo) return out;
  const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(std::min(hi, lo + static_cast<double>(k) * step));
  return out;
}

ScanResult scan_grid(const ScanSpec& spec, const MapParams& p, const Tolerance& tol, unsigned threads) {
  tol.validate();
  ScanResult result{spec.family, {}, {}};
  std::vector<std::vector<double>> coords;
  if (spec.family == Family::RhoBetaGamma) {
    result.axes = {"beta", "gamma"};
    const auto betas = spec.beta.values();
    const auto gammas = spec.gamma.values();
    for (double g : gammas)
      for (double b : betas) {
        RhoFamilyParams{b, g}.validate();
        coords.push_back({b, g});
      }
  } else {
    result.axes = {"b"};
    for (double b : spec.b.values()) {
      HorodeckiParams{b}.validate();
      coords.push_back({b});
    }
  }

  std::vector<std::optional<DetectionReport>> reports(coords.size());
  detail::parallel_for(coords.size(), threads, [&](std::size_t k) {
    const auto& c = coords[k];
    switch (spec.family) {
      case Family::RhoBetaGamma:
        reports[k] = detect(build_rho_beta_gamma({c[0], c[1]}), p, tol);
        break;
      case Family::SigmaB:
        reports[k] = detect(build_sigma_b({c[0]}), p, tol);
        break;
      case Family::VarrhoB:
        reports[k] = detect(build_varrho_b({c[0]}), p, tol);
        break;
    }
  });

  result.points.reserve(coords.size());
  for (std::size_t k = 0; k < coords.size(); ++k) result.points.push_back({std::move(coords[k]), *reports[k]});
  return result;
}

PositivityConditions positivity_conditions(const MapParams& p) {
  return {p.w() >= 1.0, p.y() >= 1.0, p.x() * p.z() >= 1.0};
}

void to_json(nlohmann::json& j, const PositivityVerdict& v) {
  j = nlohmann::json{{"map", v.map},
                     {"samples", v.samples},
                     {"adversarial", v.adversarial},
                     {"min_observed", round12(v.min_observed)},
                     {"counterexample", nullptr},
                     {"positive_on_probes", !v.counterexample.has_value()},
                     {"conditions",
                      {{"w_ge_1", v.conditions.w_ge_1}, {"y_ge_1", v.conditions.y_ge_1}, {"xz_ge_1", v.conditions.xz_ge_1}}}};
  if (v.counterexample) j["counterexample"] = *v.counterexample;
}

std::vector<ComplexMatrix> adversarial_probes() {
  std::vector<ComplexMatrix> probes;
  for (std::size_t i = 0; i < 4; ++i) {
    ComplexMatrix e(4);
    e(i, i) = 1.0;
    probes.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      for (int q = 0; q < 4; ++q) {
        const double theta = q * std::numbers::pi / 2.0;
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
        v(static_cast<Eigen::Index>(i)) = 1.0;
        v(static_cast<Eigen::Index>(j)) = std::polar(1.0, theta);
        probes.push_back(ComplexMatrix::outer(v));
      }
    }
  }
  return probes;
}

PositivityVerdict verify_map_positivity(const MapParams& p, std::size_t samples, std::uint64_t seed,
                                        const Tolerance& tol, unsigned threads) {
  tol.validate();
  if (samples == 0) throw std::invalid_argument("verify_map_positivity: samples must be >= 1");
  const auto probes = adversarial_probes();
  const std::size_t total = probes.size() + samples;
  const auto input = [&](std::size_t k) {
    return k < probes.size() ? probes[k] : random_density_matrix(4, seed + (k - probes.size()));
  };

  std::vector<double> mins(total);
  detail::parallel_for(total, threads, [&](std::size_t k) { mins[k] = min_eigenvalue(apply_map_closed(p, input(k)), tol); });

  PositivityVerdict v{p, samples, probes.size(), mins.front(), std::nullopt, positivity_conditions(p)};
  for (std::size_t k = 0; k < total; ++k) {
    v.min_observed = std::min(v.min_observed, mins[k]);
    if (!v.counterexample && mins[k] < -tol.psd_tol) v.counterexample = input(k);
  }
  return v;
}

ComplexMatrix sigma_b_mapped_closed_form(double b, const MapParams& p) {
  HorodeckiParams{b}.validate();
  const double w = p.w(), x = p.x(), y = p.y(), z = p.z();
  const double f = w + x + y + z;
  const double g = (w + z + b * (w + 2 * x + 2 * y + z)) / 2;
  const double h = (z + y + b * (2 * w + 2 * x + y + z)) / 2;
  const double i = (x + y + b * (2 * w + x + y + 2 * z)) / 2;
  const double j = (w + x + b * (w + x + 2 * y + 2 * z)) / 2;
  const double s = std::sqrt(1 - b * b) / 2;

  ComplexMatrix m(8);
  for (std::size_t k = 0; k < 4; ++k) m(k, k) = b * f;
  m(4, 4) = g;
  m(5, 5) = h;
  m(6, 6) = i;
  m(7, 7) = j;
  for (std::size_t k = 0; k < 3; ++k) {
    m(k, k + 5) = -b;
    m(k + 5, k) = -b;
  }
  m(4, 7) = -s;
  m(7, 4) = -s;
  m *= 1 / (7 * b + 1);
  return m;
}

bool nondetection_certificate(double b, const MapParams& p, const Tolerance& tol) {
  if (p.w() < 1.0) throw std::invalid_argument("nondetection_certificate: requires w >= 1");
  tol.validate();
  const auto sigma = build_sigma_b({b});
  if (!is_psd(extend_map(p, sigma), tol)) return false;
  for (const auto& member : local_unitary_orbit(sigma, pauli_local_unitaries())) {
    if (!is_psd(extend_map(p, member), tol)) return false;
  }
  return true;
}

}  // namespace choimaps
