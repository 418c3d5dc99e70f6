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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "choimaps/detection.hpp"
#include "choimaps/linalg.hpp"
#include "choimaps/maps.hpp"
#include "choimaps/states.hpp"
#include "oracles.hpp"

using namespace choimaps;

namespace {

constexpr double kPsdTol = 1e-10;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

bool ppt(const BipartiteState& s) { return is_psd(partial_transpose(s, Subsystem::B), Tolerance{}); }

const std::vector<MapParams>& four_maps() {
  static const std::vector<MapParams> maps{{2, 1, 0, 0}, {2, 0, 1, 0}, {2, 0, 0, 1}, {2, 1, 1, 1}};
  return maps;
}

std::vector<double> grid(double lo, double hi, double step) {
  std::vector<double> out;
  for (int k = 0; lo + k * step <= hi + 1e-12; ++k) out.push_back(lo + k * step);
  return out;
}

Outcome map_form_equivalence() {
  Outcome o;
  std::mt19937_64 rng(20260101);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  std::vector<ComplexMatrix> inputs;
  for (int k = 0; k < 500; ++k) inputs.push_back(oracle::random_hermitian(4, rng));
  double worst = 0.0;
  for (int m = 0; m < 50; ++m) {
    const MapParams p(u(rng), u(rng), u(rng), u(rng));
    for (const auto& x : inputs) worst = std::max(worst, max_abs_diff(apply_map_kraus(p, x), apply_map_closed(p, x)));
  }
  if (worst > 1e-12) o.fail("max deviation " + num(worst));
  o.detail = "25000 pairs, max |Kraus - closed| = " + num(worst);
  return o;
}

Outcome ppt_region() {
  Outcome o;
  int points = 0;
  for (double gamma : grid(0, 8, 0.5))
    for (double beta : grid(0, 10, 0.25)) {
      const bool expected = beta >= 1.0 && beta <= 9.0 && gamma >= 3.0;
      ++points;
      if (ppt(build_rho_beta_gamma({beta, gamma})) != expected)
        o.fail("mismatch at beta=" + num(beta) + " gamma=" + num(gamma));
    }
  for (double beta : {1.0, 9.0})
    if (!ppt(build_rho_beta_gamma({beta, 3.0}))) o.fail("boundary beta=" + num(beta) + " gamma=3 not PPT");
  if (o.ok) o.detail = std::to_string(points) + " grid points match 1<=beta<=9, gamma>=3";
  return o;
}

Outcome detection_ranges() {
  struct Case {
    const char* name;
    MapParams p;
    std::function<bool(double, double)> expected;
  };
  const std::vector<Case> cases{
      {"a", {2, 1, 0, 0}, [](double b, double) { return b < 3.0; }},
      {"b", {2, 1.5, 0, 0}, [](double b, double) { return b < 2.0; }},
      {"c", {2, 0, 1, 0}, [](double, double g) { return g < 3.0; }},
      {"d", {2, 0, 0, 1}, [](double b, double) { return b > 7.0; }},
      {"e", {2, 0.1, 0, 1}, [](double b, double) { return b > 70.0 / 9.0; }},
  };
  Outcome o;
  double worst = 0.0;
  for (const auto& c : cases)
    for (double gamma : grid(0, 8, 0.5)) {
      const auto iv = detection_interval_beta(c.p, gamma);
      for (double beta : grid(0, 10, 0.25)) {
        const bool expected = c.expected(beta, gamma);
        const std::string where = std::string(c.name) + " beta=" + num(beta) + " gamma=" + num(gamma);
        if (iv.contains(beta) != expected) o.fail("interval mismatch, map " + where);
        const auto r = detect(build_rho_beta_gamma({beta, gamma}), c.p);
        if (r.map_detects != expected) o.fail("numerical mismatch, map " + where);
        const double lambda = *r.lambda_analytic;
        if (lambda < -1e-8) {
          const double gap = std::abs(lambda - r.min_eig_mapped);
          worst = std::max(worst, gap);
          if (gap > 1e-9) o.fail("lambda gap " + num(gap) + ", map " + where);
        }
      }
    }
  if (o.ok) o.detail = "maps a-e on 41x17 grid, max |lambda - min_eig| = " + num(worst);
  return o;
}

Outcome bound_entanglement_exhibit() {
  Outcome o;
  const auto rho = build_rho_beta_gamma({2, 4});
  const double expected = (2.0 - 3.0) / (52.0 + 4.0 * 4.0);
  const auto r = detect(rho, MapParams(2, 1, 0, 0));
  if (!ppt(rho)) o.fail("rho(2,4) is not PPT");
  if (r.classification != Classification::PptEntangledDetected) o.fail("not classified PPT_ENTANGLED_DETECTED");
  if (std::abs(r.min_eig_mapped - expected) > 1e-9) o.fail("min eigenvalue " + num(r.min_eig_mapped));
  if (std::abs(expected + 1.0 / 68.0) > 1e-15) o.fail("scalar cross-check");
  if (o.ok) o.detail = "PPT, min eigenvalue " + format_number(r.min_eig_mapped) + " vs -1/68";
  return o;
}

Outcome positivity() {
  Outcome o;
  double floor = std::numeric_limits<double>::infinity();
  for (const MapParams& p : {MapParams(2, 1, 0, 0), MapParams(2, 0, 1, 0), MapParams(2, 0, 0, 1),
                             MapParams(2, 1.5, 0, 0), MapParams(2, 1, 1, 1)}) {
    const auto v = verify_map_positivity(p, 10000, 1);
    floor = std::min(floor, v.min_observed);
    if (v.counterexample || v.min_observed < -kPsdTol) o.fail("Phi[" + p.to_string() + "] min " + num(v.min_observed));
  }
  const MapParams zero(0, 0, 0, 0);
  double zero_min = std::numeric_limits<double>::infinity();
  for (const auto& x : adversarial_probes()) zero_min = std::min(zero_min, min_eigenvalue(apply_map_closed(zero, x)));
  if (zero_min > -1.0 + 1e-10) o.fail("Phi[0,0,0,0] adversarial min " + num(zero_min));
  if (!verify_map_positivity(zero, 10000, 1).counterexample) o.fail("Phi[0,0,0,0] not flagged");
  if (o.ok) o.detail = "5 maps min observed " + num(floor) + "; Phi[0,0,0,0] adversarial min " + num(zero_min);
  return o;
}

Outcome non_detection() {
  Outcome o;
  double worst_diff = 0.0, lowest = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= 9; ++k) {
    const double b = 0.1 * k;
    for (const auto& p : four_maps()) {
      const std::string where = "b=" + num(b) + " Phi[" + p.to_string() + "]";
      const auto mapped = extend_map(p, build_sigma_b({b}));
      const double lo = min_eigenvalue(mapped);
      lowest = std::min(lowest, lo);
      if (lo < -kPsdTol) o.fail("not PSD at " + where);
      const double diff = max_abs_diff(mapped, sigma_b_mapped_closed_form(b, p));
      worst_diff = std::max(worst_diff, diff);
      if (diff > 1e-13) o.fail("closed form off by " + num(diff) + " at " + where);
      for (std::size_t r = 0; r < 8; ++r) {
        double off = 0.0;
        for (std::size_t c = 0; c < 8; ++c)
          if (c != r) off = std::max(off, std::abs(mapped(r, c)));
        if (!(mapped(r, r).real() > off)) o.fail("row " + std::to_string(r) + " not dominant at " + where);
      }
    }
  }
  if (o.ok) o.detail = "36 (b, map) pairs, min eigenvalue " + num(lowest) + ", closed-form gap " + num(worst_diff);
  return o;
}

Outcome orbit_sweep() {
  Outcome o;
  const auto unitaries = pauli_local_unitaries();
  double lowest = std::numeric_limits<double>::infinity();
  int checks = 0;
  for (const auto& seed_state : {build_sigma_b({0.5}), build_varrho_b({0.5})})
    for (const auto& member : local_unitary_orbit(seed_state, unitaries)) {
      if (!ppt(member)) o.fail(member.label() + " not PPT");
      for (const auto& p : four_maps()) {
        const double lo = min_eigenvalue(extend_map(p, member));
        lowest = std::min(lowest, lo);
        ++checks;
        if (lo < -kPsdTol) o.fail(member.label() + " detected by Phi[" + p.to_string() + "]");
      }
    }
  if (o.ok) o.detail = std::to_string(checks) + " mapped orbit members, min eigenvalue " + num(lowest);
  return o;
}

Outcome separable_soundness() {
  Outcome o;
  double lowest = std::numeric_limits<double>::infinity();
  for (std::size_t dimA : {2u, 4u})
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const auto s = random_product_state(dimA, 4, 1000 + seed);
      for (const auto& p : four_maps()) {
        const auto r = detect(s, p);
        lowest = std::min(lowest, r.min_eig_mapped);
        if (r.map_detects) o.fail(s.label() + " detected by Phi[" + p.to_string() + "]");
      }
    }
  if (o.ok) o.detail = "400 product states x 4 maps, min eigenvalue " + num(lowest);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"map-form equivalence", map_form_equivalence},
      {"PPT region of rho(beta, gamma)", ppt_region},
      {"detection ranges of maps a-e", detection_ranges},
      {"bound entangled rho(2, 4) detected at -1/68", bound_entanglement_exhibit},
      {"positivity of the named maps", positivity},
      {"Horodecki sigma_b not detected", non_detection},
      {"Pauli local-unitary orbit sweep", orbit_sweep},
      {"separable soundness", separable_soundness},
  };
  int failures = 0;
  int n = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failures += !o.ok;
    std::printf("[%s] criterion %d: %s (%s)\n", o.ok ? "PASS" : "FAIL", ++n, c.title, o.detail.c_str());
  }
  std::printf("%d/%d criteria passed\n", n - failures, n);
  return failures == 0 ? 0 : 1;
}
