# Copyright 2026 The choimaps Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Four-parameter Choi-type maps on M_4: positivity checks and entanglement detection."""

from ._core import (
    MapParams,
    apply_map_closed,
    apply_map_kraus,
    build_rho_beta_gamma,
    build_sigma_b,
    build_varrho_b,
    detect,
    detection_interval_beta,
    eig_hermitian,
    extend_map,
    is_psd,
    lambda_formula,
    min_eigenvalue,
    nondetection_certificate,
    partial_transpose,
    pauli_local_unitaries,
    principal_minors,
    random_density_matrix,
    run_cli,
    sigma_b_mapped_closed_form,
    tensor,
    verify_map_positivity,
)

__all__ = [
    "MapParams",
    "apply_map_closed",
    "apply_map_kraus",
    "build_rho_beta_gamma",
    "build_sigma_b",
    "build_varrho_b",
    "detect",
    "detection_interval_beta",
    "eig_hermitian",
    "extend_map",
    "is_psd",
    "lambda_formula",
    "min_eigenvalue",
    "nondetection_certificate",
    "partial_transpose",
    "pauli_local_unitaries",
    "principal_minors",
    "random_density_matrix",
    "run_cli",
    "sigma_b_mapped_closed_form",
    "tensor",
    "verify_map_positivity",
]
