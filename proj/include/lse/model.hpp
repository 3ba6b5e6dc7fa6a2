// Copyright 2026 The LSE Authors
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

// model.hpp — Single-particle operators of the two monitored-chain Lindbladians
//
// All matrices are L x L in the site basis. Entries are assembled from exact
// literals (t/4, gamma/4, 1/2, i/2), so Hermitian outputs are bitwise
// symmetric and downstream conditioning is not polluted by construction
// rounding.

#pragma once

#include <vector>

#include "lse/types.hpp"

namespace lse {

// Nearest-neighbor hopping Hamiltonian, weight t/4 per bond. PBC adds the
// wrap-around bond. Exactly Hermitian.
Matrix build_hamiltonian(const ModelSpec& spec);

// The two-site measurement mode (|i> - i|i+1>)/sqrt(2) on bond b (0-based).
Vector mode_vector(int bond, const ModelSpec& spec);

// One jump operator per bond: L-1 matrices under OBC, L under PBC.
// With feedback: L_b = (n_b - n_{b+1})/2 + i(c+_b c_{b+1} + c+_{b+1} c_b)/2.
// Without:       L_b = (n_b + n_{b+1})/2 + i(c+_b c_{b+1} - c+_{b+1} c_b)/2,
// a rank-1 Hermitian projector. In both cases L+_b L_b equals the projector.
std::vector<Matrix> build_jump_operators(const ModelSpec& spec);

// H_eff = H - i(gamma/2) sum_b L+_b L_b: asymmetric hopping (t+gamma)/4 forward
// and (t-gamma)/4 backward plus -i(gamma/4)(n_i + n_{i+1}) per bond, so edge
// sites lose half their dissipation under OBC.
Matrix build_effective_hamiltonian(const ModelSpec& spec);

// Hatano-Nelson localization ratio r = sqrt(|t+gamma| / |t-gamma|). OBC right
// eigenvectors of H_eff decay roughly like r^(-i). Infinite at gamma == t.
double hatano_nelson_ratio(const ModelSpec& spec);

// Bloch state |k> = L^(-1/2) sum_j exp(-i k j)|j>, k = 2 pi m / L.
Vector bloch_state(double k, int sites);

// Dispersion of H_eff under PBC: E(k) = (t cos k - i gamma sin k)/2 - i gamma/2.
Complex heff_dispersion(double k, const ModelSpec& spec);

}  // namespace lse
