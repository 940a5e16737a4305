// Copyright 2026 The chargeq Authors
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

#ifndef CHARGEQ_NOISE_HPP
#define CHARGEQ_NOISE_HPP

#include <cstdint>
#include <vector>

namespace chargeq {

enum class NoiseScheme {
    kGaussHermite,  // deterministic quadrature, node count per axis
    kMonteCarlo,    // seeded sampling, used as an independent cross-check
};

/// Quasistatic Gaussian detuning noise, one standard deviation per qubit.
struct NoiseModel {
    double sigma_eps_left_uev = 0.0;
    double sigma_eps_right_uev = 0.0;
    NoiseScheme scheme = NoiseScheme::kGaussHermite;
    int nodes_per_axis = 15;  // odd, >= 1, so the zero-noise point is sampled
    int mc_samples = 10000;
    std::uint64_t seed = 1;
};

void validate(const NoiseModel& noise);

/// One evaluation point of the noise average: detuning offsets in GHz and a
/// weight. Weights over a node set sum to 1.
struct NoiseNode {
    double d_eps_left_ghz = 0.0;
    double d_eps_right_ghz = 0.0;
    double weight = 1.0;
};

/// Deterministic node set for the requested scheme. With two_axes the left
/// and right offsets form a tensor grid (quadrature) or joint samples (MC);
/// otherwise only the left offset field is populated. A zero sigma collapses
/// its axis to the single zero-offset node.
std::vector<NoiseNode> make_noise_nodes(const NoiseModel& noise, bool two_axes);

/// Gauss-Hermite rule adapted to averages over a standard normal variable:
/// E[f(x)] ~ sum_i weights[i] * f(nodes[i]), weights normalized to sum 1,
/// nodes in ascending order with exact symmetry (and an exact zero node for
/// odd n).
struct GaussHermiteRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussHermiteRule gauss_hermite(int n);

}  // namespace chargeq

#endif
