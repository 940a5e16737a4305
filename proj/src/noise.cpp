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

#include "chargeq/noise.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "chargeq/constants.hpp"
#include "chargeq/errors.hpp"

namespace chargeq {

void validate(const NoiseModel& noise) {
    if (noise.sigma_eps_left_uev < 0 || noise.sigma_eps_right_uev < 0) {
        throw InvalidParameterError("noise sigmas must be >= 0");
    }
    if (!std::isfinite(noise.sigma_eps_left_uev) || !std::isfinite(noise.sigma_eps_right_uev)) {
        throw InvalidParameterError("noise sigmas must be finite");
    }
    if (noise.nodes_per_axis < 1 || noise.nodes_per_axis % 2 == 0) {
        throw InvalidParameterError("nodes_per_axis must be odd and >= 1");
    }
    if (noise.scheme == NoiseScheme::kMonteCarlo && noise.mc_samples < 1) {
        throw InvalidParameterError("mc_samples must be >= 1");
    }
}

GaussHermiteRule gauss_hermite(int n) {
    if (n < 1) {
        throw InvalidParameterError("gauss_hermite needs n >= 1");
    }
    GaussHermiteRule rule;
    if (n == 1) {
        rule.nodes = {0.0};
        rule.weights = {1.0};
        return rule;
    }
    // Golub-Welsch on the Hermite Jacobi matrix; off-diagonals sqrt(k/2).
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        const double b = std::sqrt(0.5 * k);
        jacobi(k, k - 1) = b;
        jacobi(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        // Physicists' nodes x_i scale to sqrt(2) x_i for a unit normal.
        rule.nodes[i] = std::sqrt(2.0) * es.eigenvalues()(i);
        const double v0 = es.eigenvectors()(0, i);
        rule.weights[i] = v0 * v0;  // already normalized: sum over i is 1
    }
    // Enforce the symmetry of the rule exactly.
    for (int i = 0; i < n / 2; ++i) {
        const int j = n - 1 - i;
        const double x = 0.5 * (rule.nodes[j] - rule.nodes[i]);
        rule.nodes[i] = -x;
        rule.nodes[j] = x;
        const double w = 0.5 * (rule.weights[i] + rule.weights[j]);
        rule.weights[i] = w;
        rule.weights[j] = w;
    }
    if (n % 2 == 1) {
        rule.nodes[n / 2] = 0.0;
    }
    double total = 0.0;
    for (double w : rule.weights) {
        total += w;
    }
    for (double& w : rule.weights) {
        w /= total;
    }
    return rule;
}

namespace {

// Fixed-algorithm normal sampler so seeded runs are stable across platforms.
class BoxMuller {
   public:
    explicit BoxMuller(std::uint64_t seed) : engine_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform_open();
        const double u2 = uniform_open();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

   private:
    double uniform_open() {
        // 53-bit mantissa in (0, 1].
        const std::uint64_t bits = engine_() >> 11;
        return (static_cast<double>(bits) + 1.0) * 0x1.0p-53;
    }

    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace

std::vector<NoiseNode> make_noise_nodes(const NoiseModel& noise, bool two_axes) {
    validate(noise);
    const double sigma_l_ghz = noise.sigma_eps_left_uev * kUevToGhz;
    const double sigma_r_ghz = noise.sigma_eps_right_uev * kUevToGhz;

    std::vector<NoiseNode> nodes;
    if (noise.scheme == NoiseScheme::kMonteCarlo) {
        const bool sample_l = sigma_l_ghz > 0.0;
        const bool sample_r = two_axes && sigma_r_ghz > 0.0;
        if (!sample_l && !sample_r) {
            return {NoiseNode{0.0, 0.0, 1.0}};
        }
        BoxMuller rng(noise.seed);
        const double w = 1.0 / noise.mc_samples;
        nodes.reserve(noise.mc_samples);
        for (int i = 0; i < noise.mc_samples; ++i) {
            NoiseNode node;
            node.weight = w;
            node.d_eps_left_ghz = sample_l ? sigma_l_ghz * rng.next() : 0.0;
            node.d_eps_right_ghz = sample_r ? sigma_r_ghz * rng.next() : 0.0;
            nodes.push_back(node);
        }
        return nodes;
    }

    const auto axis = [&](double sigma) {
        GaussHermiteRule rule;
        if (sigma == 0.0) {
            rule.nodes = {0.0};
            rule.weights = {1.0};
        } else {
            rule = gauss_hermite(noise.nodes_per_axis);
            for (double& x : rule.nodes) {
                x *= sigma;
            }
        }
        return rule;
    };

    const GaussHermiteRule left = axis(sigma_l_ghz);
    if (!two_axes) {
        nodes.reserve(left.nodes.size());
        for (size_t i = 0; i < left.nodes.size(); ++i) {
            nodes.push_back(NoiseNode{left.nodes[i], 0.0, left.weights[i]});
        }
        return nodes;
    }
    const GaussHermiteRule right = axis(sigma_r_ghz);
    nodes.reserve(left.nodes.size() * right.nodes.size());
    double total = 0.0;
    for (size_t i = 0; i < left.nodes.size(); ++i) {
        for (size_t j = 0; j < right.nodes.size(); ++j) {
            const double w = left.weights[i] * right.weights[j];
            nodes.push_back(NoiseNode{left.nodes[i], right.nodes[j], w});
            total += w;
        }
    }
    for (NoiseNode& node : nodes) {
        node.weight /= total;
    }
    return nodes;
}

}  // namespace chargeq
