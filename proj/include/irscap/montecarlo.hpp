// SPDX-License-Identifier: Apache-2.0
//
// irscap -- ergodic capacity of IRS-assisted MIMO links from large-scale statistics
// Copyright (C) 2026 the irscap developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef IRSCAP_MONTECARLO_HPP
#define IRSCAP_MONTECARLO_HPP

#include <cstdint>
#include <vector>

#include "irscap/channel_model.hpp"
#include "irscap/rng.hpp"

namespace irscap {

/// Empirical mean with 99% confidence half-width.
struct McEstimate {
    double mean = 0.0;
    double half_width_99 = 0.0;  // 2.576 * sample_std / sqrt(trials)
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

/// One draw of the effective reduced model: the inner inner_max x inner_min
/// standard complex Gaussian has column i scaled by sqrt(gamma_i); its Gram
/// eigenvalues (descending) form the diagonal seen by the outer
/// outer x inner_min Gaussian. Returns the `streams` nonzero eigenvalues of
/// the outer product, descending.
std::vector<double> sample_effective_eigenvalues(const EnsembleDims& dims,
                                                 const GainVector& gains, Rng& stream);

/// Mean of sum_i log2(1 + snr/M lambda_i) over the effective model.
McEstimate mc_capacity_effective(const EnsembleDims& dims, const GainVector& gains, double snr,
                                 int tx_antennas, std::uint64_t trials, std::uint64_t seed);

/// Full cascaded Kronecker channel: per trial
/// log2 det(I_K + snr*beta/M * H2 Theta H1 H1^H Theta^H H2^H) with
/// H_i = R_i^(1/2) X_i T_i^(1/2) and Theta = diag(alpha(phi_n) e^{j phi_n}).
McEstimate mc_capacity_full(const CorrelationSet& correlations, const PhaseShiftProfile& profile,
                            const PhaseVector& phases, double snr, int tx_antennas,
                            double beta_product, std::uint64_t trials, std::uint64_t seed);

/// Ergodic capacity of a plain uncorrelated rx x tx Rayleigh link at the
/// given effective snr (the no-IRS reference line).
McEstimate mc_capacity_direct(int tx, int rx, double snr_eff, std::uint64_t trials,
                              std::uint64_t seed);

/// Density-normalized histogram; integrates to 1 exactly by construction.
struct Histogram {
    std::vector<double> edges;      // bins + 1
    std::vector<double> densities;  // bins
};

Histogram empirical_pdf(const std::vector<double>& samples, int bins);

}  // namespace irscap

#endif  // IRSCAP_MONTECARLO_HPP
