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

#ifndef IRSCAP_CAPACITY_HPP
#define IRSCAP_CAPACITY_HPP

#include <vector>

#include "irscap/eigen_pdf.hpp"

namespace irscap {

struct CapacityResult {
    double ec_bits = 0.0;         // b/s/Hz
    double quad_abs_err = 0.0;    // achieved quadrature error estimate
    double truncation_point = 0.0;  // upper lambda limit used
};

inline constexpr double kDefaultCapacityTol = 1e-8;

/// Ergodic capacity streams * integral of log2(1 + snr/M * lambda) f(lambda).
/// Integrated in u = sqrt(lambda), which turns the Bessel tail into a plain
/// exponential; adaptive G7/K15 to abs tolerance `tol` and a fixed 1e-9
/// relative floor so small-scale capacities keep full relative accuracy.
CapacityResult ergodic_capacity(const MarginalEigenPDF& pdf, double snr, int tx_antennas,
                                double tol = kDefaultCapacityTol);

/// Normalization integral of the density (diagnostic / acceptance checks).
CapacityResult density_normalization(const MarginalEigenPDF& pdf, double tol = 1e-9);

/// CDF of the marginal density at x (same quadrature machinery).
double density_cdf(const MarginalEigenPDF& pdf, double x, double tol = 1e-9);

/// Gradient of the ergodic capacity with respect to each phase shift.
/// Component n integrates log2(1 + snr/M * lambda) * df/dphi_n.
std::vector<double> capacity_gradient(const MarginalEigenPDF& pdf,
                                      const PhaseShiftProfile& profile,
                                      const PhaseVector& phases, double snr, int tx_antennas,
                                      double tol = kDefaultCapacityTol);

}  // namespace irscap

#endif  // IRSCAP_CAPACITY_HPP
