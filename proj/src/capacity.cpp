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

#include "irscap/capacity.hpp"

#include <cmath>
#include <stdexcept>

#include "irscap/quadrature.hpp"

namespace irscap {

namespace {

// Upper integration limit in u = sqrt(lambda). The density tail falls off
// like exp(-2u / sqrt(gain_max)); the margin covers the polynomial front.
double upper_u(const MarginalEigenPDF& pdf) {
    const auto& d = pdf.dims();
    return std::sqrt(pdf.max_gain()) * (30.0 + 2.0 * (d.outer + d.inner_max));
}

}  // namespace

CapacityResult ergodic_capacity(const MarginalEigenPDF& pdf, double snr, int tx_antennas,
                                double tol) {
    if (!(snr > 0.0)) throw std::invalid_argument("ergodic_capacity: snr must be positive");
    if (tx_antennas < 1) throw std::invalid_argument("ergodic_capacity: tx_antennas must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("ergodic_capacity: tol must be positive");
    const double rho = snr / tx_antennas;
    const double s = pdf.dims().streams;
    const double u_max = upper_u(pdf);
    auto integrand = [&](double u) {
        double lam = u * u;
        if (lam <= 0.0) return 0.0;
        return 2.0 * u * std::log2(1.0 + rho * lam) * pdf.density(lam);
    };
    QuadResult r = integrate_adaptive(integrand, 0.0, u_max, tol / s, 1e-9);
    return {s * r.value, s * r.abs_err, u_max * u_max};
}

CapacityResult density_normalization(const MarginalEigenPDF& pdf, double tol) {
    const double u_max = upper_u(pdf);
    auto integrand = [&](double u) {
        double lam = u * u;
        if (lam <= 0.0) return 0.0;
        return 2.0 * u * pdf.density(lam);
    };
    QuadResult r = integrate_adaptive(integrand, 0.0, u_max, tol, 1e-10);
    return {r.value, r.abs_err, u_max * u_max};
}

double density_cdf(const MarginalEigenPDF& pdf, double x, double tol) {
    if (!(x >= 0.0)) throw std::invalid_argument("density_cdf: x must be non-negative");
    if (x == 0.0) return 0.0;
    auto integrand = [&](double u) {
        double lam = u * u;
        if (lam <= 0.0) return 0.0;
        return 2.0 * u * pdf.density(lam);
    };
    QuadResult r = integrate_adaptive(integrand, 0.0, std::sqrt(x), tol, 1e-10);
    return r.value;
}

std::vector<double> capacity_gradient(const MarginalEigenPDF& pdf,
                                      const PhaseShiftProfile& profile,
                                      const PhaseVector& phases, double snr, int tx_antennas,
                                      double tol) {
    if (!(snr > 0.0)) throw std::invalid_argument("capacity_gradient: snr must be positive");
    const int q = pdf.dims().inner_min;
    if (static_cast<int>(phases.size()) != q)
        throw std::invalid_argument("capacity_gradient: phases length must equal inner_min");
    std::vector<double> grad(static_cast<size_t>(q), 0.0);
    if (profile.ideal()) return grad;

    const double rho = snr / tx_antennas;
    const double s = pdf.dims().streams;
    const double u_max = upper_u(pdf);
    for (int n = 1; n <= q; ++n) {
        // df/dphi_n vanishes identically when the amplitude is stationary
        if (amplitude_derivative(phases[static_cast<size_t>(n - 1)], profile) == 0.0) continue;
        auto integrand = [&](double u) {
            double lam = u * u;
            if (lam <= 0.0) return 0.0;
            return 2.0 * u * std::log2(1.0 + rho * lam) *
                   pdf.density_dphi(lam, n, profile, phases);
        };
        QuadResult r = integrate_adaptive(integrand, 0.0, u_max, tol / s, 1e-9);
        grad[static_cast<size_t>(n - 1)] = s * r.value;
    }
    return grad;
}

}  // namespace irscap
