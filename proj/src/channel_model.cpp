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

#include "irscap/channel_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace irscap {

SystemDims::SystemDims(int tx_, int rx_, int irs_h_, int irs_v_)
    : tx(tx_), rx(rx_), irs_h(irs_h_), irs_v(irs_v_) {
    if (tx < 1 || rx < 1 || irs_h < 1 || irs_v < 1)
        throw std::invalid_argument("SystemDims: all counts must be positive");
}

EnsembleDims::EnsembleDims(int outer_, int inner_min_, int inner_max_)
    : outer(outer_), inner_min(inner_min_), inner_max(inner_max_),
      streams(std::min(outer_, inner_min_)) {
    if (outer < 1 || inner_min < 1 || inner_max < inner_min)
        throw std::invalid_argument("EnsembleDims: need inner_max >= inner_min >= 1, outer >= 1");
}

EnsembleDims EnsembleDims::from_system(const SystemDims& dims, ReductionCase which) {
    int n = dims.irs();
    if (which == ReductionCase::rx_uncorrelated)
        return EnsembleDims(dims.rx, std::min(dims.tx, n), std::max(dims.tx, n));
    return EnsembleDims(dims.tx, std::min(dims.rx, n), std::max(dims.rx, n));
}

namespace {
double sinc(double x) {
    if (x == 0.0) return 1.0;
    double pix = M_PI * x;
    return std::sin(pix) / pix;
}
}  // namespace

Eigen::MatrixXd irs_correlation(int n_h, int n_v, double d_h, double d_v, double wavelength) {
    if (n_h < 1 || n_v < 1 || !(d_h > 0.0) || !(d_v > 0.0) || !(wavelength > 0.0))
        throw std::invalid_argument("irs_correlation: geometry must be positive");
    int n = n_h * n_v;
    Eigen::MatrixXd r(n, n);
    for (int i = 0; i < n; ++i) {
        double xi = (i % n_h) * d_h, yi = (i / n_h) * d_v;
        for (int j = 0; j <= i; ++j) {
            double dx = xi - (j % n_h) * d_h, dy = yi - (j / n_h) * d_v;
            double v = sinc(2.0 * std::sqrt(dx * dx + dy * dy) / wavelength);
            r(i, j) = v;
            r(j, i) = v;
        }
    }
    return r;
}

Eigen::MatrixXd ula_correlation(int n, double rho) {
    if (n < 1) throw std::invalid_argument("ula_correlation: n must be positive");
    if (!(rho >= 0.0 && rho < 1.0))
        throw std::invalid_argument("ula_correlation: rho must be in [0, 1)");
    Eigen::MatrixXd r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = std::pow(rho, std::abs(i - j));
    return r;
}

double path_loss(double c_db, double nu, double d) {
    if (!(d > 0.0)) throw std::invalid_argument("path_loss: distance must be positive");
    return std::pow(10.0, -c_db / 10.0) * std::pow(d, -nu);
}

std::vector<double> eigen_spectrum(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("eigen_spectrum: matrix must be square");
    double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw std::invalid_argument("eigen_spectrum: matrix not Hermitian within 1e-12");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + m.rows());
    std::sort(ev.begin(), ev.end(), std::greater<double>());
    return ev;
}

GainVector assemble_gains(const EnsembleDims& dims,
                          const std::vector<std::vector<double>>& spectra,
                          const PhaseShiftProfile& profile, const PhaseVector& phases,
                          const std::vector<double>& power, double beta_product,
                          DegenerateGains mode) {
    const int q = dims.inner_min;
    if (static_cast<int>(phases.size()) != q)
        throw std::invalid_argument("assemble_gains: phases length must equal inner_min");
    if (static_cast<int>(power.size()) != q)
        throw std::invalid_argument("assemble_gains: power length must equal inner_min");
    for (const auto& s : spectra)
        if (static_cast<int>(s.size()) < q)
            throw std::invalid_argument("assemble_gains: spectrum shorter than inner_min");
    if (!(beta_product > 0.0))
        throw std::invalid_argument("assemble_gains: beta_product must be positive");

    GainVector g;
    g.gammas.resize(q);
    g.amplitudes.resize(q);
    g.phases.assign(phases.phases.begin(), phases.phases.end());
    for (int i = 0; i < q; ++i) {
        double a = amplitude(phases[static_cast<size_t>(i)], profile);
        double v = beta_product * power[static_cast<size_t>(i)] * a * a;
        for (const auto& s : spectra) v *= s[static_cast<size_t>(i)];
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::invalid_argument("assemble_gains: non-positive gain");
        g.gammas[static_cast<size_t>(i)] = v;
        g.amplitudes[static_cast<size_t>(i)] = a;
    }

    if (q == 1) return g;

    double lo = *std::min_element(g.gammas.begin(), g.gammas.end());
    double hi = *std::max_element(g.gammas.begin(), g.gammas.end());
    if ((hi - lo) <= 1e-9 * hi && mode == DegenerateGains::keep_uniform) {
        g.uniform = true;
        return g;
    }

    // Minimum relative gap over the (sorted) vector.
    std::vector<double> sorted = g.gammas;
    std::sort(sorted.begin(), sorted.end());
    double min_gap = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i + 1 < sorted.size(); ++i)
        min_gap = std::min(min_gap, (sorted[i + 1] - sorted[i]) / sorted[i + 1]);

    if (min_gap < kGainJitterEps) {
        // Rank-proportional multiplicative jitter: the larger entry always
        // gets the larger boost, so ordering is preserved and every pair
        // ends at least ~eps apart in relative terms.
        std::vector<size_t> idx(static_cast<size_t>(q));
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
            return g.gammas[a] != g.gammas[b] ? g.gammas[a] < g.gammas[b] : a < b;
        });
        for (size_t rank = 0; rank < idx.size(); ++rank)
            g.gammas[idx[rank]] *= 1.0 + static_cast<double>(rank + 1) * kGainJitterEps;
        g.jitter_applied = true;
    }
    return g;
}

}  // namespace irscap
