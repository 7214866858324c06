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

#include "irscap/eigen_pdf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace irscap {

namespace {

// log of elementary symmetric polynomials e_0..e_mmax of positive values;
// all terms positive, so the recurrence runs on plain log magnitudes.
std::vector<double> log_esym(const std::vector<double>& vals, int mmax) {
    std::vector<double> e(static_cast<size_t>(mmax) + 1,
                          -std::numeric_limits<double>::infinity());
    e[0] = 0.0;
    for (size_t t = 0; t < vals.size(); ++t) {
        double lv = std::log(vals[t]);
        for (int m = std::min<int>(mmax, static_cast<int>(t) + 1); m >= 1; --m)
            e[static_cast<size_t>(m)] = logaddexp(e[static_cast<size_t>(m)],
                                                  lv + e[static_cast<size_t>(m - 1)]);
    }
    return e;
}

// signed log Vandermonde prod_{i<j}(v_j - v_i)
SignedLog log_vandermonde_of(const std::vector<double>& v) {
    int sign = 1;
    double lm = 0.0;
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j) {
            double d = v[j] - v[i];
            if (d == 0.0) return SignedLog::zero();
            if (d < 0.0) { sign = -sign; d = -d; }
            lm += std::log(d);
        }
    if (v.size() < 2) return SignedLog::one();
    return SignedLog::from_log(sign, lm);
}

thread_local std::vector<SignedLog> tl_terms;
thread_local std::vector<double> tl_logk;

}  // namespace

GainVector make_gain_vector(std::vector<double> gammas) {
    GainVector g;
    g.amplitudes.assign(gammas.size(), 1.0);
    g.phases.assign(gammas.size(), 0.0);
    g.gammas = std::move(gammas);
    return g;
}

MarginalEigenPDF::MarginalEigenPDF(const EnsembleDims& dims, const GainVector& gains)
    : dims_(dims), gains_(gains.gammas), uniform_(gains.uniform) {
    const int q = dims_.inner_min;
    const int p = dims_.inner_max;
    const int a = dims_.outer;
    if (static_cast<int>(gains_.size()) != q)
        throw std::invalid_argument("MarginalEigenPDF: gains length must equal inner_min");
    for (double g : gains_)
        if (!(g > 0.0) || !std::isfinite(g))
            throw std::invalid_argument("MarginalEigenPDF: gains must be positive");
    max_gain_ = *std::max_element(gains_.begin(), gains_.end());

    if (q == 1) uniform_ = true;  // one gain: the kernels coincide; take the cheap one

    if (uniform_) {
        gbar_ = gains_[0];
        if (q > 1) {
            double lo = *std::min_element(gains_.begin(), gains_.end());
            if ((max_gain_ - lo) > 1e-9 * max_gain_)
                throw std::invalid_argument("MarginalEigenPDF: uniform flag on non-uniform gains");
            double sum = 0.0;
            for (double g : gains_) sum += g;
            gbar_ = sum / q;
        }
        gamma_cof_ = specfun::gamma_cofactors(q, p);
        log_norm_const_ = 0.0;
        for (int i = 1; i <= q; ++i)
            log_norm_const_ -= specfun::log_gamma(static_cast<double>(q - i + 1)) +
                               specfun::log_gamma(static_cast<double>(p - i + 1));
        return;
    }

    // distinct-gain kernel
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j)
            if (std::fabs(gains_[static_cast<size_t>(i)] - gains_[static_cast<size_t>(j)]) <=
                1e-9 * std::max(gains_[static_cast<size_t>(i)], gains_[static_cast<size_t>(j)]))
                throw std::invalid_argument(
                    "MarginalEigenPDF: duplicate gains within 1e-9 relative; jitter first");

    log_vandermonde_ = log_vandermonde_of(gains_);
    gain_exp_ = q - 1 - 0.5 * (p + a);
    bessel_order_ = std::abs(p - a);

    vdm_minus_.resize(static_cast<size_t>(q));
    esym_minus_.resize(static_cast<size_t>(q));
    esym_minus2_.assign(static_cast<size_t>(q) * q, {});
    for (int j = 0; j < q; ++j) {
        std::vector<double> rest;
        rest.reserve(static_cast<size_t>(q) - 1);
        for (int t = 0; t < q; ++t)
            if (t != j) rest.push_back(gains_[static_cast<size_t>(t)]);
        vdm_minus_[static_cast<size_t>(j)] = log_vandermonde_of(rest);
        esym_minus_[static_cast<size_t>(j)] = log_esym(rest, q - 1);
        for (int n = 0; n < q; ++n) {
            if (n == j) continue;
            std::vector<double> rest2;
            rest2.reserve(static_cast<size_t>(q) - 2);
            for (int t = 0; t < q; ++t)
                if (t != j && t != n) rest2.push_back(gains_[static_cast<size_t>(t)]);
            esym_minus2_[static_cast<size_t>(j) * q + n] = log_esym(rest2, std::max(0, q - 2));
        }
    }

    // cofactor (k, j) of the Vandermonde matrix [gamma_j^{m-1}]:
    // (-1)^{k+j} * vandermonde(gains \ j) * e_{q-k}(gains \ j)
    vand_cof_.q = q;
    vand_cof_.entries.resize(static_cast<size_t>(q) * q);
    for (int k = 1; k <= q; ++k)
        for (int j = 1; j <= q; ++j) {
            SignedLog v = vdm_minus_[static_cast<size_t>(j - 1)];
            double le = esym_minus_[static_cast<size_t>(j - 1)][static_cast<size_t>(q - k)];
            SignedLog c = v * SignedLog::from_log(1, le);
            if ((k + j) % 2 != 0) c = c.negated();
            vand_cof_.at(k, j) = c;
        }

    const int s = dims_.streams;
    log_ak_.resize(static_cast<size_t>(s));
    for (int k = q - s + 1; k <= q; ++k)
        log_ak_[static_cast<size_t>(k - (q - s + 1))] =
            -specfun::log_gamma(static_cast<double>(a - q + k)) -
            specfun::log_gamma(static_cast<double>(p - q + k));
}

MarginalEigenPDF build_marginal(const EnsembleDims& dims, const GainVector& gains) {
    return MarginalEigenPDF(dims, gains);
}

double MarginalEigenPDF::density_uniform(double x) const {
    const int q = dims_.inner_min, p = dims_.inner_max, a = dims_.outer, s = dims_.streams;
    double log_x = std::log(x);
    int max_order = 0;
    for (int l = 1; l <= q; ++l)
        max_order = std::max(max_order, std::abs(p - a + l - 1));
    tl_logk = specfun::log_bessel_k_ladder(max_order, 2.0 * std::sqrt(x));

    auto& terms = tl_terms;
    terms.clear();
    for (int l = 1; l <= q; ++l) {
        double lb = tl_logk[static_cast<size_t>(std::abs(p - a + l - 1))];
        for (int k = q - s + 1; k <= q; ++k) {
            const SignedLog& cof = gamma_cof_.at(l, k);
            if (cof.sign == 0) continue;
            double lm = 0.5 * (a + p - 2 * q + 2 * k + l - 3) * log_x -
                        specfun::log_gamma(static_cast<double>(a - q + k)) + lb + cof.log_mag;
            terms.push_back(SignedLog::from_log(cof.sign, lm));
        }
    }
    SignedLog sum = signed_logsumexp(terms);
    SignedLog pref = SignedLog::from_log(1, std::log(2.0) + log_norm_const_ -
                                                std::log(static_cast<double>(s)));
    double v = (pref * sum).to_real();
    return v > 0.0 ? v : 0.0;
}

double MarginalEigenPDF::density(double lambda) const {
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw std::invalid_argument("marginal density: lambda must be positive");
    if (uniform_) return density_uniform(lambda / gbar_) / gbar_;

    const int q = dims_.inner_min, p = dims_.inner_max, a = dims_.outer, s = dims_.streams;
    double log_lam = std::log(lambda);

    auto& terms = tl_terms;
    terms.clear();
    for (int j = 1; j <= q; ++j) {
        double gj = gains_[static_cast<size_t>(j - 1)];
        double z = 2.0 * std::sqrt(lambda / gj);
        double lb = gain_exp_ * std::log(gj) + specfun::log_bessel_k(bessel_order_, z);
        for (int k = q - s + 1; k <= q; ++k) {
            const SignedLog& cof = vand_cof_.at(k, j);
            if (cof.sign == 0) continue;
            double lm = (a - q + k - 1) * log_lam +
                        log_ak_[static_cast<size_t>(k - (q - s + 1))] + lb + cof.log_mag;
            terms.push_back(SignedLog::from_log(cof.sign, lm));
        }
    }
    SignedLog sum = signed_logsumexp(terms);
    SignedLog pref = SignedLog::from_log(
        1, std::log(2.0) + 0.5 * (p - a) * log_lam - std::log(static_cast<double>(s)));
    double v = ((pref * sum) / log_vandermonde_).to_real();
    return v > 0.0 ? v : 0.0;
}

double MarginalEigenPDF::density_dgamma(double lambda, int n) const {
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw std::invalid_argument("density_dgamma: lambda must be positive");
    const int q = dims_.inner_min;
    if (n < 1 || n > q) throw std::invalid_argument("density_dgamma: index out of range");
    if (uniform_)
        throw std::invalid_argument("density_dgamma: requires distinct gains (jitter first)");

    const int p = dims_.inner_max, a = dims_.outer, s = dims_.streams;
    const double log_lam = std::log(lambda);
    const double gn = gains_[static_cast<size_t>(n - 1)];

    // sum_{i != n} 1/(gamma_n - gamma_i), and the pair sums with j removed
    double s_n = 0.0;
    for (int i = 1; i <= q; ++i)
        if (i != n) s_n += 1.0 / (gn - gains_[static_cast<size_t>(i - 1)]);
    SignedLog neg_sn = SignedLog::from_real(-s_n);

    // B_j and dB_n
    std::vector<SignedLog> b(static_cast<size_t>(q));
    for (int j = 1; j <= q; ++j) {
        double gj = gains_[static_cast<size_t>(j - 1)];
        double z = 2.0 * std::sqrt(lambda / gj);
        b[static_cast<size_t>(j - 1)] = SignedLog::from_log(
            1, gain_exp_ * std::log(gj) + specfun::log_bessel_k(bessel_order_, z));
    }
    SignedLog db_n;
    {
        double z = 2.0 * std::sqrt(lambda / gn);
        int nu = p - a;
        double lk_m1 = specfun::log_bessel_k(std::abs(nu - 1), z);
        double lk_p1 = specfun::log_bessel_k(std::abs(nu + 1), z);
        double lk = specfun::log_bessel_k(std::abs(nu), z);
        SignedLog t1 = SignedLog::from_real(gain_exp_) * SignedLog::from_log(1, lk);
        SignedLog t2 = SignedLog::from_log(1, std::log(z / 4.0) + logaddexp(lk_m1, lk_p1));
        std::array<SignedLog, 2> parts{t1, t2};
        db_n = signed_logsumexp(parts) *
               SignedLog::from_log(1, (gain_exp_ - 1.0) * std::log(gn));
    }

    auto& terms = tl_terms;
    terms.clear();
    for (int k = q - s + 1; k <= q; ++k) {
        SignedLog pref = SignedLog::from_log(
            1, (a - q + k - 1) * log_lam + log_ak_[static_cast<size_t>(k - (q - s + 1))]);
        // dB_n * Cof(k,n)
        terms.push_back(pref * db_n * vand_cof_.at(k, n));
        for (int j = 1; j <= q; ++j) {
            const SignedLog& bj = b[static_cast<size_t>(j - 1)];
            // -N_k * S_n contribution
            terms.push_back(pref * bj * vand_cof_.at(k, j) * neg_sn);
            if (j == n) continue;
            // d Cof(k,j) / d gamma_n
            double t_jn = 0.0;
            for (int i = 1; i <= q; ++i)
                if (i != n && i != j) t_jn += 1.0 / (gn - gains_[static_cast<size_t>(i - 1)]);
            terms.push_back(pref * bj * vand_cof_.at(k, j) * SignedLog::from_real(t_jn));
            if (q >= 2 && q - k - 1 >= 0) {
                const auto& e2 = esym_minus2_[static_cast<size_t>(j - 1) * q + (n - 1)];
                SignedLog extra = vdm_minus_[static_cast<size_t>(j - 1)] *
                                  SignedLog::from_log(1, e2[static_cast<size_t>(q - k - 1)]);
                if ((k + j) % 2 != 0) extra = extra.negated();
                terms.push_back(pref * bj * extra);
            }
        }
    }
    SignedLog sum = signed_logsumexp(terms);
    SignedLog pref = SignedLog::from_log(
        1, std::log(2.0) + 0.5 * (p - a) * log_lam - std::log(static_cast<double>(s)));
    return ((pref * sum) / log_vandermonde_).to_real();
}

double MarginalEigenPDF::density_dphi(double lambda, int n, const PhaseShiftProfile& profile,
                                      const PhaseVector& phases) const {
    if (profile.ideal()) return 0.0;
    const int q = dims_.inner_min;
    if (n < 1 || n > q) throw std::invalid_argument("density_dphi: index out of range");
    if (static_cast<int>(phases.size()) != q)
        throw std::invalid_argument("density_dphi: phases length must equal inner_min");
    double phi = phases[static_cast<size_t>(n - 1)];
    double alpha = amplitude(phi, profile);
    double dalpha = amplitude_derivative(phi, profile);
    if (dalpha == 0.0) return 0.0;
    double dgamma_dphi = gains_[static_cast<size_t>(n - 1)] * 2.0 * dalpha / alpha;
    return dgamma_dphi * density_dgamma(lambda, n);
}

double joint_pdf_log(const std::vector<double>& c, const GainVector& gains, int p) {
    const int q = static_cast<int>(gains.size());
    if (static_cast<int>(c.size()) != q)
        throw std::invalid_argument("joint_pdf_log: c length must equal gains length");
    if (p < q) throw std::invalid_argument("joint_pdf_log: need p >= q");
    for (int i = 0; i < q; ++i) {
        if (!(c[static_cast<size_t>(i)] > 0.0))
            throw std::invalid_argument("joint_pdf_log: c must be positive");
        if (i > 0 && !(c[static_cast<size_t>(i)] > c[static_cast<size_t>(i - 1)]))
            throw std::invalid_argument("joint_pdf_log: c must be strictly increasing");
    }
    const auto& g = gains.gammas;
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j)
            if (std::fabs(g[static_cast<size_t>(i)] - g[static_cast<size_t>(j)]) <=
                1e-9 * std::max(g[static_cast<size_t>(i)], g[static_cast<size_t>(j)]))
                throw std::invalid_argument("joint_pdf_log: gains must be distinct");

    // exp(-c_m / gamma_n) determinant, the c-Vandermonde and the gain
    // normalization together form the ordered joint density.
    std::vector<SignedLog> em(static_cast<size_t>(q) * q);
    for (int m = 0; m < q; ++m)
        for (int n = 0; n < q; ++n)
            em[static_cast<size_t>(m) * q + n] =
                SignedLog::from_log(1, -c[static_cast<size_t>(m)] / g[static_cast<size_t>(n)]);
    SignedLog det_e = specfun::signed_log_det(em, q);
    SignedLog vdm_c = log_vandermonde_of(c);
    SignedLog vdm_g = log_vandermonde_of(g);
    if (det_e.is_zero() || vdm_c.is_zero())
        return -std::numeric_limits<double>::infinity();

    double lm = det_e.log_mag + vdm_c.log_mag - vdm_g.log_mag;
    int sign = det_e.sign * vdm_c.sign * vdm_g.sign;
    for (int i = 0; i < q; ++i) {
        lm += (p - q) * std::log(c[static_cast<size_t>(i)]);
        lm -= (p - q + 1) * std::log(g[static_cast<size_t>(i)]);
        lm -= specfun::log_gamma(static_cast<double>(p - i));
    }
    if (sign <= 0) return -std::numeric_limits<double>::infinity();
    return lm;
}

}  // namespace irscap
