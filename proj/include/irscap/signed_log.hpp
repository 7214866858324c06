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

#ifndef IRSCAP_SIGNED_LOG_HPP
#define IRSCAP_SIGNED_LOG_HPP

#include <cmath>
#include <limits>
#include <span>

namespace irscap {

/// A real number stored as sign and natural-log magnitude.
///
/// The density kernels multiply Gamma functions, Bessel values and
/// Vandermonde products whose magnitudes leave the double range long
/// before the final result does, so every intermediate lives here and
/// is exponentiated exactly once at the end.
struct SignedLog {
    int sign = 0;  // -1, 0, +1
    double log_mag = -std::numeric_limits<double>::infinity();

    static SignedLog zero() { return {}; }
    static SignedLog one() { return {1, 0.0}; }

    static SignedLog from_real(double x) {
        if (x == 0.0) return zero();
        return {x > 0.0 ? 1 : -1, std::log(std::fabs(x))};
    }
    // value = s * exp(lm); s in {-1,0,+1}
    static SignedLog from_log(int s, double lm) {
        if (s == 0 || lm == -std::numeric_limits<double>::infinity()) return zero();
        return {s > 0 ? 1 : -1, lm};
    }
    double to_real() const { return sign == 0 ? 0.0 : sign * std::exp(log_mag); }
    bool is_zero() const { return sign == 0; }

    SignedLog negated() const { return {-sign, log_mag}; }

    friend SignedLog operator*(const SignedLog& a, const SignedLog& b) {
        if (a.sign == 0 || b.sign == 0) return zero();
        return {a.sign * b.sign, a.log_mag + b.log_mag};
    }
    friend SignedLog operator/(const SignedLog& a, const SignedLog& b) {
        if (a.sign == 0) return zero();
        return {a.sign * b.sign, a.log_mag - b.log_mag};
    }
};

/// Exact-sign sum of terms given in signed-log form.
///
/// Accumulates exp(log_mag - max) in extended precision; the result sign
/// is the sign of the algebraic sum, and an exact cancellation yields the
/// zero element.
SignedLog signed_logsumexp(std::span<const SignedLog> terms);

/// log(exp(a) + exp(b)) for plain (positive-domain) log values.
inline double logaddexp(double a, double b) {
    if (a == -std::numeric_limits<double>::infinity()) return b;
    if (b == -std::numeric_limits<double>::infinity()) return a;
    double m = a > b ? a : b;
    return m + std::log1p(std::exp(-std::fabs(a - b)));
}

}  // namespace irscap

#endif  // IRSCAP_SIGNED_LOG_HPP
