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

#include "irscap/signed_log.hpp"

namespace irscap {

SignedLog signed_logsumexp(std::span<const SignedLog> terms) {
    double max_lm = -std::numeric_limits<double>::infinity();
    for (const auto& t : terms)
        if (t.sign != 0 && t.log_mag > max_lm) max_lm = t.log_mag;
    if (max_lm == -std::numeric_limits<double>::infinity()) return SignedLog::zero();

    // 80-bit accumulation buys ~3 extra digits against the alternating
    // cofactor sums; summation order is fixed by the caller's term order.
    long double acc = 0.0L;
    for (const auto& t : terms) {
        if (t.sign == 0) continue;
        acc += t.sign * std::exp(static_cast<long double>(t.log_mag - max_lm));
    }
    if (acc == 0.0L) return SignedLog::zero();
    int sign = acc > 0.0L ? 1 : -1;
    double lm = max_lm + static_cast<double>(std::log(acc > 0.0L ? acc : -acc));
    return SignedLog::from_log(sign, lm);
}

}  // namespace irscap
