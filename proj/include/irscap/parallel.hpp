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

#ifndef IRSCAP_PARALLEL_HPP
#define IRSCAP_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace irscap {

/// Worker count: IRSCAP_THREADS if set, else min(hardware_concurrency, 4).
int thread_count();

/// Runs fn(i) for i in [0, n) across threads. Each index writes only its
/// own output slot, so results are identical for any thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

/// Deterministic pairwise sum of a slot buffer (order-insensitive
/// accumulation contract for the MC estimates).
double pairwise_sum(const double* data, std::size_t n);

}  // namespace irscap

#endif  // IRSCAP_PARALLEL_HPP
