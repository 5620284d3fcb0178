// Copyright 2026 The qtt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QTT_REFERENCE_ALGORITHMS_H
#define QTT_REFERENCE_ALGORITHMS_H

#include "qtt/model.h"

namespace qtt {

using ReferenceAlgorithm = AdvisedComputer;

/// Queries locations 1..N-1 of the input block and outputs bin_n of the step, read off as
/// the number of zero answers. T = N - 1, no advice, zero error.
ReferenceAlgorithm build_full_query(size_t M, size_t n);

/// Advice carries the floor(k/M) leading bits of every block's step string (unused advice
/// bits are zero). The computer queries all but the last location of the window those bits
/// identify, so T = N / 2^{floor(k/M)} - 1, with zero error. Throws if floor(k/M) > n.
ReferenceAlgorithm build_advised(size_t M, size_t n, size_t k);

}  // namespace qtt

#endif
