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

#ifndef QTT_HARNESS_SUBJECTS_H
#define QTT_HARNESS_SUBJECTS_H

#include <string>
#include <vector>

#include "qtt/reference_algorithms.h"

namespace qtt {

/// Makes no queries and always outputs zero. Advice is all zeros. Not correct for n >= 1.
AdvisedComputer build_zero_query(size_t M, size_t n, size_t k);

/// Advice bit j (j <= min(k, M)) says whether s_j = N. A flagged block never looks at its
/// own block: it queries location 0 of the next block T times and outputs N - 1. Other
/// blocks run the full-query algorithm. T = N - 1, zero error.
AdvisedComputer build_shortcut(size_t M, size_t n, size_t k);

/// Advice holds every step (k = M n) and the output is read from it. A small amplitude
/// queries the block's own step location, and V flips the last output bit there if the
/// answer is 0; the rest queries the next block. Zero error, T = 1, own weight (3/5)^12.
AdvisedComputer build_leaky(size_t M, size_t n);

std::vector<std::string> builtin_subjects();

/// A built-in by name, or a computer document loaded from a path.
/// Throws std::invalid_argument on an unknown name or unusable parameters.
AdvisedComputer make_subject(const std::string &name_or_path, size_t M, size_t n, size_t k);

}  // namespace qtt

#endif
