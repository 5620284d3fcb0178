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

#ifndef QTT_STATEVEC_IO_H
#define QTT_STATEVEC_IO_H

#include "json.hpp"
#include "qtt/statevec.h"

namespace qtt {

// Documents:
//   state:  {"dims": [2, 3], "amplitudes": [{"index": [0, 2], "value": "3/5"}, ...]}
//   matrix: {"dimension": 2, "rows": [["3/5", "-4/5"], ["4/5", "3/5"]]}
// Rationals are always strings in "p/q" form.

nlohmann::json state_to_json(const SparseState &state);
SparseState state_from_json(const nlohmann::json &doc);

nlohmann::json matrix_to_json(const OrthogonalMatrix &m);
OrthogonalMatrix matrix_from_json(const nlohmann::json &doc);

}  // namespace qtt

#endif
