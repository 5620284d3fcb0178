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

#ifndef QTT_COMPUTER_IO_H
#define QTT_COMPUTER_IO_H

#include "json.hpp"
#include "qtt/model.h"

namespace qtt {

// Computer document:
//
//   {
//     "M": 1, "n": 1, "T": 1, "k": 0, "p": 1, "workspace_dim": 2,
//     "prequery": [
//       {"block": 1, "advice": "",
//        "terms": [{"amplitude": "1", "queries": [[1, "0"]], "workspace": 0}]}
//     ],
//     "V": [["1", "0", ...], ...],
//     "advice": {"1": ""}
//   }
//
// "p" is the output width. "prequery" must cover every (block, advice) pair. "V" is a dense
// matrix over the full register space (see RegisterLayout), rows first. "advice" is optional
// and maps a comma-separated step vector to the advice string; without it the advice is
// empty when k = 0 and unavailable otherwise.

/// Dense matrices larger than this are refused in both directions.
inline constexpr uint64_t kMaxDocumentDimension = 1024;

AdvisedComputer computer_from_json(const nlohmann::json &doc);
AdvisedComputer load_computer(const std::string &path);

/// Materializes the generator table, V, and (when N^M <= advice_budget) the advice table.
/// Throws std::invalid_argument if the register space exceeds kMaxDocumentDimension.
nlohmann::json computer_to_json(const AdvisedComputer &subject, uint64_t advice_budget = 4096);

}  // namespace qtt

#endif
