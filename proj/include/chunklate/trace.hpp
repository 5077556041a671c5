// Copyright 2026 The Chunklate Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHUNKLATE_TRACE_HPP
#define CHUNKLATE_TRACE_HPP

#include <span>

#include "chunklate/engine.hpp"
#include "json.hpp"

namespace chunklate {

// {"id": 3 | "d1", "span": [s, e], "kind": "normal" | "dummy", "pair_id": 7}
nlohmann::json row_to_json(const ChunkInstance& row);

// {"n": 8, "rows": [...]}
nlohmann::json matrix_to_json(const CorrespondenceMatrix& matrix);

// {"nodes": n+1, "edges": [...], "paths": [{"edges": [ids], "cost": [d, c]}],
//  "optimal": [indices into paths], "truncated": bool}
nlohmann::json lattice_to_json(const Lattice& lattice,
                               const PathEnumeration& enumeration,
                               std::span<const Path> optimal);

// [{"rule": "repeated", "row": {...}, "kept": 1}, ...]
nlohmann::json tuning_to_json(const TuningLog& log);

// Full stage-by-stage report in pipeline order.
nlohmann::json trace_report(const TranslationResult& result,
                            const Vocabulary& vocabulary);

}  // namespace chunklate

#endif  // CHUNKLATE_TRACE_HPP
