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

#include "chunklate/error.hpp"

namespace chunklate {

DataError::DataError(std::string source, std::size_t line,
                     const std::string& message)
    : std::runtime_error(source + (line ? ":" + std::to_string(line) : "") +
                         ": " + message),
      source_(std::move(source)),
      line_(line) {}

TemplateSyntaxError::TemplateSyntaxError(std::size_t position,
                                         const std::string& message)
    : std::runtime_error(message + " at offset " + std::to_string(position)),
      position_(position) {}

GenerationError::GenerationError(int template_id, const std::string& message)
    : std::runtime_error("template " + std::to_string(template_id) + ": " +
                         message),
      template_id_(template_id) {}

}  // namespace chunklate
