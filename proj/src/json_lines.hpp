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

#ifndef CHUNKLATE_SRC_JSON_LINES_HPP
#define CHUNKLATE_SRC_JSON_LINES_HPP

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "chunklate/error.hpp"
#include "chunklate/text.hpp"
#include "json.hpp"

namespace chunklate::detail {

// Calls `fn` with each non-blank line parsed as a JSON object. Parse errors
// and exceptions thrown by `fn` surface as DataError carrying the line.
template <class Fn>
void for_each_record(std::istream& in, std::string_view source, Fn&& fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    try {
      const nlohmann::json record = nlohmann::json::parse(line);
      if (!record.is_object()) {
        throw std::invalid_argument("record is not a JSON object");
      }
      fn(record);
    } catch (const DataError&) {
      throw;
    } catch (const nlohmann::json::exception& e) {
      throw DataError(std::string(source), line_no, e.what());
    } catch (const std::invalid_argument& e) {
      throw DataError(std::string(source), line_no, e.what());
    } catch (const TemplateSyntaxError& e) {
      throw DataError(std::string(source), line_no, e.what());
    }
  }
}

}  // namespace chunklate::detail

#endif  // CHUNKLATE_SRC_JSON_LINES_HPP
