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

#ifndef CHUNKLATE_ERROR_HPP
#define CHUNKLATE_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chunklate {

// Raised while loading a data file. `line` is 1-based; 0 when unknown.
class DataError : public std::runtime_error {
 public:
  DataError(std::string source, std::size_t line, const std::string& message);

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

// Arabic template text that does not follow the command grammar.
// `position` is a byte offset into the template text.
class TemplateSyntaxError : public std::runtime_error {
 public:
  TemplateSyntaxError(std::size_t position, const std::string& message);

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A category reference in a template could not be resolved against the
// English chunk it was executed on.
class GenerationError : public std::runtime_error {
 public:
  GenerationError(int template_id, const std::string& message);

  int template_id() const { return template_id_; }

 private:
  int template_id_;
};

// No complete path through a lattice. Tuning guarantees at least one, so
// seeing this means a caller skipped a stage.
class NoPathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace chunklate

#endif  // CHUNKLATE_ERROR_HPP
