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

#ifndef CHUNKLATE_TEXT_HPP
#define CHUNKLATE_TEXT_HPP

#include <string>
#include <string_view>
#include <vector>

namespace chunklate::text {

// ASCII-only lowercasing; non-ASCII bytes pass through untouched.
std::string to_lower(std::string_view s);

std::string_view trim(std::string_view s);

std::vector<std::string_view> split_whitespace(std::string_view s);

// Removes leading and trailing ASCII punctuation from a token.
std::string_view strip_punctuation(std::string_view token);

bool is_valid_utf8(std::string_view s);

// True when `s` is non-empty valid UTF-8 and every code point belongs to the
// Arabic script (or is script-neutral: spaces, digits, combining marks).
bool is_arabic_text(std::string_view s);

// Unicode NFC. Input must be valid UTF-8.
std::string to_nfc(std::string_view s);

}  // namespace chunklate::text

#endif  // CHUNKLATE_TEXT_HPP
