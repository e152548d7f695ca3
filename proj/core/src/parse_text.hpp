// Copyright 2026 The Authors.
//
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

// Shared scanner for the textual set grammar. Internal to the library.

#ifndef MATRED_SRC_PARSE_TEXT_HPP_
#define MATRED_SRC_PARSE_TEXT_HPP_

#include <cstddef>
#include <string>
#include <string_view>

#include "matred/errors.hpp"
#include "matred/subset.hpp"

namespace matred::internal {

/// Position-tracking scanner over a piece of text; fail() reports 1-based
/// line and column of the offending byte.
class TextCursor {
 public:
  explicit TextCursor(std::string_view text) : text_(text) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  std::size_t pos() const { return pos_; }
  void advance() { ++pos_; }

  void skip_ws() {
    while (!done()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        ++pos_;
      } else {
        break;
      }
    }
  }

  /// Consumes c or fails.
  void expect(char c, const char* what) {
    if (done() || text_[pos_] != c) {
      fail(pos_, std::string("expected ") + what);
    }
    ++pos_;
  }

  [[noreturn]] void fail(std::size_t at, const std::string& message) const {
    int line = 1;
    int column = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(line, column, message);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

/// Parses "{...}" at the cursor (whitespace allowed inside) into a subset
/// of a universe of size n. Elements are written 1-based; duplicates and
/// out-of-range elements are rejected.
Subset parse_subset_body(TextCursor& cur, int n);

}  // namespace matred::internal

#endif  // MATRED_SRC_PARSE_TEXT_HPP_
