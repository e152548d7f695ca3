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

#ifndef MATRED_ERRORS_HPP_
#define MATRED_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace matred {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The requested operation would enumerate more subsets than its cap allows.
class UniverseTooLarge : public Error {
 public:
  UniverseTooLarge(int universe_size, int cap)
      : Error("universe of size " + std::to_string(universe_size) +
              " exceeds the enumeration cap of " + std::to_string(cap)),
        universe_size_(universe_size),
        cap_(cap) {}

  int universe_size() const { return universe_size_; }
  int cap() const { return cap_; }

 private:
  int universe_size_;
  int cap_;
};

/// Independence axioms a set family must satisfy to define a matroid.
enum class IndependenceAxiom {
  kI1,  // the empty set is independent
  kI2,  // subsets of independent sets are independent
  kI3,  // smaller independent sets can be augmented from larger ones
};

inline const char* to_string(IndependenceAxiom axiom) {
  switch (axiom) {
    case IndependenceAxiom::kI1: return "I1";
    case IndependenceAxiom::kI2: return "I2";
    case IndependenceAxiom::kI3: return "I3";
  }
  return "?";
}

/// A set family offered as an independence family violates a matroid axiom.
/// The witness names the offending set(s) in display grammar.
class AxiomViolation : public Error {
 public:
  AxiomViolation(IndependenceAxiom axiom, std::string witness)
      : Error(std::string(to_string(axiom)) + " violated: " + witness),
        axiom_(axiom),
        witness_(std::move(witness)) {}

  IndependenceAxiom axiom() const { return axiom_; }
  const std::string& witness() const { return witness_; }

 private:
  IndependenceAxiom axiom_;
  std::string witness_;
};

/// A matroid description is structurally malformed (overlapping partition
/// blocks, edges pointing outside the vertex range, and so on).
class InvalidMatroid : public Error {
 public:
  using Error::Error;
};

/// The argument was required to be a closed set but is not.
class NotAFlat : public Error {
 public:
  using Error::Error;
};

/// The flat has full rank, so no hyperplane contains it.
class FullRankFlat : public Error {
 public:
  using Error::Error;
};

/// Text input could not be parsed; carries 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error("parse error at " + std::to_string(line) + ":" +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// A weight vector whose length does not match the universe size.
class WeightArityMismatch : public Error {
 public:
  WeightArityMismatch(std::size_t got, int expected)
      : Error("expected " + std::to_string(expected) + " weights, got " +
              std::to_string(got)) {}
};

}  // namespace matred

#endif  // MATRED_ERRORS_HPP_
