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

#ifndef MATRED_MATROID_IO_HPP_
#define MATRED_MATROID_IO_HPP_

#include <string>

#include "matred/matroid.hpp"

namespace matred {

/// Parses the key=value matroid description format.
///
/// The text is a sequence of whitespace-separated key=value tokens;
/// newlines count as whitespace, and '#' starts a comment running to the
/// end of the line. Elements are written 1-based. Keys:
///
///   kind=explicit|uniform|gf2|graphic|partition   (must come first)
///   n=<universe size>                             (required)
///   k=<rank bound>                 uniform only
///   indep={};{1};{1,2}             explicit only: the independent sets
///   row=0110                       gf2: one matrix row, n binary digits
///   vertices=<count>               graphic only
///   edge=2-5                       graphic: i-th edge line is element i
///   block={1,2} cap=1              partition: a block then its capacity
///
/// Throws ParseError (with 1-based line and column) for malformed text,
/// UniverseTooLarge for n over the cap, and AxiomViolation when an
/// explicit family fails a matroid axiom.
Matroid parse_matroid(const std::string& text);

/// Reads and parses a description file; an unreadable path raises Error.
Matroid load_matroid_file(const std::string& path);

/// Renders m in the same format, one key per line, canonically ordered,
/// so that parse_matroid(render_matroid(m)) reconstructs an equivalent
/// matroid. m must not be a restriction.
std::string render_matroid(const Matroid& m);

}  // namespace matred

#endif  // MATRED_MATROID_IO_HPP_
