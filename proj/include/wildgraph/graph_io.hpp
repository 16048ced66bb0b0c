/* Copyright 2026 The wildgraph Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Reading and writing diagrams.
//
// Input is detected from the first non-blank character:
//
//   '{' or '['  JSON, either {"vertices": [...], "B": [[...]]} as written by
//               emit_diagram or a bare matrix [[...]]. Vertices may be names
//               or objects {"id", "circle", "ram", "mult"}.
//   otherwise   an inline matrix when the text contains ';' ("0 1; 1 0",
//               commas allowed between entries), else an edge list.
//
// Edge lists hold one item per line; "#" starts a comment.
//
//   u v m    edge of multiplicity m between u and v (m defaults to 1)
//   v v m    m loops at v, so B_vv = 2m
//   v        vertex with no edges
//
// Vertices are numbered in order of first appearance.

#include <string>
#include <string_view>

#include "wildgraph/diagram.hpp"

namespace wildgraph {

enum class DiagramFormat { Json, Dot, Matrix };

/// "json", "dot" or "matrix"; Error(UnknownFormat) otherwise.
DiagramFormat parse_diagram_format(std::string_view name);

/// Matrix rows on separate lines, entries separated by single spaces.
std::string format_matrix(const IntMatrix& B);
std::string format_matrix(const RatMatrix& B);

/// DOT draws up to two parallel edges (or loops) per pair and a single
/// labeled edge beyond that; negative entries are dashed and labeled.
std::string emit_diagram(const DecoratedDiagram& d, DiagramFormat format);

/// Decoration defaults to all ones when the input carries none. Throws
/// ParseError with a byte offset, or Error(NotAGraph / DimensionMismatch)
/// for an invalid matrix.
DecoratedDiagram parse_diagram(std::string_view text);

}  // namespace wildgraph
