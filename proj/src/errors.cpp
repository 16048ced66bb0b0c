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

#include "wildgraph/errors.hpp"

namespace wildgraph {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::NonPositiveExponent: return "NonPositiveExponent";
    case ErrorKind::ZeroMultiplicity: return "ZeroMultiplicity";
    case ErrorKind::EqualCircles: return "EqualCircles";
    case ErrorKind::EmptyClass: return "EmptyClass";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::TreeClassMismatch: return "TreeClassMismatch";
    case ErrorKind::UnknownFormat: return "UnknownFormat";
    case ErrorKind::NotAGraph: return "NotAGraph";
    case ErrorKind::UltrametricViolation: return "UltrametricViolation";
    case ErrorKind::TwistedTree: return "TwistedTree";
    case ErrorKind::NotSimplyLaced: return "NotSimplyLaced";
    case ErrorKind::SizeLimit: return "SizeLimit";
  }
  return "Unknown";
}

}  // namespace wildgraph
