// Copyright 2026 The locturan Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "locturan/graph.hpp"

namespace locturan {

class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Decodes one graph6 record. An optional ">>graph6<<" header and trailing
/// CR/LF are accepted. Throws Graph6Error on a malformed size prefix, bytes
/// outside 63..126, wrong record length, nonzero padding bits, or n > 32.
Graph parse_graph6(std::string_view line);

/// Encodes `g` as graph6: N(n) followed by the upper triangle packed column by
/// column (x(0,1), x(0,2), x(1,2), x(0,3), ...) six bits per byte, high bit first.
std::string write_graph6(const Graph& g);

}  // namespace locturan
