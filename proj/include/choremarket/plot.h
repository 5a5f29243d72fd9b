// Copyright 2026 The Choremarket Authors
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

#ifndef CHOREMARKET_PLOT_H_
#define CHOREMARKET_PLOT_H_

#include <string>
#include <utility>
#include <vector>

#include "choremarket/core.h"

namespace choremarket {

// Vertices of the feasible utility set of a two-agent instance: the m+1
// efficient splits (agent 0 takes the k chores it minds least, relatively)
// followed by the m+1 inefficient ones traversed back. Throws
// std::invalid_argument unless the instance has exactly two agents.
struct UtilityPolygon {
  std::vector<UtilityProfile> frontier;     // k = 0..m, efficient
  std::vector<UtilityProfile> anti_chain;   // k = m..0, inefficient
};
UtilityPolygon TwoAgentUtilityPolygon(const Instance& inst);

// Standalone SVG of the polygon with the frontier highlighted and the given
// profiles drawn as dots.
std::string RenderUtilitySvg(const Instance& inst,
                             const std::vector<UtilityProfile>& profiles);

}  // namespace choremarket

#endif  // CHOREMARKET_PLOT_H_
