// Copyright 2026 The tempograph Authors
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

#ifndef TEMPOGRAPH_GRAPH_IO_HPP_
#define TEMPOGRAPH_GRAPH_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "tempograph/temporal_graph.hpp"

namespace tempograph {

// Text format, UTF-8 with LF line endings:
//
//   tgraph 1
//   n=<int> a=<int> nprime=<decimal>
//   <u> <v> <l1>[,<l2>,...]        one line per edge, labels ascending
//
// Lines starting with '#' are comments. Any violation of a TemporalGraph
// invariant raises ParseError carrying the offending line number.
TemporalGraph parse_tgraph(std::string_view text);
TemporalGraph load_tgraph(const std::filesystem::path& path);

// Canonical rendering: edges sorted by (u, v) with u < v, nprime in the
// shortest fixed-point form that round-trips.
std::string format_tgraph(const TemporalGraph& graph);
void save_tgraph(const TemporalGraph& graph, const std::filesystem::path& path);

}  // namespace tempograph

#endif  // TEMPOGRAPH_GRAPH_IO_HPP_
