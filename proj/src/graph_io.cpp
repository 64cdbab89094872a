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

#include "tempograph/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <system_error>
#include <utility>
#include <vector>

#include "tempograph/errors.hpp"

namespace tempograph {
namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line,
                         std::string_view what) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) {
        return c >= '0' && c <= '9';
      })) {
    throw ParseError(line, "expected a non-negative integer for " +
                               std::string(what) + ", got '" +
                               std::string(tok) + "'");
  }
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string(what) + " out of range");
  }
  return value;
}

double parse_decimal(std::string_view tok, std::size_t line) {
  // digits[.digits]
  std::size_t dot = tok.find('.');
  std::string_view int_part = tok.substr(0, dot);
  std::string_view frac_part =
      dot == std::string_view::npos ? std::string_view{} : tok.substr(dot + 1);
  auto digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
      return c >= '0' && c <= '9';
    });
  };
  if (!digits(int_part) || (dot != std::string_view::npos && !digits(frac_part))) {
    throw ParseError(line, "nprime must be a decimal number, got '" +
                               std::string(tok) + "'");
  }
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value,
                                   std::chars_format::fixed);
  if (ec != std::errc() || ptr != tok.data() + tok.size() ||
      !std::isfinite(value)) {
    throw ParseError(line, "nprime out of range");
  }
  if (!(value > 0.0)) throw ParseError(line, "nprime must be positive");
  return value;
}

std::string_view field(std::string_view tok, std::string_view key,
                       std::size_t line) {
  if (tok.size() <= key.size() + 1 || tok.substr(0, key.size()) != key ||
      tok[key.size()] != '=') {
    throw ParseError(line, "expected '" + std::string(key) + "=<value>', got '" +
                               std::string(tok) + "'");
  }
  return tok.substr(key.size() + 1);
}

}  // namespace

TemporalGraph parse_tgraph(std::string_view text) {
  std::vector<std::string_view> lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();

  enum class Stage { kMagic, kHeader, kEdges } stage = Stage::kMagic;
  std::uint64_t n = 0;
  std::uint64_t a = 0;
  double nprime = 0.0;
  std::vector<LabeledEdge> edges;
  std::set<std::pair<Vertex, Vertex>> seen;

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    std::string_view line = lines[i];
    if (!line.empty() && line.front() == '#') continue;
    if (line.find('\r') != std::string_view::npos) {
      throw ParseError(line_no, "carriage return found; expected LF endings");
    }
    switch (stage) {
      case Stage::kMagic:
        if (line != "tgraph 1") {
          throw ParseError(line_no, "expected header 'tgraph 1'");
        }
        stage = Stage::kHeader;
        break;
      case Stage::kHeader: {
        auto toks = split(line, ' ');
        if (toks.size() != 3) {
          throw ParseError(line_no, "expected 'n=<int> a=<int> nprime=<decimal>'");
        }
        n = parse_uint(field(toks[0], "n", line_no), line_no, "n");
        a = parse_uint(field(toks[1], "a", line_no), line_no, "a");
        nprime = parse_decimal(field(toks[2], "nprime", line_no), line_no);
        if (n == 0) throw ParseError(line_no, "n must be positive");
        if (n > (std::uint64_t{1} << 31)) throw ParseError(line_no, "n too large");
        if (a == 0) throw ParseError(line_no, "a must be positive");
        if (a > kUnreachable - 1) throw ParseError(line_no, "a too large");
        stage = Stage::kEdges;
        break;
      }
      case Stage::kEdges: {
        auto toks = split(line, ' ');
        if (toks.size() != 3) {
          throw ParseError(line_no, "expected '<u> <v> <l1>[,<l2>,...]'");
        }
        std::uint64_t u = parse_uint(toks[0], line_no, "u");
        std::uint64_t v = parse_uint(toks[1], line_no, "v");
        if (u >= n || v >= n) {
          throw ParseError(line_no, "vertex index out of range [0, " +
                                        std::to_string(n) + ")");
        }
        if (u == v) throw ParseError(line_no, "self-loop");
        const auto lo = static_cast<Vertex>(std::min(u, v));
        const auto hi = static_cast<Vertex>(std::max(u, v));
        const std::pair<Vertex, Vertex> key{lo, hi};
        if (!seen.insert(key).second) {
          throw ParseError(line_no, "edge {" + std::to_string(key.first) + "," +
                                        std::to_string(key.second) +
                                        "} appears twice");
        }
        LabeledEdge edge{key.first, key.second, {}};
        for (std::string_view tok : split(toks[2], ',')) {
          std::uint64_t l = parse_uint(tok, line_no, "label");
          if (l < 1 || l > a) {
            throw ParseError(line_no, "label " + std::to_string(l) +
                                          " outside [1, " + std::to_string(a) +
                                          "]");
          }
          if (!edge.labels.empty() && edge.labels.back() >= l) {
            throw ParseError(line_no, "labels must be strictly ascending");
          }
          edge.labels.push_back(static_cast<Label>(l));
        }
        edges.push_back(std::move(edge));
        break;
      }
    }
  }
  if (stage != Stage::kEdges) {
    throw ParseError(lines.size() + 1, "unexpected end of input before header");
  }
  return TemporalGraph(n, std::move(edges), static_cast<Label>(a), nprime);
}

TemporalGraph load_tgraph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_tgraph(buf.str());
}

std::string format_tgraph(const TemporalGraph& graph) {
  char nprime[64];
  auto res = std::to_chars(nprime, nprime + sizeof nprime, graph.slow_arrival(),
                           std::chars_format::fixed);
  std::string out = "tgraph 1\n";
  out += "n=" + std::to_string(graph.num_vertices()) +
         " a=" + std::to_string(graph.max_label()) + " nprime=" +
         std::string(nprime, res.ptr) + "\n";
  for (const auto& e : graph.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + " ";
    for (std::size_t i = 0; i < e.labels.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(e.labels[i]);
    }
    out += '\n';
  }
  return out;
}

void save_tgraph(const TemporalGraph& graph,
                 const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path.string());
  out << format_tgraph(graph);
  if (!out) throw InputError("write failed for " + path.string());
}

}  // namespace tempograph
