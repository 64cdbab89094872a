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

#include <gtest/gtest.h>

#include <filesystem>

#include "tempograph/errors.hpp"
#include "tempograph/graph_io.hpp"
#include "tempograph/sampling.hpp"

using namespace tempograph;

namespace {

std::size_t parse_error_line(std::string_view text) {
  try {
    parse_tgraph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(GraphIo, ParsesMinimalGraph) {
  auto g = parse_tgraph("tgraph 1\nn=3 a=4 nprime=2.5\n# comment\n0 1 1,3\n2 1 4\n");
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.max_label(), 4u);
  EXPECT_EQ(g.slow_arrival(), 2.5);
  ASSERT_EQ(g.edges().size(), 2u);
  EXPECT_EQ(g.edges()[0].labels, (std::vector<Label>{1, 3}));
  EXPECT_EQ(g.edges()[1].u, 1u);
  EXPECT_EQ(g.edges()[1].v, 2u);
}

TEST(GraphIo, RoundTripsSampledGraphs) {
  const auto base = make_clique(7);
  for (std::uint64_t i = 0; i < 20; ++i) {
    auto g = sample_labeling({&base, UniformLabels{7}, 9, i, 3.5});
    EXPECT_EQ(parse_tgraph(format_tgraph(g)), g);
  }
}

TEST(GraphIo, SaveAndLoad) {
  const auto path = std::filesystem::temp_directory_path() / "tempograph_io_test.tg";
  const auto base = make_star(4);
  auto g = sample_labeling({&base, UniformLabels{5}, 1, 0, 3});
  save_tgraph(g, path);
  EXPECT_EQ(load_tgraph(path), g);
  std::filesystem::remove(path);
  EXPECT_THROW(load_tgraph(path), InputError);
}

TEST(GraphIo, ReportsLineNumbers) {
  EXPECT_EQ(parse_error_line("graph 1\n"), 1u);
  EXPECT_EQ(parse_error_line("tgraph 1\nn=3 a=2\n"), 2u);
  EXPECT_EQ(parse_error_line("tgraph 1\nn=3 a=2 nprime=-1\n"), 2u);
  EXPECT_EQ(parse_error_line("tgraph 1\nn=3 a=2 nprime=1e3\n"), 2u);
  EXPECT_EQ(parse_error_line("tgraph 1\nn=3 a=2 nprime=2\n0 1 1\n1 0 2\n"), 4u);
  EXPECT_EQ(parse_error_line("tgraph 1\nn=3 a=2 nprime=2\n0 0 1\n"), 3u);
  EXPECT_EQ(parse_error_line("tgraph 1\nn=3 a=2 nprime=2\n0 3 1\n"), 3u);
  EXPECT_EQ(parse_error_line("tgraph 1\nn=3 a=2 nprime=2\n0 1 3\n"), 3u);
  EXPECT_EQ(parse_error_line("tgraph 1\nn=3 a=2 nprime=2\n0 1 2,1\n"), 3u);
  EXPECT_EQ(parse_error_line("tgraph 1\nn=3 a=2 nprime=2\n0 1 1,1\n"), 3u);
  EXPECT_EQ(parse_error_line("tgraph 1\nn=3 a=2 nprime=2\n0 1\n"), 3u);
  EXPECT_EQ(parse_error_line("tgraph 1\nn=3 a=2 nprime=2\n\n"), 3u);
  EXPECT_EQ(parse_error_line("tgraph 1\r\nn=3 a=2 nprime=2\n"), 1u);
  EXPECT_EQ(parse_error_line("tgraph 1\n"), 2u);
}
