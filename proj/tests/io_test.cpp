// Copyright 2026 The fkreg Authors.
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

#include <cmath>

#include "fkreg/generators.hpp"
#include "fkreg/io.hpp"

namespace fkreg {
namespace {

TEST(GraphParseTest, HeaderCommentsWeights) {
  const auto in = io::parse_graph_text("# header\nn 5\n0 1\n\n2 3 0.25 # weighted\n");
  EXPECT_EQ(in.n, 5u);
  EXPECT_EQ(in.graph.weight(1, 0), 1.0);
  EXPECT_EQ(in.graph.weight(3, 2), 0.25);
  EXPECT_EQ(in.graph.weight(4, 0), 0.0);
}

TEST(GraphParseTest, ImplicitSize) {
  const auto in = io::parse_graph_text("0 3\n");
  EXPECT_EQ(in.n, 4u);
  EXPECT_EQ(io::parse_graph_text("# nothing\n").n, 0u);
  EXPECT_EQ(io::parse_graph_text("").n, 0u);
}

TEST(GraphParseTest, Rejections) {
  EXPECT_THROW(io::parse_graph_text("1 1\n"), InputError);
  EXPECT_THROW(io::parse_graph_text("0 1\n1 0\n"), InputError);
  EXPECT_THROW(io::parse_graph_text("0 1 1.5\n"), InputError);
  EXPECT_THROW(io::parse_graph_text("0 x\n"), InputError);
  EXPECT_THROW(io::parse_graph_text("n 2\n0 2\n"), InputError);
  EXPECT_THROW(io::parse_graph_text("0 1 0.5 7\n"), InputError);
  EXPECT_THROW(io::parse_graph_text("0 1\nn 3\n"), InputError);
}

TEST(GraphParseTest, FormatRoundTrip) {
  const WeightedGraph g = gen::random_weighted(9, 3);
  const auto back = io::parse_graph_text(io::format_graph(g));
  EXPECT_EQ(back.graph.adjacency(), g.adjacency());
}

TEST(PatternTest, Names) {
  EXPECT_EQ(io::parse_pattern("edge").edges().size(), 1u);
  EXPECT_EQ(io::parse_pattern("triangle").k(), 3u);
  EXPECT_EQ(io::parse_pattern("c4").edges().size(), 4u);
  EXPECT_EQ(io::parse_pattern("k4").edges().size(), 6u);
  EXPECT_THROW(io::parse_pattern("k5"), InputError);
  EXPECT_THROW(io::parse_pattern("file:/nonexistent/pattern.txt"), InputError);
}

TEST(HexDoubleTest, RoundTrip) {
  for (double x : {0.0, -0.0, 1.0 / 3.0, -2.5e-300, 0x1.fffffffffffffp+1023, 4.9e-324}) {
    const double y = io::parse_hex_double(io::hex_double(x));
    EXPECT_EQ(std::signbit(x), std::signbit(y));
    EXPECT_EQ(x, y);
  }
  EXPECT_THROW(io::parse_hex_double("abc"), InputError);
  EXPECT_THROW(io::parse_hex_double(""), InputError);
}

TEST(DecompositionFileTest, RoundTripIsExact) {
  const WeightedGraph g = gen::complete_bipartite(10, 12);
  const auto out = run_graph_decomposition(g, 0.3);
  io::DecompositionFile f;
  f.decomposition = out.decomposition;
  f.version = "test";
  f.iterations = out.iterations;
  const std::string text = io::format_decomposition(f);
  const auto back = io::parse_decomposition(text);
  EXPECT_EQ(back.decomposition, f.decomposition);
  EXPECT_EQ(back.iterations, f.iterations);
  EXPECT_EQ(residual(g.adjacency(), back.decomposition), residual(g.adjacency(), f.decomposition));
  EXPECT_EQ(io::format_decomposition(back), text);
}

TEST(DecompositionFileTest, Rejections) {
  EXPECT_THROW(io::parse_decomposition("{"), InputError);
  EXPECT_THROW(io::parse_decomposition("[]"), InputError);
  EXPECT_THROW(io::parse_decomposition(R"({"n":2,"epsilon":"0x1p-1","mode":"practical","base":"0x0p+0",
    "terms":[{"c":"0x1p-1","S":[3],"T":[0]}]})"),
               InputError);
}

TEST(PartitionFileTest, RoundTrip) {
  const WeightedGraph g = gen::gnp(12, 0.5, 4);
  const auto d = decompose_graph(g, 0.3);
  const FKPartition p = refine_partition(12, d.terms, g);
  EXPECT_EQ(io::parse_partition(io::format_partition(p, 0.3, d.terms.size())), p);
}

}  // namespace
}  // namespace fkreg
