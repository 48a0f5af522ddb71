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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "fkreg/core.hpp"
#include "fkreg/decompose.hpp"

namespace fkreg::io {

/// Parsed edge list. `n == 0` means the file held no vertices.
struct GraphInput {
  Index n = 0;
  WeightedGraph graph;
};

/// Lines "u v [w]" with optional "n <count>" header; '#' starts a comment.
GraphInput parse_graph(std::istream& in, std::string_view source = "<input>");
GraphInput parse_graph_text(std::string_view text, std::string_view source = "<input>");
GraphInput load_graph(const std::string& path);
std::string format_graph(const WeightedGraph& g);

/// edge | triangle | c4 | k4 | file:PATH (edge list over [k]).
PatternGraph parse_pattern(std::string_view name);

/// Exact hex-float text of a double and its inverse.
std::string hex_double(double x);
double parse_hex_double(std::string_view text);

struct DecompositionFile {
  CutDecomposition decomposition;
  std::string tool = "fkreg";
  std::string version;
  std::uint64_t iterations = 0;
};

std::string format_decomposition(const DecompositionFile& file);
DecompositionFile parse_decomposition(std::string_view text);
DecompositionFile load_decomposition(const std::string& path);

std::string format_partition(const FKPartition& partition, double epsilon, std::uint64_t terms);
FKPartition parse_partition(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace fkreg::io
