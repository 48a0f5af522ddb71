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

#include "fkreg/cli.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "fkreg/decompose.hpp"
#include "fkreg/generators.hpp"
#include "fkreg/homcount.hpp"
#include "fkreg/io.hpp"
#include "fkreg/kernels.hpp"
#include "fkreg/oracle.hpp"

#ifndef FKREG_VERSION
#define FKREG_VERSION "0.0.0"
#endif

namespace fkreg::cli {
namespace {

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct DecomposeFlags {
  std::string input;
  double epsilon = 0.0;
  std::string mode = "practical";
  std::uint64_t max_iter = 0;
  std::optional<double> sketch_degree;
  std::string output;
};

void add_decompose_flags(CLI::App* cmd, DecomposeFlags& f) {
  cmd->add_option("--input", f.input, "Edge-list graph file")->required();
  cmd->add_option("--epsilon", f.epsilon, "Accuracy in (0, 1)")->required();
  cmd->add_option("--mode", f.mode, "faithful | practical")->check(CLI::IsMember({"faithful", "practical"}));
  cmd->add_option("--max-iter", f.max_iter, "Term cap (0: default bound)");
  cmd->add_option("--sketch-degree", f.sketch_degree, "Heuristic expander degree (uncertified)");
}

DecomposeConfig make_config(const DecomposeFlags& f) {
  DecomposeConfig c;
  c.mode = parse_mode(f.mode);
  c.max_iterations = f.max_iter;
  c.sketch_degree = f.sketch_degree;
  return c;
}

void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InputError("--epsilon must lie in (0, 1)");
}

io::DecompositionFile to_file(const DecomposeOutcome& outcome) {
  io::DecompositionFile f;
  f.decomposition = outcome.decomposition;
  f.version = FKREG_VERSION;
  f.iterations = outcome.iterations;
  return f;
}

void print_summary(std::ostream& out, const DecomposeOutcome& o) {
  const auto& d = o.decomposition;
  out << "n " << d.n << "\n"
      << "terms " << d.terms.size() << "\n"
      << "base " << num(d.base) << "\n"
      << "frobenius_sq " << num(o.final_frobenius_sq) << "\n"
      << "certified " << (d.certified ? "true" : "false") << "\n"
      << "complete " << (d.complete ? "true" : "false") << "\n";
  if (o.oracle_sigma) out << "oracle_sigma " << num(*o.oracle_sigma) << "\n";
}

DecomposeOutcome empty_outcome(double epsilon, Mode mode) {
  DecomposeOutcome o;
  o.decomposition.n = 0;
  o.decomposition.epsilon = epsilon;
  o.decomposition.mode = mode;
  o.decomposition.certified = true;
  return o;
}

// Decomposes the input graph. On a partial result the partial artifact is
// written (when requested) and kPartial is returned through `code`.
std::optional<DecomposeOutcome> decompose_input(const DecomposeFlags& f, const io::GraphInput& g,
                                                std::ostream& out, std::ostream& err, int& code,
                                                bool write_artifact) {
  const DecomposeConfig config = make_config(f);
  if (g.n == 0) return empty_outcome(f.epsilon, config.mode);
  try {
    return run_graph_decomposition(g.graph, f.epsilon, config);
  } catch (const PartialResultError& partial) {
    print_summary(out, partial.outcome());
    if (write_artifact && !f.output.empty()) {
      io::write_file(f.output, io::format_decomposition(to_file(partial.outcome())));
    }
    err << "partial result: " << partial.what() << "\n";
    code = kPartial;
    return std::nullopt;
  }
}

int cmd_decompose(const DecomposeFlags& f, std::ostream& out, std::ostream& err) {
  check_epsilon(f.epsilon);
  const auto g = io::load_graph(f.input);
  int code = kOk;
  const auto outcome = decompose_input(f, g, out, err, code, true);
  if (!outcome) return code;
  print_summary(out, *outcome);
  if (!f.output.empty()) io::write_file(f.output, io::format_decomposition(to_file(*outcome)));
  return kOk;
}

int cmd_partition(const DecomposeFlags& f, std::ostream& out, std::ostream& err) {
  check_epsilon(f.epsilon);
  const auto g = io::load_graph(f.input);
  int code = kOk;
  const auto outcome = decompose_input(f, g, out, err, code, false);
  if (!outcome) return code;
  FKPartition p;
  if (g.n > 0) p = refine_partition(g.n, outcome->decomposition.terms, g.graph);
  out << "n " << g.n << "\n"
      << "terms " << outcome->decomposition.terms.size() << "\n"
      << "part_count " << p.part_count << "\n";
  if (!f.output.empty()) {
    io::write_file(f.output, io::format_partition(p, f.epsilon, outcome->decomposition.terms.size()));
  }
  return kOk;
}

struct CountFlags {
  DecomposeFlags base;
  std::string pattern;
  std::string schedule = "adaptive";
  std::uint64_t max_decompositions = CountConfig{}.max_decompositions;
};

BudgetSchedule parse_schedule(const std::string& text) {
  if (text == "adaptive") return BudgetSchedule::adaptive();
  if (text == "theoretical") return BudgetSchedule::theoretical();
  if (text.rfind("fixed:", 0) == 0) {
    std::vector<double> targets;
    std::stringstream ss(text.substr(6));
    std::string item;
    while (std::getline(ss, item, ',')) {
      const double t = io::parse_hex_double(item);
      if (!(t > 0.0)) throw InputError("fixed schedule targets must be positive");
      targets.push_back(t);
    }
    if (targets.empty()) throw InputError("fixed schedule needs at least one target");
    return BudgetSchedule::fixed(std::move(targets));
  }
  throw InputError("unknown schedule '" + text + "' (adaptive|theoretical|fixed:t1,t2,...)");
}

int cmd_count(const CountFlags& f, std::ostream& out) {
  check_epsilon(f.base.epsilon);
  const PatternGraph h = io::parse_pattern(f.pattern);
  const auto g = io::load_graph(f.base.input);
  CountConfig config;
  config.decompose = make_config(f.base);
  config.schedule = parse_schedule(f.schedule);
  config.max_decompositions = f.max_decompositions;

  CountReport report;
  if (h.k() == 0) {
    report.estimate = 1.0;
    report.guaranteed = true;
  } else if (g.n == 0) {
    report.guaranteed = true;
  } else {
    report = count_hom(h, g.graph, f.base.epsilon, config);
  }
  const double scale = std::pow(static_cast<double>(g.n), static_cast<double>(h.k()));
  std::ostringstream text;
  text << "pattern_vertices " << h.k() << "\n"
       << "pattern_edges " << h.edges().size() << "\n"
       << "estimate " << num(report.estimate) << "\n"
       << "scale " << num(scale) << "\n"
       << "error_bound " << num(f.base.epsilon * scale) << "\n"
       << "guaranteed " << (report.guaranteed ? "true" : "false") << "\n"
       << "decompositions " << report.decompositions << "\n"
       << "terms " << report.terms << "\n"
       << "memo_hits " << report.memo_hits << "\n"
       << "exact_leaves " << report.exact_leaves << "\n";
  out << text.str();
  if (!f.base.output.empty()) io::write_file(f.base.output, text.str());
  return kOk;
}

struct VerifyFlags {
  std::string input;
  std::string decomposition;
  bool exact_cutnorm = false;
};

int cmd_verify(const VerifyFlags& f, std::ostream& out) {
  const auto g = io::load_graph(f.input);
  const auto file = io::load_decomposition(f.decomposition);
  const auto& d = file.decomposition;
  std::optional<std::string> first_failure;
  const auto check = [&](const std::string& name, bool ok, const std::string& detail) {
    out << "check " << name << " " << (ok ? "ok" : "FAILED") << " " << detail << "\n";
    if (!ok && !first_failure) first_failure = name;
  };

  check("dimension", d.n == g.n, "n=" + std::to_string(d.n) + " graph_n=" + std::to_string(g.n));
  if (d.n == g.n && g.n > 0) {
    const auto nn = static_cast<double>(g.n);
    const CenteredGraph centered = graph_to_matrix(g.graph);
    check("base_density", d.base == centered.density, "base=" + num(d.base) + " density=" + num(centered.density));
    const bool eps_ok = d.epsilon > 0.0 && d.epsilon < 1.0;
    check("epsilon", eps_ok, "epsilon=" + num(d.epsilon));
    if (d.mode == Mode::kFaithful && eps_ok) {
      const double w = faithful_weight(d.epsilon);
      bool ok = true;
      std::size_t bad = 0;
      for (std::size_t i = 0; i < d.terms.size() && ok; ++i) {
        if (std::abs(d.terms[i].weight) != w) {
          ok = false;
          bad = i;
        }
      }
      check("faithful_weight", ok, ok ? "all |c|=" + num(w) : "term " + std::to_string(bad));
    }
    if (eps_ok) {
      const auto cap = default_iteration_cap(d.epsilon);
      check("term_count", d.terms.size() <= cap,
            "terms=" + std::to_string(d.terms.size()) + " cap=" + std::to_string(cap));
    }
    const Matrix r = residual(g.graph.adjacency(), d);
    const Norms nr = norms(r);
    double max_row = 0.0;
    double max_col = 0.0;
    for (Index i = 0; i < g.n; ++i) {
      max_row = std::max(max_row, nr.row_l2_sq[i]);
      max_col = std::max(max_col, nr.col_l2_sq[i]);
    }
    check("row_col_l2", std::max(max_row, max_col) <= nn * (1.0 + 1e-9),
          "max_row_l2_sq=" + num(max_row) + " max_col_l2_sq=" + num(max_col) + " n=" + num(nn));
    if (d.complete && eps_ok) {
      const auto sigma = oracle::top_singular(r);
      check("spectral_bound", sigma.value <= d.epsilon * nn * (1.0 + 1e-6),
            "sigma=" + num(sigma.value) + " eps_n=" + num(d.epsilon * nn));
    }
    if (f.exact_cutnorm) {
      if (g.n > oracle::kMaxExhaustiveN) {
        throw InputError("--exact-cutnorm needs n <= " + std::to_string(oracle::kMaxExhaustiveN));
      }
      const double dist = oracle::exact_cut_norm(r).value / (nn * nn);
      check("cut_distance", dist <= d.epsilon, "d_cut=" + num(dist) + " eps=" + num(d.epsilon));
    }
  }
  if (first_failure) {
    out << "verify FAILED " << *first_failure << "\n";
    return kVerifyFailed;
  }
  out << "verify ok\n";
  return kOk;
}

struct GenerateFlags {
  std::string kind = "gnp";
  Index n = 0;
  double p = 0.5;
  std::uint64_t seed = 1;
  std::string output;
};

int cmd_generate(const GenerateFlags& f, std::ostream& out) {
  WeightedGraph g;
  if (f.kind == "gnp") {
    g = gen::gnp(f.n, f.p, f.seed);
  } else if (f.kind == "complete") {
    g = gen::complete(f.n);
  } else if (f.kind == "bipartite") {
    g = gen::complete_bipartite(f.n / 2, f.n - f.n / 2);
  } else {
    g = gen::random_weighted(f.n, f.seed);
  }
  const std::string text = io::format_graph(g);
  if (f.output.empty()) {
    out << text;
  } else {
    io::write_file(f.output, text);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cut decompositions, weak regular partitions and homomorphism counts", "fkreg"};
  app.require_subcommand(1);
  app.set_version_flag("--version", FKREG_VERSION);
  int threads = 0;
  app.add_option("--threads", threads, "Worker threads (0: runtime default)")->check(CLI::NonNegativeNumber);

  DecomposeFlags dec;
  auto* c_dec = app.add_subcommand("decompose", "Cut decomposition of a graph");
  add_decompose_flags(c_dec, dec);
  c_dec->add_option("--output", dec.output, "Decomposition JSON output");

  DecomposeFlags part;
  auto* c_part = app.add_subcommand("partition", "Weak regular partition from a decomposition");
  add_decompose_flags(c_part, part);
  c_part->add_option("--output", part.output, "Partition JSON output");

  CountFlags cnt;
  auto* c_cnt = app.add_subcommand("count", "Estimate hom(H, G)");
  add_decompose_flags(c_cnt, cnt.base);
  c_cnt->add_option("--pattern", cnt.pattern, "edge | triangle | c4 | k4 | file:PATH")->required();
  c_cnt->add_option("--schedule", cnt.schedule, "adaptive | theoretical | fixed:t1,t2,...");
  c_cnt->add_option("--max-decompositions", cnt.max_decompositions, "Work limit of the recursion");
  c_cnt->add_option("--output", cnt.base.output, "Report output");

  VerifyFlags ver;
  auto* c_ver = app.add_subcommand("verify", "Re-check a decomposition against its graph");
  c_ver->add_option("--input", ver.input, "Edge-list graph file")->required();
  c_ver->add_option("--decomposition", ver.decomposition, "Decomposition JSON")->required();
  c_ver->add_flag("--exact-cutnorm", ver.exact_cutnorm, "Exhaustive cut distance (n <= 22)");

  GenerateFlags gen_flags;
  auto* c_gen = app.add_subcommand("generate", "Write a synthetic graph");
  c_gen->add_option("--kind", gen_flags.kind, "gnp | complete | bipartite | weighted")
      ->check(CLI::IsMember({"gnp", "complete", "bipartite", "weighted"}));
  c_gen->add_option("--n", gen_flags.n, "Vertex count")->required();
  c_gen->add_option("--p", gen_flags.p, "Edge probability")->check(CLI::Range(0.0, 1.0));
  c_gen->add_option("--seed", gen_flags.seed, "Random seed");
  c_gen->add_option("--output", gen_flags.output, "Graph output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  kernels::set_threads(threads);
  CLI::App* active = app.get_subcommands().front();
  try {
    if (active == c_dec) return cmd_decompose(dec, out, err);
    if (active == c_part) return cmd_partition(part, out, err);
    if (active == c_cnt) return cmd_count(cnt, out);
    if (active == c_ver) return cmd_verify(ver, out);
    return cmd_generate(gen_flags, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n\n" << active->help();
    return kInputError;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const SketchTooWeakError& e) {
    err << "sketch too weak: " << e.what() << "\n";
    return kPartial;
  } catch (const CountError& e) {
    err << "count failed: " << e.what() << "\n";
    return kPartial;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace fkreg::cli
