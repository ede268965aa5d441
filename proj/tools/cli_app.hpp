// Copyright 2026 The t2fuzzy Authors
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

// The t2fuzzy command line: eval, axioms, plot, separation.
//
// Exit codes: 0 success, 1 axiom or separation failure, 2 usage,
// 3 validation (malformed input or input outside an operation's domain),
// 4 I/O.

#include "t2fuzzy/t2fuzzy.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace t2fuzzy::cli {

enum ExitCode : int { ok = 0, failed = 1, usage = 2, validation = 3, io = 4 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

inline ScalarConnective connective_named(const std::string& name) {
  auto c = find_connective(name);
  if (!c) throw UsageError("unknown connective '" + name + "'");
  return *c;
}

/// A parsed "conv-meet[:outer[:star]]" or "conv-join[:outer[:star]]".
struct ConvolutionSpec {
  bool join_side = false;
  ScalarConnective outer;
  ScalarConnective star;
};

inline std::optional<ConvolutionSpec> parse_convolution(const std::string& op) {
  auto parts = split(op, ':');
  if (parts.empty() || (parts[0] != "conv-meet" && parts[0] != "conv-join")) return std::nullopt;
  if (parts.size() > 3) throw UsageError("too many ':' fields in '" + op + "'");
  ConvolutionSpec spec;
  spec.join_side = parts[0] == "conv-join";
  spec.outer = connective_named(parts.size() > 1 ? parts[1] : spec.join_side ? "max" : "min");
  spec.star = connective_named(parts.size() > 2 ? parts[2] : "min");
  if (spec.join_side && spec.outer.profile != ConnectiveProfile::t_conorm)
    throw UsageError("conv-join needs a t-conorm, got '" + spec.outer.name + "'");
  if (!spec.join_side && spec.outer.profile != ConnectiveProfile::t_norm)
    throw UsageError("conv-meet needs a t-norm, got '" + spec.outer.name + "'");
  return spec;
}

using UnaryFn = std::function<PiecewiseFn(const PiecewiseFn&)>;

inline std::optional<UnaryFn> unary_op(const std::string& name) {
  if (name == "neg") return UnaryFn(reflect);
  if (name == "env-left") return UnaryFn(envelope_left);
  if (name == "env-right") return UnaryFn(envelope_right);
  if (name == "env-left-strict") return UnaryFn(envelope_left_strict);
  if (name == "env-right-strict") return UnaryFn(envelope_right_strict);
  return std::nullopt;
}

/// Binary operations on M or L addressable by name, including the exact
/// convolutions that have a closed form.
inline std::optional<TruthValueOp> binary_op(const std::string& name) {
  if (name == "star") return star_op();
  if (name == "costar") return costar_op();
  if (name == "meet") return meet_op();
  if (name == "join") return join_op();
  if (name == "min") return TruthValueOp{"min", pointwise_min};
  if (name == "max") return TruthValueOp{"max", pointwise_max};
  if (auto spec = parse_convolution(name)) {
    auto op = exact_convolution_op(spec->join_side, spec->outer, spec->star);
    if (!op)
      throw UsageError("'" + name + "' has no exact form; only min/max outer connectives "
                       "with * = min or lukasiewicz are supported here");
    return op;
  }
  return std::nullopt;
}

inline std::string render(const Rational& r, bool decimal) {
  return decimal ? to_decimal(r) : to_string(r);
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open '" + path + "' for writing");
  os << text;
  if (!os) throw IoError("write to '" + path + "' failed");
}

struct EvalArgs {
  std::string op;
  std::vector<std::string> files;
  std::size_t samples = 11;
  std::size_t grid = 200;
  bool decimal = false;
  std::string out;
};

inline int cmd_eval(const EvalArgs& a, std::ostream& out) {
  auto arity = [&](std::size_t n) {
    if (a.files.size() != n)
      throw UsageError("'" + a.op + "' takes " + std::to_string(n) + " input file(s), got " +
                       std::to_string(a.files.size()));
  };

  if (auto spec = parse_convolution(a.op)) {
    arity(2);
    PiecewiseFn f = load_function(a.files[0]);
    PiecewiseFn g = load_function(a.files[1]);
    GridSpec grid = GridSpec::make(a.grid);
    GridFn r = spec->join_side ? convolve_join(f, g, spec->star, spec->outer, grid)
                               : convolve_meet(f, g, spec->star, spec->outer, grid);
    std::string csv = r.to_csv(a.decimal);
    out << csv;
    if (!a.out.empty()) write_file(a.out, csv);
    return ok;
  }

  PiecewiseFn result = PiecewiseFn::constant(Rational(0));
  if (auto u = unary_op(a.op)) {
    arity(1);
    result = canonicalize((*u)(load_function(a.files[0])));
  } else if (auto b = binary_op(a.op)) {
    arity(2);
    result = canonicalize((*b)(load_function(a.files[0]), load_function(a.files[1])));
  } else {
    throw UsageError("unknown operation '" + a.op + "'");
  }

  if (a.samples < 2 && a.samples != 0) throw UsageError("--samples must be 0 or at least 2");
  std::vector<Rational> xs = result.breakpoints();
  for (std::size_t k = 0; k < a.samples; ++k)
    xs.push_back(make_rational(static_cast<long long>(k), static_cast<long long>(a.samples - 1)));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  out << "x,value\n";
  for (const auto& x : xs) out << render(x, a.decimal) << "," << render(result(x), a.decimal) << "\n";
  if (!a.out.empty()) write_file(a.out, dump_function(result) + "\n");
  return ok;
}

struct AxiomsArgs {
  std::string op;
  std::string kind;
  std::uint64_t seed = 1;
  std::size_t trials = 200;
  std::string out;
};

inline int cmd_axioms(const AxiomsArgs& a, std::ostream& out) {
  auto kind = parse_tr_kind(a.kind);
  if (!kind) throw UsageError("kind must be tr-norm or tr-conorm, got '" + a.kind + "'");
  auto op = binary_op(a.op);
  if (!op) throw UsageError("unknown operation '" + a.op + "'");
  if (a.trials == 0) throw UsageError("--trials must be positive");

  GeneratorConfig config;
  config.seed = a.seed;
  TrialBudget budget;
  budget.pairs = a.trials;
  budget.triples = std::max<std::size_t>(1, a.trials / 2);
  budget.neutral = std::max<std::size_t>(1, a.trials / 2);
  budget.monotone = std::max<std::size_t>(1, a.trials / 2);

  auto reports = check_tr_axioms(*op, *kind, config, budget);
  out << op->name << " as " << to_string(*kind) << " (seed " << a.seed << ")\n";
  out << format_table(reports);
  const bool pass = all_passed(reports);
  out << (pass ? "all axioms hold\n" : "axiom failures found\n");
  if (!a.out.empty()) write_file(a.out, to_json(reports).dump(2) + "\n");
  return pass ? ok : failed;
}

struct PlotArgs {
  std::vector<std::string> files;
  std::vector<std::string> labels;
  std::string out;
};

inline int cmd_plot(const PlotArgs& a, std::ostream& out) {
  if (!a.labels.empty() && a.labels.size() != a.files.size())
    throw UsageError("--labels needs one label per input file");
  std::vector<PlotSeries> series;
  for (std::size_t i = 0; i < a.files.size(); ++i) {
    std::string label = a.labels.empty() ? std::filesystem::path(a.files[i]).stem().string()
                                         : a.labels[i];
    series.push_back({label, load_function(a.files[i])});
  }
  write_file(a.out, render_svg(series));
  out << "wrote " << a.out << "\n";
  return ok;
}

struct SeparationArgs {
  std::size_t grid = 200;
  std::string stars = "min,product,lukasiewicz";
  bool decimal = false;
};

inline int cmd_separation(const SeparationArgs& a, std::ostream& out) {
  auto names = split(a.stars, ',');
  if (names.empty()) throw UsageError("--stars must name at least one t-norm");
  std::vector<ScalarConnective> stars;
  for (const auto& n : names) {
    auto c = connective_named(n);
    if (c.profile != ConnectiveProfile::t_norm) throw UsageError("'" + n + "' is not a t-norm");
    stars.push_back(c);
  }
  auto report = replicate_separation(stars, GridSpec::make(a.grid));

  char line[160];
  std::snprintf(line, sizeof line, "%-14s %-22s %-22s %s\n", "star", "(psi star 1_{4/5})(4/5)",
                "conv_meet at 4/5", "verdict");
  out << "grid 1/" << a.grid << "\n" << line;
  for (const auto& row : report.rows) {
    std::string oracle = row.oracle_value ? render(*row.oracle_value, a.decimal) : "undefined";
    std::snprintf(line, sizeof line, "%-14s %-22s %-22s %s\n", row.star.c_str(),
                  render(row.star_value, a.decimal).c_str(), oracle.c_str(),
                  row.separated ? "separated" : "NOT separated");
    out << line;
  }
  return report.report.passed ? ok : failed;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact algebra of type-2 fuzzy truth values", "t2fuzzy"};
  app.require_subcommand(1);

  EvalArgs eval;
  auto* e = app.add_subcommand("eval", "Evaluate an operation and print x,value rows");
  e->add_option("op", eval.op,
                "star costar meet join min max neg env-left env-right env-left-strict "
                "env-right-strict conv-meet[:tnorm[:star]] conv-join[:tconorm[:star]]")
      ->required();
  e->add_option("files", eval.files, "Input function files (JSON)")->required();
  e->add_option("--samples", eval.samples, "Evenly spaced sample points, 0 for breakpoints only")
      ->capture_default_str();
  e->add_option("--grid", eval.grid, "Grid resolution for conv-* operations")
      ->capture_default_str();
  e->add_flag("--decimal", eval.decimal, "Print decimals instead of exact p/q");
  e->add_option("--out", eval.out, "Also write the result (JSON, or CSV for conv-*)");

  AxiomsArgs ax;
  auto* x = app.add_subcommand("axioms", "Check the t_r-norm or t_r-conorm axioms");
  x->add_option("op", ax.op, "star costar meet join conv-meet[:tnorm[:star]] conv-join[...]")
      ->required();
  x->add_option("kind", ax.kind, "tr-norm or tr-conorm")->required();
  x->add_option("--seed", ax.seed, "Generator seed")->capture_default_str();
  x->add_option("--trials", ax.trials, "Random pairs; triples and others use half")
      ->capture_default_str();
  x->add_option("--out", ax.out, "Also write the reports as JSON");

  PlotArgs plot;
  auto* p = app.add_subcommand("plot", "Render functions to SVG");
  p->add_option("files", plot.files, "Input function files (JSON)")->required();
  p->add_option("--labels", plot.labels, "Legend labels, one per file")->delimiter(',');
  p->add_option("--out", plot.out, "Output SVG path")->required();

  SeparationArgs sep;
  auto* s = app.add_subcommand("separation", "Show that star is not a convolution");
  s->add_option("--grid", sep.grid, "Grid resolution; must contain 4/5")->capture_default_str();
  s->add_option("--stars", sep.stars, "Comma-separated t-norms for *")->capture_default_str();
  s->add_flag("--decimal", sep.decimal, "Print decimals instead of exact p/q");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex, out, err);
  } catch (const CLI::CallForAllHelp& ex) {
    return app.exit(ex, out, err);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex, out, err);
    return usage;
  }

  try {
    if (*e) return cmd_eval(eval, out);
    if (*x) return cmd_axioms(ax, out);
    if (*p) return cmd_plot(plot, out);
    if (*s) return cmd_separation(sep, out);
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << "\n";
    return usage;
  } catch (const IoError& ex) {
    err << "error: " << ex.what() << "\n";
    return io;
  } catch (const ValidationError& ex) {
    err << "error: " << ex.what() << "\n";
    return validation;
  } catch (const DomainError& ex) {
    err << "error: " << ex.what() << "\n";
    return validation;
  }
  return usage;
}

}  // namespace t2fuzzy::cli
