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

#include "wildgraph/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wildgraph/classify.hpp"
#include "wildgraph/errors.hpp"
#include "wildgraph/fission_tree.hpp"
#include "wildgraph/graph_io.hpp"
#include "wildgraph/text.hpp"

namespace wildgraph {

namespace {

using nlohmann::ordered_json;

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

template <class T>
std::vector<std::string> strs(const std::vector<T>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) {
    if constexpr (std::is_same_v<T, Rational>) {
      out.push_back(x.str());
    } else {
      out.push_back(std::to_string(x));
    }
  }
  return out;
}

ordered_json rational_matrix_json(const RatMatrix& M) {
  ordered_json j = ordered_json::array();
  for (const auto& row : M) j.push_back(strs(row));
  return j;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::NonPositiveExponent:
    case ErrorKind::ZeroMultiplicity:
    case ErrorKind::UnknownFormat:
      return kExitParse;
    default:
      return kExitPrecondition;
  }
}

struct Context {
  std::istream& in;
  std::ostream& out;
  bool json = false;
};

// Inline text if it looks like a matrix or JSON, a file otherwise.
std::string graph_text(const Context& ctx, const std::string& arg) {
  if (arg == "-") {
    std::ostringstream ss;
    ss << ctx.in.rdbuf();
    return ss.str();
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream f(arg, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    if (!f && !f.eof()) throw Error(ErrorKind::Parse, "cannot read '" + arg + "'");
    return ss.str();
  }
  auto first = arg.find_first_not_of(" \t\r\n");
  if (arg.find(';') != std::string::npos || (first != std::string::npos && (arg[first] == '[' || arg[first] == '{'))) {
    return arg;
  }
  throw Error(ErrorKind::Parse, "no such graph file '" + arg + "' (inline matrices need ';' between rows)");
}

int run_circle(const Context& ctx, const std::string& text) {
  auto c = circle_of(parse_factor(text));
  if (ctx.json) {
    ordered_json j;
    j["circle"] = format_circle(c);
    j["ramification"] = c.ram();
    j["irregularity"] = c.irr();
    j["slope"] = c.slope().str();
    j["exponents"] = strs(c.exponents());
    j["levels"] = strs(c.levels());
    j["untwisted"] = c.untwisted();
    j["loop_multiplicity"] = loop_multiplicity(c);
    j["rescaled_loop"] = rescaled_loop(c).str();
    ctx.out << j.dump(2) << "\n";
    return kExitOk;
  }
  ctx.out << "circle: " << format_circle(c) << "\n"
          << "ramification: " << c.ram() << "\n"
          << "irregularity: " << c.irr() << "\n"
          << "slope: " << c.slope() << "\n"
          << "exponents: " << join(strs(c.exponents()), ", ") << "\n"
          << "levels: " << join(strs(c.levels()), ", ") << "\n"
          << "loop multiplicity: " << loop_multiplicity(c) << "\n"
          << "rescaled loop: " << rescaled_loop(c) << "\n";
  return kExitOk;
}

int run_pair(const Context& ctx, const std::string& a, const std::string& b) {
  auto I = circle_of(parse_factor(a));
  auto J = circle_of(parse_factor(b));
  auto cp = common_part(I, J);
  auto B = edge_multiplicity(I, J);
  auto Bt = rescaled_edge(I, J);
  if (ctx.json) {
    ordered_json j;
    j["circles"] = {format_circle(I), format_circle(J)};
    j["common"] = format_circle(cp.common);
    j["fission_exponent"] = cp.fission_exponent.str();
    j["edge_multiplicity"] = B;
    j["rescaled_edge"] = Bt.str();
    ctx.out << j.dump(2) << "\n";
    return kExitOk;
  }
  ctx.out << "circles: " << format_circle(I) << ", " << format_circle(J) << "\n"
          << "common part: " << format_circle(cp.common) << "\n"
          << "fission exponent: " << cp.fission_exponent << "\n"
          << "edge multiplicity: " << B << "\n"
          << "rescaled edge: " << Bt << "\n";
  return kExitOk;
}

struct DiagramOptions {
  bool rescaled = false;
  bool dim = false;
  std::string format;
};

int run_diagram(const Context& ctx, const std::string& text, const DiagramOptions& opt) {
  auto theta = parse_class(text).to_class();
  auto d = build_diagram(theta);
  std::optional<RatMatrix> Bt;
  if (opt.rescaled) Bt = rescale(d).Bt;
  std::optional<std::int64_t> dim;
  if (opt.dim) dim = cartan_dimension(d.diagram, theta.multiplicities());

  auto format = opt.format.empty() ? (ctx.json ? DiagramFormat::Json : DiagramFormat::Matrix)
                                   : parse_diagram_format(opt.format);
  if (ctx.json && format != DiagramFormat::Json) {
    throw Error(ErrorKind::UnknownFormat, "--json only combines with the json format");
  }
  switch (format) {
    case DiagramFormat::Json: {
      auto j = ordered_json::parse(emit_diagram(d, DiagramFormat::Json));
      if (Bt) j["rescaled"] = rational_matrix_json(*Bt);
      if (dim) j["dim"] = *dim;
      ctx.out << j.dump(2) << "\n";
      break;
    }
    case DiagramFormat::Dot:
      ctx.out << emit_diagram(d, DiagramFormat::Dot);
      if (Bt) {
        std::istringstream rows(format_matrix(*Bt));
        for (std::string line; std::getline(rows, line);) ctx.out << "// rescaled: " << line << "\n";
      }
      if (dim) ctx.out << "// dim = " << *dim << "\n";
      break;
    case DiagramFormat::Matrix:
      if (!opt.format.empty()) {
        ctx.out << emit_diagram(d, DiagramFormat::Matrix);
        break;
      }
      ctx.out << "vertices:\n";
      for (std::size_t i = 0; i < d.diagram.size(); ++i) {
        ctx.out << "  " << d.diagram.vertices[i] << " = " << format_circle(d.diagram.circles[i])
                << "  r=" << d.r[i] << "  mult=" << (*d.diagram.multiplicities)[i] << "\n";
      }
      ctx.out << "B =\n" << format_matrix(d.diagram.B);
      if (Bt) ctx.out << "rescaled B =\n" << format_matrix(*Bt);
      if (dim) ctx.out << "dim = " << *dim << "\n";
      break;
  }
  return kExitOk;
}

int run_tree(const Context& ctx, const std::string& text, const std::string& format_name) {
  auto theta = parse_class(text).to_class();
  auto format = format_name.empty() ? (ctx.json ? TreeFormat::Json : TreeFormat::Ascii)
                                    : parse_tree_format(format_name);
  if (ctx.json && format != TreeFormat::Json) {
    throw Error(ErrorKind::UnknownFormat, "--json only combines with the json format");
  }
  ctx.out << render_tree(build_tree(theta), format);
  return kExitOk;
}

std::string triple_names(const Diagram& d, const Triple& t) {
  return "(" + d.vertices[t[0]] + ", " + d.vertices[t[1]] + ", " + d.vertices[t[2]] + ")";
}

std::string triangle_text(const Diagram& d, const Triple& t) {
  const auto& B = d.B;
  return triple_names(d, t) + " with multiplicities " + std::to_string(B[t[0]][t[1]]) + ", " +
         std::to_string(B[t[0]][t[2]]) + ", " + std::to_string(B[t[1]][t[2]]);
}

ordered_json witness_json(const Diagram& d, const std::vector<std::pair<std::int64_t, ExponentialFactor>>& factors) {
  ordered_json out = ordered_json::array();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    out.push_back({{"vertex", d.vertices[i]}, {"mult", factors[i].first}, {"factor", format_factor(factors[i].second)}});
  }
  return out;
}

void print_witness(const Context& ctx, const Diagram& d,
                   const std::vector<std::pair<std::int64_t, ExponentialFactor>>& factors) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    ctx.out << "  " << d.vertices[i] << " = <" << format_factor(factors[i].second) << ">\n";
  }
}

int run_classify(const Context& ctx, const std::string& arg, const FeasibilityOptions& options) {
  auto d = parse_diagram(graph_text(ctx, arg));
  auto v = classify(d.diagram, options);
  const auto& D = d.diagram;
  int code = v.tag == VerdictTag::NotNAH ? kExitNotNAH : v.complete ? kExitOk : kExitIncomplete;
  if (ctx.json) {
    ordered_json j;
    j["verdict"] = to_string(v.tag);
    j["complete"] = v.complete;
    j["vertices"] = D.vertices;
    if (v.witness) {
      j["witness"] = format_class(*v.witness);
      j["factors"] = witness_json(D, v.witness_factors);
    }
    if (v.violation) j["violation"] = {D.vertices[(*v.violation)[0]], D.vertices[(*v.violation)[1]], D.vertices[(*v.violation)[2]]};
    if (v.tag == VerdictTag::Candidate) j["decoration"] = v.decoration;
    if (v.certificate) {
      j["certificate"] = {{"nodes_explored", v.certificate->nodes_explored},
                          {"dead_ends", v.certificate->dead_ends.size()},
                          {"truncated", v.certificate->truncated}};
    }
    ctx.out << j.dump(2) << "\n";
    return code;
  }
  ctx.out << "verdict: " << to_string(v.tag) << "\n";
  if (v.violation) ctx.out << "not acute isosceles: triangle " << triangle_text(D, *v.violation) << "\n";
  switch (v.tag) {
    case VerdictTag::FissionGraph:
      ctx.out << "witness: " << format_class(*v.witness) << "\n";
      print_witness(ctx, D, v.witness_factors);
      break;
    case VerdictTag::Candidate:
      ctx.out << "decoration: r = (" << join(strs(v.decoration), ", ") << ")\n";
      break;
    case VerdictTag::NotNAH: {
      const auto& c = *v.certificate;
      auto plural = [](std::size_t n, const char* word) {
        return std::to_string(n) + " " + word + (n == 1 ? "" : "s");
      };
      ctx.out << "no positive decoration: " << plural(c.dead_ends.size(), "dead end") << (c.truncated ? " (more not recorded)" : "")
              << ", " << plural(c.nodes_explored, "search node") << "\n";
      for (std::size_t k = 0; k < std::min<std::size_t>(c.dead_ends.size(), 5); ++k) {
        const auto& e = c.dead_ends[k];
        std::vector<std::string> path;
        for (const auto& p : e.path) path.push_back(triple_names(D, p.triple) + "@" + D.vertices[p.apex]);
        ctx.out << "  [" << join(path, " ") << "] blocks "
                << (e.blocking[0] < 0 ? std::string("the loop conditions") : triple_names(D, e.blocking)) << "\n";
      }
      break;
    }
    case VerdictTag::NotApplicable:
      ctx.out << "search incomplete: more than " << options.max_vertices
              << " vertices and no decoration up to r = " << options.r_max << "\n";
      break;
  }
  return code;
}

int run_realize(const Context& ctx, const std::string& arg) {
  auto d = parse_diagram(graph_text(ctx, arg));
  const auto& D = d.diagram;
  if (!D.is_graph()) throw Error(ErrorKind::NotAGraph, "diagram has loops or negative edges");
  auto check = is_acute_isosceles(D);
  if (!check.ok) {
    throw Error(ErrorKind::UltrametricViolation,
                "not a fission graph: triangle " + triangle_text(D, *check.violation) + " is not acute isosceles");
  }
  auto factors = realize_untwisted_factors(fission_forest(D));
  auto theta = IrregularClass::from_factors(factors);
  if (ctx.json) {
    ordered_json j;
    j["class"] = format_class(theta);
    j["factors"] = witness_json(D, factors);
    ctx.out << j.dump(2) << "\n";
  } else {
    ctx.out << format_class(theta) << "\n";
    print_witness(ctx, D, factors);
  }
  return kExitOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wild character variety diagrams: Stokes circles, core diagrams, fission trees."};
  app.name(args.empty() ? "wildgraph" : args[0]);
  app.require_subcommand(1);
  Context ctx{in, out};
  app.add_flag("--json", ctx.json, "Machine-readable JSON output");

  std::string a, b, format;
  DiagramOptions dopt;
  FeasibilityOptions fopt;

  auto* circle = app.add_subcommand("circle", "Invariants of one Stokes circle");
  circle->add_option("factor", a, "Exponential factor, e.g. \"z^(3/2)\"")->required();
  auto* pair = app.add_subcommand("pair", "Common part and edge multiplicity of two circles");
  pair->add_option("first", a)->required();
  pair->add_option("second", b)->required();
  auto* diagram = app.add_subcommand("diagram", "Core diagram of an irregular class");
  diagram->add_option("class", a, "Class, e.g. \"<z^3> + 2*<z^(4/3)>\"")->required();
  diagram->add_flag("--rescaled", dopt.rescaled, "Also print the rescaled matrix");
  diagram->add_flag("--dim", dopt.dim, "Also print 2 - d^T (2 Id - B) d with d the multiplicities");
  diagram->add_option("--format", dopt.format, "matrix, json or dot");
  auto* tree = app.add_subcommand("tree", "Fission tree of an irregular class");
  tree->add_option("class", a)->required();
  tree->add_option("--format", format, "ascii, dot or json");
  auto* cls = app.add_subcommand("classify", "Classify a graph or diagram");
  cls->add_option("graph", a, "Graph file, inline matrix \"0 1; 1 0\", or - for stdin")->required();
  cls->add_option("--rmax", fopt.r_max, "Bound of the fallback decoration search")->check(CLI::Range(1, 1 << 20));
  cls->add_option("--max-vertices", fopt.max_vertices, "Largest diagram given the exact pattern search");
  auto* realize = app.add_subcommand("realize", "Untwisted class realizing a fission graph");
  realize->add_option("graph", a)->required();

  std::vector<const char*> argv;
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (circle->parsed()) return run_circle(ctx, a);
    if (pair->parsed()) return run_pair(ctx, a, b);
    if (diagram->parsed()) return run_diagram(ctx, a, dopt);
    if (tree->parsed()) return run_tree(ctx, a, format);
    if (cls->parsed()) return run_classify(ctx, a, fopt);
    if (realize->parsed()) return run_realize(ctx, a);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kExitParse;
}

}  // namespace wildgraph
