#include "kemeny/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>

#include "kemeny/barbell.hpp"
#include "kemeny/census.hpp"
#include "kemeny/charpoly.hpp"
#include "kemeny/closed_forms.hpp"
#include "kemeny/enumerate.hpp"
#include "kemeny/error.hpp"
#include "kemeny/generators.hpp"
#include "kemeny/graph6.hpp"
#include "kemeny/kemeny.hpp"
#include "kemeny/report.hpp"

namespace kemeny::cli {

namespace {

using nlohmann::json;

class Usage : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::size_t to_size(std::string_view s, std::string_view what) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw ValidationError(std::string(what) + ": expected a non-negative integer, got '" +
                          std::string(s) + "'");
  return v;
}

double to_real(std::string_view s, std::string_view what) {
  double v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw ValidationError(std::string(what) + ": expected a number, got '" + std::string(s) + "'");
  return v;
}

std::vector<std::size_t> size_args(const std::string& name, const std::string& args,
                                   std::size_t count) {
  const auto parts = args.empty() ? std::vector<std::string>{} : split(args, ',');
  if (parts.size() != count)
    throw ValidationError("generator '" + name + "' takes " + std::to_string(count) +
                          " integer argument" + (count == 1 ? "" : "s") + ", got '" + args + "'");
  std::vector<std::size_t> out;
  for (const auto& p : parts) out.push_back(to_size(p, name));
  return out;
}

BarbellParams barbell_params(const std::string& args) {
  const auto v = size_args("barbell", args, 3);
  BarbellParams p{v[0], v[1], v[2]};
  validate(p);
  return p;
}

constexpr std::string_view kSpecHelp =
    "complete:n, cycle:n, path:k, star:k, bipartite:c,d, necklace:k, barbell:k,a,b, cube:d, "
    "petersen, linked-squares, random:n,p,seed, random-regular:n,d,seed, or a graph6 string";

std::istream& open_input(const std::string& path, std::ifstream& file, const RunHooks& hooks) {
  if (path == "-") return hooks.stdin_stream ? *hooks.stdin_stream : std::cin;
  file.open(path);
  if (!file) throw ValidationError("cannot open input file '" + path + "'");
  return file;
}

ScalarPolicy scalars(const RunConfig& c) { return ScalarPolicy{c.scalar_mode, c.exact_cap}; }

OutputFormat format_or(const RunConfig& c, OutputFormat fallback) {
  return c.output.value_or(fallback);
}

json exact_or_float(const std::optional<Rational>& exact, double value) {
  if (exact) return to_string(*exact);
  return round12(value);
}

json bounds_json(const std::vector<BoundCheck>& checks) {
  json a = json::array();
  for (const auto& b : checks) {
    json j{{"name", b.name},         {"lhs", round12(b.lhs)},     {"rhs", round12(b.rhs)},
           {"margin", round12(b.margin)}, {"strict", b.strict},   {"satisfied", b.satisfied},
           {"equality", b.equality}, {"exempt", b.exempt}};
    j["exact_margin"] = b.exact_margin ? json(to_string(*b.exact_margin)) : json(nullptr);
    a.push_back(std::move(j));
  }
  return a;
}

/// Flattens the scalar members of an object into quantity,value rows.
void write_scalars_csv(std::ostream& out, const json& j) {
  out << "quantity,value\n";
  for (const auto& [key, value] : j.items()) {
    if (value.is_structured()) continue;
    out << key << ',' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

void require_args(const std::vector<std::string>& args, std::size_t count, std::string_view usage) {
  if (args.size() != count) throw Usage("usage: " + std::string(usage));
}

// ---------------------------------------------------------------------------
// compute

int cmd_compute(const RunConfig& c, const std::vector<std::string>& args, std::ostream& out,
                const RunHooks& hooks) {
  std::vector<std::pair<std::string, Graph>> graphs;
  for (const auto& a : args) graphs.emplace_back(a, parse_graph_spec(a));
  if (!c.input.empty()) {
    std::ifstream file;
    std::istream& in = open_input(c.input, file, hooks);
    std::string line;
    std::size_t line_no = 0;
    while (read_graph6_line(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      try {
        graphs.emplace_back(line, parse_graph6(line));
      } catch (const ValidationError& e) {
        throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
      }
    }
  }
  if (graphs.empty()) throw Usage("usage: compute <graph> [<graph>...] | --input <path>|-");

  TripleOptions options;
  options.scalars = scalars(c);
  options.tolerance = c.tolerance;
  options.include_nb = !c.no_nb;
  options.require_nb = !c.no_nb;
  options.matrix_hook = hooks.matrix_hook;

  std::vector<KemenyReport> reports;
  for (const auto& [text, g] : graphs) {
    try {
      reports.push_back(kemeny_triple(g, options));
    } catch (const Error& e) {
      if (graphs.size() == 1) throw;
      throw ValidationError(text + ": " + e.what());
    }
  }

  if (format_or(c, OutputFormat::json) == OutputFormat::csv) {
    out << "graph6,n,m,k_vertex,k_edge,k_nb,identity_residual,passed\n";
    for (const auto& r : reports) {
      const json j = to_json(r);
      auto cell = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
      out << r.graph6 << ',' << r.n << ',' << r.m << ',' << cell(j["k_vertex"]) << ','
          << cell(j["k_edge"]) << ',' << (r.nb ? cell(j["k_nb"]) : std::string()) << ','
          << cell(j["identity_residual"]) << ',' << (r.passed ? "true" : "false") << '\n';
    }
  } else if (reports.size() == 1 && c.input.empty()) {
    emit(out, to_json(reports.front()));
  } else {
    json a = json::array();
    for (const auto& r : reports) a.push_back(to_json(r));
    emit(out, a);
  }
  for (const auto& r : reports)
    if (!r.passed) return exit_code::cross_check;
  return exit_code::ok;
}

// ---------------------------------------------------------------------------
// matrices

int cmd_matrices(const RunConfig& c, const std::vector<std::string>& args, std::ostream& out) {
  require_args(args, 1, "matrices <graph> [--kind P|Pe|Pnb|A|D|T|S|tau|C|B|De]");
  const Graph g = parse_graph_spec(args[0]);
  const ChainKind kind = parse_chain_kind(c.kind);
  const ChainMatrix m = build_matrix(g, kind, scalars(c));
  if (format_or(c, OutputFormat::csv) == OutputFormat::csv) {
    out << m.to_csv();
    return exit_code::ok;
  }
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m.is_exact())
        row.push_back(to_string(m.exact()(i, j)));
      else
        row.push_back(round12(m.real()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))));
    }
    rows.push_back(std::move(row));
  }
  emit(out, json{{"kind", std::string(to_string(kind))},
                 {"rows", m.rows()},
                 {"cols", m.cols()},
                 {"exact", m.is_exact()},
                 {"entries", rows}});
  return exit_code::ok;
}

// ---------------------------------------------------------------------------
// closed-form

constexpr std::string_view kFormulaHelp =
    "closed-form <formula> <args>, formula one of: regular <graph>, biregular <graph>, "
    "necklace <n>, barbell <k,a,b>, barbell-charpoly <k,a,b>, barbell-argmax <n> edge|nb, "
    "barbell-edge-max <n>, barbell-nb-max <n>";

std::optional<Rational> exact_vertex_kemeny(const Graph& g, const RunConfig& c) {
  if (c.scalar_mode == ScalarMode::floating) return std::nullopt;
  const ScalarPolicy policy{ScalarMode::exact, c.exact_cap};
  if (c.scalar_mode == ScalarMode::automatic && g.order() > c.exact_cap) return std::nullopt;
  return kemeny_charpoly(vertex_transition(g, policy)).exact;
}

json closed_regular(const Graph& g, const RunConfig& c) {
  const RegularProfile p = regular_profile(g);
  KemenyPair k;
  k.k_e = regular_edge_kemeny(p);
  k.k_nb = regular_nb_kemeny(p, k.k_e);
  if (auto kv = exact_vertex_kemeny(g, c)) {
    k.exact_e = *kv + Rational(static_cast<long>(p.n * p.d - p.n));
    k.exact_nb = regular_nb_kemeny(p.n, p.d, *k.exact_e);
  }
  return json{{"formula", "regular"},
              {"graph6", to_graph6(g)},
              {"n", p.n},
              {"d", p.d},
              {"bipartite", p.bipartite},
              {"ramanujan", is_ramanujan(p)},
              {"exception", is_regular_exception(p)},
              {"k_e", exact_or_float(k.exact_e, k.k_e)},
              {"k_nb", exact_or_float(k.exact_nb, k.k_nb)},
              {"k_e_float", round12(k.k_e)},
              {"k_nb_float", round12(k.k_nb)},
              {"bounds", bounds_json(regular_bounds(p, k))}};
}

json closed_biregular(const Graph& g, const RunConfig& c) {
  const BiregularProfile p = biregular_profile(g);
  KemenyPair k;
  k.k_e = biregular_edge_kemeny(p);
  k.k_nb = biregular_nb_kemeny(p, k.k_e);
  if (auto kv = exact_vertex_kemeny(g, c)) {
    k.exact_e = *kv + Rational(static_cast<long>(2 * p.m - p.n));
    k.exact_nb = biregular_nb_kemeny(p.c, p.d, p.r, p.s, *k.exact_e);
  }
  return json{{"formula", "biregular"},
              {"graph6", to_graph6(g)},
              {"c", p.c},
              {"d", p.d},
              {"r", p.r},
              {"s", p.s},
              {"n", p.n},
              {"m", p.m},
              {"complete", p.complete},
              {"exception", is_biregular_exception(p)},
              {"k_e", exact_or_float(k.exact_e, k.k_e)},
              {"k_nb", exact_or_float(k.exact_nb, k.k_nb)},
              {"k_e_float", round12(k.k_e)},
              {"k_nb_float", round12(k.k_nb)},
              {"bounds", bounds_json(biregular_bounds(p, k))}};
}

json params_json(const BarbellParams& p) { return json{{"k", p.k}, {"a", p.a}, {"b", p.b}}; }

int cmd_closed_form(const RunConfig& c, const std::vector<std::string>& args, std::ostream& out) {
  if (args.empty()) throw Usage("usage: " + std::string(kFormulaHelp));
  const std::string& name = args[0];
  const std::vector<std::string> rest(args.begin() + 1, args.end());
  json j;
  if (name == "regular" || name == "biregular") {
    require_args(rest, 1, "closed-form " + name + " <graph>");
    const Graph g = parse_graph_spec(rest[0]);
    j = name == "regular" ? closed_regular(g, c) : closed_biregular(g, c);
  } else if (name == "necklace") {
    require_args(rest, 1, "closed-form necklace <n>");
    const std::size_t n = to_size(rest[0], "necklace order");
    const KemenyTriple t = necklace_kemeny(n);
    j = json{{"formula", "necklace"},
             {"n", n},
             {"k_v", to_string(t.k_v)},
             {"k_e", to_string(t.k_e)},
             {"k_nb", to_string(t.k_nb)},
             {"k_v_float", round12(to_double(t.k_v))},
             {"k_e_float", round12(to_double(t.k_e))},
             {"k_nb_float", round12(to_double(t.k_nb))}};
  } else if (name == "barbell") {
    require_args(rest, 1, "closed-form barbell <k,a,b>");
    const BarbellParams p = barbell_params(rest[0]);
    const BarbellKemeny v = barbell_kemeny(p);
    j = params_json(p);
    j["formula"] = "barbell";
    j["n"] = p.order();
    j["k_v"] = to_string(v.k_v);
    j["k_e"] = to_string(v.k_e);
    j["k_nb"] = v.k_nb ? json(to_string(*v.k_nb)) : json(nullptr);
    if (!v.k_nb) j["k_nb_omitted"] = "no closed form for k = 1; use compute";
  } else if (name == "barbell-charpoly") {
    require_args(rest, 1, "closed-form barbell-charpoly <k,a,b>");
    const BarbellParams p = barbell_params(rest[0]);
    json coeffs = json::array();
    for (const auto& z : barbell_nb_charpoly(p)) coeffs.push_back(to_string(z));
    j = params_json(p);
    j["formula"] = "barbell-charpoly";
    j["coefficients"] = coeffs;  // ascending powers
  } else if (name == "barbell-argmax") {
    require_args(rest, 2, "closed-form barbell-argmax <n> edge|nb");
    const std::size_t n = to_size(rest[0], "barbell order");
    const BarbellObjective obj = parse_barbell_objective(rest[1]);
    const BarbellArgmax best = barbell_argmax(n, obj);
    json m = json::array();
    for (const auto& p : best.maximizers) m.push_back(params_json(p));
    const Rational formula =
        obj == BarbellObjective::edge ? barbell_edge_max_formula(n) : barbell_nb_max_formula(n);
    j = json{{"formula", "barbell-argmax"},
             {"n", n},
             {"objective", std::string(to_string(obj))},
             {"value", to_string(best.value)},
             {"value_float", round12(to_double(best.value))},
             {"maximizers", m},
             {"displayed_formula", to_string(formula)},
             {"matches_formula", formula == best.value}};
  } else if (name == "barbell-edge-max" || name == "barbell-nb-max") {
    require_args(rest, 1, "closed-form " + name + " <n>");
    const std::size_t n = to_size(rest[0], "barbell order");
    const Rational v =
        name == "barbell-edge-max" ? barbell_edge_max_formula(n) : barbell_nb_max_formula(n);
    j = json{{"formula", name}, {"n", n}, {"value", to_string(v)}, {"value_float", round12(to_double(v))}};
  } else {
    throw ValidationError("unknown formula '" + name + "'; " + std::string(kFormulaHelp));
  }
  if (format_or(c, OutputFormat::json) == OutputFormat::csv)
    write_scalars_csv(out, j);
  else
    emit(out, j);
  return exit_code::ok;
}

// ---------------------------------------------------------------------------
// sweep

int cmd_sweep(const RunConfig& c, const std::vector<std::string>& args, std::ostream& out,
              std::ostream& err) {
  if (!args.empty()) throw Usage("usage: sweep --n <order> [--general]");
  if (!c.n) throw Usage("sweep needs --n <order>");
  const SweepResult s = c.general ? barbell_sweep_general(*c.n) : barbell_sweep(*c.n);
  if (format_or(c, OutputFormat::csv) == OutputFormat::csv) {
    write_sweep_csv(out, s);
    for (const auto& note : s.notes) err << "note: " << note << '\n';
    return exit_code::ok;
  }
  json rows = json::array();
  for (const auto& r : s.rows)
    rows.push_back(json{{"k", r.k},
                        {"a", r.a},
                        {"b", r.b},
                        {"k_e", to_string(r.k_e)},
                        {"k_nb", to_string(r.k_nb)},
                        {"k_e_float", round12(to_double(r.k_e))},
                        {"k_nb_float", round12(to_double(r.k_nb))},
                        {"nb_source", r.nb_source}});
  emit(out, json{{"n", s.n}, {"rows", rows}, {"notes", s.notes}});
  return exit_code::ok;
}

// ---------------------------------------------------------------------------
// census

int cmd_census(const RunConfig& c, const std::vector<std::string>& args, std::ostream& out,
               const RunHooks& hooks) {
  if (!args.empty() || c.n.has_value() == !c.input.empty())
    throw Usage("usage: census --n <4..8> | census --input <path>|-");
  const OutputFormat fmt = format_or(c, OutputFormat::json);
  CensusOptions options;
  options.keep_records = fmt == OutputFormat::csv;
  options.equal_tol = c.tolerance;
  options.threads = c.threads;
  CensusResult result;
  if (c.n) {
    result = census_nb_vs_edge(*c.n, options);
  } else {
    std::ifstream file;
    result = census_nb_vs_edge(open_input(c.input, file, hooks), options);
  }
  if (fmt == OutputFormat::csv)
    write_census_csv(out, result);
  else
    emit(out, census_summary(result));
  return result.errors.empty() ? exit_code::ok : exit_code::validation;
}

// ---------------------------------------------------------------------------
// generate

int cmd_generate(const RunConfig& c, const std::vector<std::string>& args, std::ostream& out) {
  if (args.empty())
    throw Usage("usage: generate <spec>... ; spec is " + std::string(kSpecHelp) +
                ", or all:n, connected:n, census:n for whole families");
  (void)c;
  for (const auto& spec : args) {
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    if (name == "all" || name == "connected" || name == "census") {
      const std::size_t n = size_args(name, colon == std::string::npos ? "" : spec.substr(colon + 1), 1)[0];
      const auto graphs = name == "all"       ? enumerate_all_graphs(n)
                          : name == "connected" ? enumerate_connected_graphs(n)
                                                : enumerate_graphs(n, 2, true);
      for (const auto& g : graphs) out << to_graph6(g) << '\n';
    } else {
      out << to_graph6(parse_graph_spec(spec)) << '\n';
    }
  }
  return exit_code::ok;
}

}  // namespace

Graph parse_graph_spec(std::string_view spec) {
  const std::string text(spec);
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (name == "petersen" || name == "linked-squares") {
    if (colon != std::string::npos) throw ValidationError("generator '" + name + "' takes no arguments");
    return name == "petersen" ? gen_petersen() : gen_linked_squares();
  }
  if (colon == std::string::npos) {
    try {
      return parse_graph6(text);
    } catch (const ValidationError& e) {
      throw ValidationError("'" + text + "' is neither a generator spec nor valid graph6 (" +
                            e.what() + "); specs are " + std::string(kSpecHelp));
    }
  }
  if (name == "complete") return gen_complete(size_args(name, args, 1)[0]);
  if (name == "cycle") return gen_cycle(size_args(name, args, 1)[0]);
  if (name == "path") return gen_path(size_args(name, args, 1)[0]);
  if (name == "star") return gen_star(size_args(name, args, 1)[0]);
  if (name == "cube") return gen_hypercube(size_args(name, args, 1)[0]);
  if (name == "necklace") return gen_necklace(size_args(name, args, 1)[0]);
  if (name == "bipartite") {
    const auto v = size_args(name, args, 2);
    return gen_complete_bipartite(v[0], v[1]);
  }
  if (name == "barbell") return gen_cycle_barbell(barbell_params(args));
  if (name == "random" || name == "random-regular") {
    const auto parts = split(args, ',');
    if (parts.size() != 3) throw ValidationError("generator '" + name + "' takes three arguments");
    std::mt19937_64 rng(to_size(parts[2], "seed"));
    const std::size_t n = to_size(parts[0], "order");
    if (name == "random") {
      const double p = to_real(parts[1], "edge probability");
      if (!(p > 0 && p <= 1)) throw ValidationError("edge probability must lie in (0, 1]");
      return random_connected_graph(n, p, rng);
    }
    return random_regular_graph(n, to_size(parts[1], "degree"), rng);
  }
  throw ValidationError("unknown generator spec '" + text + "'; expected " + std::string(kSpecHelp));
}

int run(const RunConfig& config, const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, const RunHooks& hooks) {
  try {
    if (!(config.tolerance > 0)) throw ValidationError("--tol must be positive");
    const std::string& cmd = config.command;
    if (cmd == "compute") return cmd_compute(config, args, out, hooks);
    if (cmd == "matrices") return cmd_matrices(config, args, out);
    if (cmd == "closed-form") return cmd_closed_form(config, args, out);
    if (cmd == "sweep") return cmd_sweep(config, args, out, err);
    if (cmd == "census") return cmd_census(config, args, out, hooks);
    if (cmd == "generate") return cmd_generate(config, args, out);
    throw ValidationError("unknown command '" + cmd +
                          "'; expected compute, matrices, closed-form, sweep, census or generate");
  } catch (const CrossCheckError& e) {
    err << "cross-check failed: " << e.what() << '\n';
    return exit_code::cross_check;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::validation;
  }
}

int run_command_line(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err,
                     const RunHooks& hooks) {
  RunConfig config;
  std::vector<std::string> operands;
  std::string mode = "auto";
  std::string output;

  CLI::App app{"Kemeny's constant for vertex, edge and non-backtracking random walks", "kemeny"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--mode", mode, "Scalar arithmetic")
      ->check(CLI::IsMember({"auto", "exact", "float"}));
  app.add_option("--tol", config.tolerance, "Route agreement tolerance")->check(CLI::PositiveNumber);
  app.add_option("--output", output, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--input", config.input, "graph6 file, or - for stdin");
  app.add_option("--cap", config.exact_cap, "Largest state count handled in exact arithmetic");

  auto* compute = app.add_subcommand("compute", "Kemeny triple with route cross-checks");
  compute->add_option("graph", operands, "Generator spec or graph6");
  compute->add_flag("--no-nb", config.no_nb, "Skip the non-backtracking chain");

  auto* matrices = app.add_subcommand("matrices", "Dump a matrix as CSV");
  matrices->add_option("graph", operands, "Generator spec or graph6")->required();
  matrices->add_option("--kind", config.kind, "P, Pe, Pnb, A, D, T, S, tau, C, B or De");

  auto* closed = app.add_subcommand("closed-form", "Evaluate a closed-form formula");
  closed->add_option("args", operands, "Formula name and arguments")->required();

  auto* sweep = app.add_subcommand("sweep", "Cycle barbell sweep as CSV");
  sweep->add_option("--n", config.n, "Order")->required();
  sweep->add_flag("--general", config.general, "All splits a >= b, k >= 1");

  auto* census = app.add_subcommand("census", "Graphs with K_nb >= K_e");
  census->add_option("--n", config.n, "Built-in order, 4..8");
  census->add_option("--threads", config.threads, "Worker threads, 0 for all cores");

  auto* generate = app.add_subcommand("generate", "Print graph6 for generator specs or families");
  generate->add_option("spec", operands, "Generator spec, or all:n, connected:n, census:n")->required();

  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::validation;
  }
  config.command = app.get_subcommands().front()->get_name();
  config.scalar_mode = parse_scalar_mode(mode);
  if (!output.empty()) config.output = output == "csv" ? OutputFormat::csv : OutputFormat::json;
  return run(config, operands, out, err, hooks);
}

}  // namespace kemeny::cli
