#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "platek/corpus.hpp"
#include "platek/denot.hpp"
#include "platek/eff/bridge.hpp"
#include "platek/eff/io.hpp"
#include "platek/model.hpp"
#include "platek/optree.hpp"
#include "platek/parser.hpp"
#include "platek/pretty.hpp"
#include "platek/reductions.hpp"
#include "platek/treeio.hpp"
#include "platek/typecheck.hpp"

namespace {

using namespace platek;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;  // usage, parse, or type errors
constexpr int kExitNoValue = 2;
constexpr int kExitRefusal = 3;  // disagreement or oracle refusal

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << content;
}

struct ModelChoice {
  bool finite = false;
  std::uint64_t base_bound = 1;
};

ModelChoice parse_model(const std::string& spec) {
  ModelChoice m;
  if (spec == "infinite") return m;
  if (spec.rfind("finite:", 0) == 0) {
    m.finite = true;
    m.base_bound = std::stoull(spec.substr(7));
    return m;
  }
  throw Error("bad --model '" + spec + "'; use infinite or finite:N");
}

struct CommonOpts {
  std::string model = "infinite";
  std::uint64_t fuel = 100000;
  std::uint64_t budget = 1'000'000;
  std::vector<std::string> oracle_cfg;
  std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--model", opts.model, "infinite or finite:N");
  cmd->add_option("--fuel", opts.fuel, "step budget (default 100000)");
  cmd->add_option("--budget", opts.budget,
                  "enumeration budget per space (default 1000000)");
  cmd->add_option("--oracle", opts.oracle_cfg,
                  "oracle config name.key=value (repeatable)")
      ->take_all();
  cmd->add_option("--format", opts.format, "text, json, or dot");
}

OracleTable make_oracle_table(const OracleRegistry& reg,
                              const CommonOpts& opts) {
  OracleTable table;
  table.registry = &reg;
  for (const std::string& spec : opts.oracle_cfg) table.configs.set(spec);
  return table;
}

int outcome_exit(const Outcome& o) {
  switch (o.kind) {
    case OutcomeKind::Value: return kExitOk;
    case OutcomeKind::NoValue: return kExitNoValue;
    case OutcomeKind::Refusal: return kExitRefusal;
    case OutcomeKind::Stuck: return kExitUsage;
  }
  return kExitUsage;
}

void print_report(const EvalReport& rep, const std::string& format) {
  if (format == "json") {
    nlohmann::json j;
    j["outcome"] = rep.outcome.to_string();
    if (rep.outcome.is_value()) j["value"] = rep.outcome.value;
    j["steps"] = rep.steps_used;
    j["nodes"] = rep.stats.nodes;
    j["max_depth"] = rep.stats.max_depth;
    j["oracle_queries"] = rep.stats.oracle_queries;
    j["approximation"] = rep.approximation;
    j["notes"] = rep.notes;
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << rep.outcome.to_string() << "\n";
  std::cout << "steps " << rep.steps_used << "  nodes " << rep.stats.nodes
            << "  depth " << rep.stats.max_depth << "  oracle-queries "
            << rep.stats.oracle_queries << "\n";
  for (const std::string& n : rep.notes) std::cout << "note: " << n << "\n";
}

int cmd_run(const std::string& file, const CommonOpts& opts) {
  OracleRegistry reg = OracleRegistry::builtins();
  OracleTable table = make_oracle_table(reg, opts);
  Term t = parse(read_file(file));
  Type ty = typecheck(t, table.typing_context());
  if (!ty.is_base()) {
    std::cerr << "error: program has type " << ty.to_string()
              << ", expected 0\n";
    return kExitUsage;
  }
  ModelChoice mc = parse_model(opts.model);
  Model model({mc.base_bound, opts.budget});
  EvalSettings settings;
  settings.fuel = opts.fuel;
  if (mc.finite) settings.finite = &model;
  EvalReport rep = eval_op(t, settings, table);
  print_report(rep, opts.format);
  return outcome_exit(rep.outcome);
}

int cmd_typecheck(const std::string& file) {
  OracleRegistry reg = OracleRegistry::builtins();
  OracleTable table;
  table.registry = &reg;
  Term t = parse(read_file(file));
  Type ty = typecheck(t, table.typing_context());
  std::cout << ty.to_string() << "\n";
  return kExitOk;
}

int cmd_trace(const std::string& file, const CommonOpts& opts,
              const std::string& out_path, std::size_t max_nodes,
              std::size_t max_depth, bool numerals) {
  OracleRegistry reg = OracleRegistry::builtins();
  OracleTable table = make_oracle_table(reg, opts);
  Term t = parse(read_file(file));
  ModelChoice mc = parse_model(opts.model);
  Model model({mc.base_bound, opts.budget});
  EvalSettings settings;
  settings.fuel = opts.fuel;
  if (mc.finite) settings.finite = &model;
  TreeLimits limits;
  limits.max_nodes = max_nodes;
  limits.max_depth = max_depth;
  limits.numeral_snapshots = numerals;
  CompTree tree = build_tree(t, settings, table, limits);
  auto render = [&](const std::string& format) {
    if (format == "json") return export_tree_json(tree);
    if (format == "dot") return export_tree_dot(tree);
    return export_tree_text(tree);
  };
  if (out_path.empty() || out_path == "-") {
    std::cout << render(opts.format);
  } else if (opts.format != "text") {
    write_file(out_path, render(opts.format));
    std::cout << "wrote " << tree.nodes.size() << " nodes to " << out_path
              << "\n";
  } else {
    // default: the structured-text record file plus the graph export
    write_file(out_path + ".txt", render("text"));
    write_file(out_path + ".dot", render("dot"));
    write_file(out_path + ".json", render("json"));
    std::cout << "wrote " << tree.nodes.size() << " nodes to " << out_path
              << ".{txt,dot,json}\n";
  }
  if (tree.nodes.empty()) return kExitNoValue;
  return outcome_exit(tree.nodes[tree.root].outcome);
}

int cmd_enumerate(const std::string& type_expr, std::uint64_t base_bound,
                  const std::string& kind, bool list, std::uint64_t budget) {
  Type ty = parse_type(type_expr);
  Model model({base_bound, budget});
  if (kind == "total") {
    const auto& elems = model.enumerate_total(ty);
    std::cout << "|F(" << ty.to_string() << ")| = " << elems.size()
              << "  at base bound " << base_bound << "\n";
    if (list)
      for (const Total& t : elems) std::cout << model.render_total(t) << "\n";
    return kExitOk;
  }
  if (kind != "partial") throw Error("--kind must be partial or total");
  std::uint64_t count = 0;
  model.for_each_partial(ty, [&](const DomainElement& e) {
    ++count;
    if (list) std::cout << model.render(e) << "\n";
    return true;
  });
  std::cout << "|HC(" << ty.to_string() << ")| = " << count
            << "  at base bound " << base_bound << "\n";
  return kExitOk;
}

int cmd_fincheck(const CorpusParams& params, const CommonOpts& opts) {
  OracleRegistry reg = OracleRegistry::builtins();
  OracleTable table = make_oracle_table(reg, opts);
  FincheckReport rep = run_fincheck(params, table);
  if (opts.format == "json") {
    nlohmann::json j;
    j["header"] = rep.header;
    j["total"] = rep.total;
    j["agree"] = rep.agree;
    j["disagree"] = rep.disagree;
    j["inconclusive_fuel"] = rep.inconclusive;
    j["budget_exceeded"] = rep.budget_exceeded;
    nlohmann::json fails = nlohmann::json::array();
    for (const auto& [term, detail] : rep.failures)
      fails.push_back({{"term", term}, {"detail", detail}});
    j["failures"] = fails;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << rep.summary();
  }
  return rep.clean() ? kExitOk : kExitRefusal;
}

std::map<std::string, std::string> parse_params(
    const std::vector<std::string>& specs) {
  std::map<std::string, std::string> out;
  for (const std::string& spec : specs) {
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos)
        throw Error("bad --params entry '" + item + "'; expected key=value");
      out[item.substr(0, eq)] = item.substr(eq + 1);
    }
  }
  return out;
}

std::string require_param(const std::map<std::string, std::string>& params,
                          const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw Error("missing --params " + key + "=...");
  return it->second;
}

int cmd_reduce(const std::string& name, const std::string& input,
               const std::vector<std::string>& param_specs) {
  namespace red = platek::reductions;
  using eff::Rat;
  auto params = parse_params(param_specs);
  eff::EffFile file;
  if (!input.empty()) file = eff::parse_eff(read_file(input));

  if (name == "rm_code_open") {
    const auto& o = file.intervals(require_param(params, "set"));
    std::uint64_t d = std::stoull(require_param(params, "denom"));
    auto pairs = red::rm_code_open(o, d);
    std::cout << "pairs " << pairs.size() << "\n";
    for (const auto& [p, q] : pairs)
      std::cout << "(" << eff::rat_str(p) << "," << eff::rat_str(q) << ")\n";
    return kExitOk;
  }
  if (name == "sup_usco") {
    const auto& f = file.stepfn(require_param(params, "fn"));
    unsigned k = static_cast<unsigned>(std::stoul(require_param(params, "k")));
    Rat r = red::sup_usco(f, k);
    std::cout << "sup within 2^-" << k << ": " << eff::rat_str(r) << "\n";
    return kExitOk;
  }
  if (name == "select_clopen") {
    const auto& s = file.clopen(require_param(params, "set"));
    auto bits = red::select_clopen(s);
    std::string rendered;
    for (auto b : bits) rendered += b ? '1' : '0';
    std::cout << "member " << rendered << "+0w\n";
    return kExitOk;
  }
  if (name == "moreau_env") {
    const auto& f = file.stepfn(require_param(params, "fn"));
    std::uint64_t n = std::stoull(require_param(params, "n"));
    Rat x = eff::rat_parse(require_param(params, "x"));
    std::cout << eff::rat_str(red::moreau_env(f, n, x)) << "\n";
    return kExitOk;
  }
  if (name == "urysohn") {
    const auto& c0 = file.intervals(require_param(params, "c0"));
    const auto& c1 = file.intervals(require_param(params, "c1"));
    Rat x = eff::rat_parse(require_param(params, "x"));
    std::cout << eff::rat_str(red::urysohn(c0, c1, x)) << "\n";
    return kExitOk;
  }
  if (name == "measure_bisect") {
    unsigned n = static_cast<unsigned>(std::stoul(require_param(params, "n")));
    std::string set = require_param(params, "set");
    auto it = file.values.find(set);
    if (it == file.values.end()) throw Error("no definition named " + set);
    Rat l;
    if (auto* c = std::get_if<eff::ClopenSet>(&it->second))
      l = red::measure_bisect(*c, n);
    else if (auto* u = std::get_if<eff::IntervalUnion>(&it->second))
      l = red::measure_bisect(*u, n);
    else
      throw Error(set + " must be a clopen set or interval union");
    std::cout << "l_" << n << " = " << eff::rat_str(l) << "\n";
    return kExitOk;
  }
  if (name == "cantor_intersection") {
    std::string names = require_param(params, "sets");
    std::vector<eff::ClopenSet> sets;
    std::stringstream ss(names);
    std::string item;
    while (std::getline(ss, item, '+')) sets.push_back(file.clopen(item));
    auto bits = red::cantor_intersection(sets);
    std::string rendered;
    for (auto b : bits) rendered += b ? '1' : '0';
    std::cout << "member " << rendered << "+0w\n";
    return kExitOk;
  }
  if (name == "continuity") {
    const auto& f = file.stepfn(require_param(params, "fn"));
    auto rep = red::decide_continuity_via_osc(f);
    if (rep.continuous) {
      std::cout << "continuous\n";
    } else {
      std::cout << "discontinuous at " << eff::rat_str(rep.witness)
                << " with oscillation " << eff::rat_str(rep.oscillation)
                << " (>= 2^-" << rep.k << ")\n";
    }
    return kExitOk;
  }
  if (name == "compile_clopen") {
    const auto& s = file.clopen(require_param(params, "set"));
    std::cout << pretty(eff::compile_clopen_to_term(s)) << "\n";
    return kExitOk;
  }
  throw Error(
      "unknown reduction '" + name +
      "'; known: rm_code_open, sup_usco, select_clopen, moreau_env, urysohn, "
      "measure_bisect, cantor_intersection, continuity, compile_clopen");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for a PCF-style calculus with oracle constants"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "evaluate a closed program of type 0");
  std::string run_file;
  CommonOpts run_opts;
  run->add_option("file", run_file, "program (.ptk)")->required();
  add_common(run, run_opts);

  // typecheck
  auto* tc = app.add_subcommand("typecheck", "print the type of a program");
  std::string tc_file;
  tc->add_option("file", tc_file, "program (.ptk)")->required();

  // trace
  auto* trace = app.add_subcommand("trace", "export the computation tree");
  std::string trace_file, trace_out = "-";
  std::size_t trace_max_nodes = 100000, trace_max_depth = 100000;
  bool trace_numerals = false;
  CommonOpts trace_opts;
  trace->add_option("file", trace_file, "program (.ptk)")->required();
  trace->add_option("--out", trace_out, "output path ('-' for stdout)");
  trace->add_option("--max-nodes", trace_max_nodes, "tree node limit");
  trace->add_option("--max-depth", trace_max_depth, "tree depth limit");
  trace->add_flag("--numerals", trace_numerals,
                  "collapse suc-chains in term snapshots");
  add_common(trace, trace_opts);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "count a type's elements");
  std::string enum_type, enum_kind = "partial";
  std::uint64_t enum_bound = 1, enum_budget = 1'000'000;
  bool enum_list = false;
  enumerate->add_option("--type", enum_type, "type expression, e.g. \"0->0\"")
      ->required();
  enumerate->add_option("--base-bound", enum_bound, "base bound N (default 1)");
  enumerate->add_option("--kind", enum_kind, "partial or total");
  enumerate->add_flag("--list", enum_list, "print every element");
  enumerate->add_option("--budget", enum_budget, "enumeration budget");

  // fincheck
  auto* fincheck = app.add_subcommand(
      "fincheck", "denotational/operational agreement over a term corpus");
  CorpusParams fc;
  CommonOpts fc_opts;
  std::string fc_oracles = "exists2,mu";
  fincheck->add_option("--max-size", fc.max_term_size, "term size cap");
  fincheck->add_option("--rank-bound", fc.type_rank_bound, "type rank cap");
  fincheck->add_option("--base-bound", fc.base_bound, "base bound N");
  fincheck->add_option("--seed", fc.seed, "corpus seed");
  fincheck->add_option("--samples", fc.sample_count,
                       "sample count (0 = exhaustive)");
  fincheck->add_option("--oracles", fc_oracles,
                       "comma-separated oracle constants");
  add_common(fincheck, fc_opts);

  // reduce
  auto* reduce = app.add_subcommand("reduce", "run an effective reduction");
  std::string red_name, red_input;
  std::vector<std::string> red_params;
  reduce->add_option("name", red_name, "reduction name")->required();
  reduce->add_option("--input", red_input, "definitions file (.eff)");
  reduce->add_option("--params", red_params, "key=value[,key=value...]")
      ->take_all();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return cmd_run(run_file, run_opts);
    if (*tc) return cmd_typecheck(tc_file);
    if (*trace)
      return cmd_trace(trace_file, trace_opts, trace_out, trace_max_nodes,
                       trace_max_depth, trace_numerals);
    if (*enumerate)
      return cmd_enumerate(enum_type, enum_bound, enum_kind, enum_list,
                           enum_budget);
    if (*fincheck) {
      fc.fuel = fc_opts.fuel;
      fc.enumeration_budget = fc_opts.budget;
      fc.oracle_names.clear();
      std::stringstream ss(fc_oracles);
      std::string item;
      while (std::getline(ss, item, ','))
        if (!item.empty()) fc.oracle_names.push_back(item);
      return cmd_fincheck(fc, fc_opts);
    }
    if (*reduce) return cmd_reduce(red_name, red_input, red_params);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const TypeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
