#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphsat/corpus.hpp"
#include "graphsat/json_io.hpp"
#include "graphsat/oracle.hpp"
#include "graphsat/parser.hpp"
#include "graphsat/procedures.hpp"
#include "graphsat/semantics.hpp"

namespace {

using namespace graphsat;

constexpr int kExitDecided = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUnknown = 2;

struct Options {
  std::string theory_path;
  std::string goal_text;
  std::string init_path;
  std::string graph_path;
  std::string term_text;
  std::string model_out;
  std::string format = "json";
  std::uint64_t max_steps = kDefaultBudget;
  bool trace = false;
  bool no_standard_rules = false;
  std::string grammar1, grammar2;
};

void print_trace(const ChainState& state) {
  for (const StepRecord& rec : state.trace) std::cout << format_step_line(rec) << "\n";
}

void write_model(const StandardModel& model, const Options& opt) {
  if (opt.model_out.empty()) return;
  std::ofstream out(opt.model_out);
  if (!out) throw std::runtime_error("cannot write model file: " + opt.model_out);
  if (opt.format == "dot")
    out << model_to_dot(model);
  else
    out << model_to_json(model).dump(2) << "\n";
}

RuleSet compile_for(const Theory& t, const Options& opt) {
  if (opt.no_standard_rules) {
    RuleSet rs;
    rs.constants = t.constants;
    rs.labels = {Label::id(), Label::top(), Label::bot()};
    for (const Label& a : t.atoms) rs.labels.insert(a);
    for (const std::string& c : t.constants) rs.labels.insert(Label::constant(c));
    for (const auto& [el, er] : normalize_to_subsumptions(t))
      rs.rules.push_back(translate_subsumption(el, er));
    for (std::size_t i = 0; i < rs.rules.size(); ++i) rs.rules[i].index = i;
    return rs;
  }
  return compile_theory(t, false);
}

int run_consistency(const Options& opt) {
  Theory t = parse_theory_file(opt.theory_path);
  ConsistencyVerdict verdict = check_consistency(t, opt.max_steps);
  switch (verdict.kind) {
    case ConsistencyVerdict::Kind::Consistent:
      std::cout << "CONSISTENT\n";
      if (opt.trace) print_trace(verdict.final_state);
      write_model(*verdict.model, opt);
      return kExitDecided;
    case ConsistencyVerdict::Kind::Inconsistent:
      std::cout << "INCONSISTENT\n";
      if (opt.trace) print_trace(verdict.final_state);
      return kExitDecided;
    case ConsistencyVerdict::Kind::Unknown:
      std::cout << "UNKNOWN\n";
      if (opt.trace) print_trace(verdict.final_state);
      return kExitUnknown;
  }
  return kExitUsage;
}

int run_entail(const Options& opt) {
  Theory t = parse_theory_file(opt.theory_path);
  Sentence goal = parse_sentence(opt.goal_text);
  EntailmentVerdict verdict = check_entailment(t, goal, opt.max_steps);
  auto trace_runs = [&] {
    if (!opt.trace) return;
    for (const EntailmentRun& run : verdict.runs) {
      if (verdict.runs.size() > 1) std::cout << "# direction " << run.direction << "\n";
      print_trace(run.state);
    }
  };
  switch (verdict.kind) {
    case EntailmentVerdict::Kind::Entailed:
      std::cout << "ENTAILED\n";
      trace_runs();
      return kExitDecided;
    case EntailmentVerdict::Kind::NotEntailed: {
      std::cout << "NOT ENTAILED\n";
      nlohmann::json w = {verdict.witness->first, verdict.witness->second};
      std::cout << "witness " << w.dump() << "\n";
      trace_runs();
      write_model(*verdict.countermodel, opt);
      return kExitDecided;
    }
    case EntailmentVerdict::Kind::Unknown:
      std::cout << "UNKNOWN\n";
      trace_runs();
      return kExitUnknown;
  }
  return kExitUsage;
}

int run_saturate(const Options& opt) {
  Theory t = parse_theory_file(opt.theory_path);
  RuleSet rules = compile_for(t, opt);
  ChainState initial = opt.init_path.empty()
                           ? ChainState::empty()
                           : ChainState::from_graph(load_graph_file(opt.init_path));
  SaturationResult result = saturate(std::move(initial), rules, opt.max_steps);
  switch (result.outcome) {
    case Outcome::Fixpoint: std::cout << "FIXPOINT\n"; break;
    case Outcome::Conflict: std::cout << "CONFLICT\n"; break;
    case Outcome::BudgetExhausted: std::cout << "UNKNOWN\n"; break;
  }
  if (opt.trace) print_trace(result.final_state);
  return result.outcome == Outcome::BudgetExhausted ? kExitUnknown : kExitDecided;
}

int run_eval(const Options& opt) {
  parse_theory_file(opt.theory_path);  // validated for label context
  Graph g = load_graph_file(opt.graph_path);
  Term term = parse_term(opt.term_text);
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [x, y] : eval_semantics(term, g)) out.push_back({x, y});
  std::cout << out.dump() << "\n";
  return kExitDecided;
}

int run_verify(const Options& opt) {
  Theory t = parse_theory_file(opt.theory_path);
  RuleSet rules = compile_for(t, opt);
  Graph g = load_graph_file(opt.graph_path);
  oracle::OracleReport report = oracle::is_consequence_graph(g, rules);
  if (report.verdict) {
    std::cout << "PASS\n";
  } else {
    std::cout << "FAIL\n";
    std::cout << "counterexample rule=[" << report.counterexample->first << "] f={";
    bool first = true;
    for (const auto& [v, w] : report.counterexample->second) {
      if (!first) std::cout << ",";
      std::cout << v << "->" << w;
      first = false;
    }
    std::cout << "}\n";
  }
  return kExitDecided;
}

int run_encode_cfg(const Options& opt) {
  auto read = [](const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open grammar file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };
  corpus::CFG g1 = corpus::parse_cfg(read(opt.grammar1));
  corpus::CFG g2 = corpus::parse_cfg(read(opt.grammar2));
  Theory t = corpus::encode_cfg_intersection(g1, g2);
  for (const Sentence& s : t.sentences) std::cout << display_sentence(s) << "\n";
  return kExitDecided;
}

int run_dump_rules(const Options& opt) {
  Theory t = parse_theory_file(opt.theory_path);
  RuleSet rules = compile_for(t, opt);
  std::cout << rules_to_json(rules).dump(2) << "\n";
  return kExitDecided;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Saturation-based model finder and entailment checker for "
               "equational sentences over binary relations"};
  app.require_subcommand(1);

  Options opt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--max-steps", opt.max_steps, "Applied-step budget")
        ->default_val(kDefaultBudget);
    cmd->add_flag("--trace", opt.trace, "Print one line per applied step");
  };
  auto add_model_out = [&](CLI::App* cmd) {
    cmd->add_option("--model-out", opt.model_out, "Write the (counter)model here");
    cmd->add_option("--format", opt.format, "Model output format")
        ->check(CLI::IsMember({"json", "dot"}));
  };

  CLI::App* consistency = app.add_subcommand("consistency", "Decide whether a theory has a model");
  consistency->add_option("file", opt.theory_path, "Theory file (.rel)")->required();
  add_common(consistency);
  add_model_out(consistency);

  CLI::App* entail = app.add_subcommand("entail", "Decide whether a theory entails a sentence");
  entail->add_option("file", opt.theory_path, "Theory file (.rel)")->required();
  entail->add_option("--goal", opt.goal_text, "Goal sentence, e.g. \"r ; r <= r\"")->required();
  add_common(entail);
  add_model_out(entail);

  CLI::App* saturate_cmd = app.add_subcommand("saturate", "Run the raw saturation engine");
  saturate_cmd->add_option("file", opt.theory_path, "Theory file (.rel)")->required();
  saturate_cmd->add_option("--init", opt.init_path, "Initial graph (JSON)");
  saturate_cmd->add_flag("--no-standard-rules", opt.no_standard_rules,
                         "Compile only the theory's own rules (expert use)");
  add_common(saturate_cmd);

  CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate a term over a graph");
  eval_cmd->add_option("file", opt.theory_path, "Theory file (.rel)")->required();
  eval_cmd->add_option("--graph", opt.graph_path, "Graph file (JSON)")->required();
  eval_cmd->add_option("--term", opt.term_text, "Term to evaluate")->required();

  CLI::App* verify = app.add_subcommand("verify", "Check a graph against the compiled rules");
  verify->add_option("file", opt.theory_path, "Theory file (.rel)")->required();
  verify->add_option("--graph", opt.graph_path, "Graph file (JSON)")->required();
  verify->add_flag("--no-standard-rules", opt.no_standard_rules,
                   "Check only the theory's own rules");

  CLI::App* encode = app.add_subcommand("encode-cfg", "Encode a grammar-intersection instance");
  encode->add_option("grammar1", opt.grammar1, "First grammar file")->required();
  encode->add_option("grammar2", opt.grammar2, "Second grammar file")->required();

  CLI::App* dump = app.add_subcommand("dump-rules", "Print the compiled rule set as JSON");
  dump->add_option("file", opt.theory_path, "Theory file (.rel)")->required();
  dump->add_flag("--no-standard-rules", opt.no_standard_rules,
                 "Compile only the theory's own rules");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (consistency->parsed()) return run_consistency(opt);
    if (entail->parsed()) return run_entail(opt);
    if (saturate_cmd->parsed()) return run_saturate(opt);
    if (eval_cmd->parsed()) return run_eval(opt);
    if (verify->parsed()) return run_verify(opt);
    if (encode->parsed()) return run_encode_cfg(opt);
    if (dump->parsed()) return run_dump_rules(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
