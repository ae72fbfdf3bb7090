#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "trineg/alternating.hpp"
#include "trineg/equations.hpp"
#include "trineg/generate.hpp"
#include "trineg/procedure.hpp"
#include "trineg/semantics.hpp"
#include "trineg/syntax.hpp"

using json = nlohmann::json;
using namespace trineg;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitGuard = 3;
constexpr int kExitNotLp = 4;
constexpr int kExitNoClosure = 5;

struct CommonOpts {
  std::string file = "-";
  std::string format = "text";
  std::size_t max_atoms = kDefaultGuard;
  unsigned jobs = 1;
  bool quiet = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_file = true) {
  if (with_file) {
    cmd->add_option("file", opts.file, "program file, or - for stdin");
  }
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--max-atoms", opts.max_atoms, "enumeration guard");
  cmd->add_option("--jobs", opts.jobs, "worker count (output is unaffected)");
  cmd->add_flag("--quiet", opts.quiet, "suppress notices");
}

Program load_program(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    buf << in.rdbuf();
  }
  return parse_program(buf.str());
}

AtomSet parse_atom_list(const std::string& text) {
  AtomSet out;
  std::istringstream in(text);
  std::string name;
  while (std::getline(in, name, ',')) {
    size_t a = name.find_first_not_of(" \t");
    size_t b = name.find_last_not_of(" \t");
    if (a == std::string::npos) continue;
    out.insert(name.substr(a, b - a + 1));
  }
  return out;
}

json to_json(const Interpretation& interp) {
  return {{"true", interp.true_set}, {"false", interp.false_set}};
}

json to_json(const std::vector<Interpretation>& interps) {
  json arr = json::array();
  for (const auto& i : interps) arr.push_back(to_json(i));
  return arr;
}

void print_pairs(const std::vector<Interpretation>& pairs, const CommonOpts& opts) {
  if (opts.format == "json") {
    std::cout << to_json(pairs).dump(2) << "\n";
  } else if (pairs.empty()) {
    std::cout << "no fixpoint\n";
  } else {
    for (const auto& p : pairs) std::cout << render(p) << "\n";
  }
}

void correction_notice(const CommonOpts& opts) {
  if (!opts.quiet) {
    std::cerr << "note: the alternating operator and the second semantic equation "
                 "are evaluated in complemented false-set form\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"3-valued semantics engine for logic programs with default, "
               "weak and strict negation"};
  app.require_subcommand(1);

  // eval
  CommonOpts eval_opts;
  std::string eval_true, eval_false, eval_expr;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a literal or body under (T, F)");
  add_common(eval_cmd, eval_opts);
  eval_cmd->add_option("--true", eval_true, "comma-separated true atoms");
  eval_cmd->add_option("--false", eval_false, "comma-separated false atoms");
  eval_cmd->add_option("expr", eval_expr, "literal or body")->required();

  // pair-listing commands
  CommonOpts models_opts, fix_opts, stable_opts, wfm_opts, closure_opts;
  auto* models_cmd = app.add_subcommand("models", "enumerate all 3-valued models");
  add_common(models_cmd, models_opts);
  auto* fix_cmd =
      app.add_subcommand("semantic-fixpoints", "solve the semantic equations");
  add_common(fix_cmd, fix_opts);
  auto* stable_cmd = app.add_subcommand("stable", "3-valued stable models of an LP");
  add_common(stable_cmd, stable_opts);
  auto* wfm_cmd = app.add_subcommand("wfm", "well-founded model of an LP");
  add_common(wfm_cmd, wfm_opts);
  auto* closure_cmd =
      app.add_subcommand("closure", "admissible success/failure pairs and their "
                                    "componentwise intersection");
  add_common(closure_cmd, closure_opts);

  // query
  CommonOpts query_opts;
  std::string query_goal;
  auto* query_cmd = app.add_subcommand("query", "skeptical goal verdict");
  add_common(query_cmd, query_opts);
  query_cmd->add_option("--goal", query_goal, "goal, e.g. \"?- not q.\"")->required();

  // negtable
  CommonOpts neg_opts;
  auto* neg_cmd = app.add_subcommand("negtable", "double-negation truth table");
  add_common(neg_cmd, neg_opts, /*with_file=*/false);

  // generate
  CommonOpts gen_opts;
  GeneratorConfig gen_cfg;
  auto* gen_cmd = app.add_subcommand("generate", "emit a seeded random program");
  add_common(gen_cmd, gen_opts, /*with_file=*/false);
  gen_cmd->add_option("--atoms", gen_cfg.atom_count, "atom count");
  gen_cmd->add_option("--clauses", gen_cfg.clause_count, "clause count");
  gen_cmd->add_option("--max-body", gen_cfg.max_body_len, "max body length");
  gen_cmd->add_option("--mix", gen_cfg.negation_mix,
                      "weights for positive, not, ~w, ~s literals");
  gen_cmd->add_option("--seed", gen_cfg.seed, "generator seed");

  // check
  CommonOpts check_opts;
  std::string check_true, check_false;
  auto* check_cmd = app.add_subcommand(
      "check", "model conditions for a pair plus the procedure soundness report");
  add_common(check_cmd, check_opts);
  check_cmd->add_option("--true", check_true, "comma-separated true atoms");
  check_cmd->add_option("--false", check_false, "comma-separated false atoms");

  CLI11_PARSE(app, argc, argv);

  if (*eval_cmd) {
    [[maybe_unused]] Program p = load_program(eval_opts.file);
    Interpretation interp{parse_atom_list(eval_true), parse_atom_list(eval_false)};
    require_disjoint(interp);
    std::string text = eval_expr;
    if (text.rfind("?-", 0) != 0) text = "?- " + text + ".";
    Goal g = parse_goal(text);
    Truth v = body_truth(interp, g.body);
    if (eval_opts.format == "json") {
      std::cout << json{{"value", std::string(1, truth_char(v))}}.dump() << "\n";
    } else {
      std::cout << truth_char(v) << "\n";
    }
  } else if (*models_cmd) {
    Program p = load_program(models_opts.file);
    print_pairs(enumerate_models(p, models_opts.max_atoms), models_opts);
  } else if (*fix_cmd) {
    correction_notice(fix_opts);
    Program p = load_program(fix_opts.file);
    print_pairs(solve_semantic_equations(p, fix_opts.max_atoms), fix_opts);
  } else if (*stable_cmd) {
    correction_notice(stable_opts);
    Program p = load_program(stable_opts.file);
    print_pairs(three_valued_stable_models(p, stable_opts.max_atoms), stable_opts);
  } else if (*wfm_cmd) {
    correction_notice(wfm_opts);
    Program p = load_program(wfm_opts.file);
    Interpretation w = well_founded_model(p);
    if (wfm_opts.format == "json") {
      std::cout << to_json(w).dump(2) << "\n";
    } else {
      std::cout << render(w) << "\n";
    }
  } else if (*closure_cmd) {
    correction_notice(closure_opts);
    Program p = load_program(closure_opts.file);
    AdmissibleSet adm = admissible_pairs(p, closure_opts.max_atoms);
    if (closure_opts.format == "json") {
      json out;
      out["pairs"] = json::array();
      for (const auto& [t, f] : adm.pairs) out["pairs"].push_back(to_json({t, f}));
      if (adm.canonical) {
        out["canonical"] = to_json({adm.canonical->first, adm.canonical->second});
      } else {
        out["canonical"] = nullptr;
      }
      std::cout << out.dump(2) << "\n";
    } else {
      for (const auto& [t, f] : adm.pairs) {
        std::cout << render(Interpretation{t, f}) << "\n";
      }
      if (adm.canonical) {
        std::cout << "canonical: "
                  << render(Interpretation{adm.canonical->first, adm.canonical->second})
                  << "\n";
      } else {
        std::cout << "no admissible pair\n";
      }
    }
  } else if (*query_cmd) {
    correction_notice(query_opts);
    Program p = load_program(query_opts.file);
    Goal g = parse_goal(query_goal);
    AdmissibleSet adm = admissible_pairs(p, query_opts.max_atoms);
    Verdict v = query_against(p, adm, g);
    if (query_opts.format == "json") {
      json out{{"goal", render(g)},
               {"verdict", verdict_name(v)},
               {"canonical", to_json({adm.canonical->first, adm.canonical->second})},
               {"admissible_count", adm.pairs.size()}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << verdict_name(v) << "\n";
    }
  } else if (*neg_cmd) {
    const std::pair<Negation, Negation> columns[] = {
        {Negation::Default, Negation::Weak},  {Negation::Weak, Negation::Default},
        {Negation::Default, Negation::Strict}, {Negation::Strict, Negation::Default},
        {Negation::Weak, Negation::Strict},    {Negation::Strict, Negation::Weak}};
    const char* headers[] = {"not ~w A", "~w not A", "not ~s A",
                             "~s not A", "~w ~s A",  "~s ~w A"};
    const Truth rows[] = {Truth::True, Truth::Undef, Truth::False};
    if (neg_opts.format == "json") {
      json out = json::array();
      for (Truth v : rows) {
        json row{{"A", std::string(1, truth_char(v))}};
        for (std::size_t i = 0; i < 6; ++i) {
          row[headers[i]] = std::string(
              1, truth_char(negation_chain_truth(columns[i].first, columns[i].second, v)));
        }
        out.push_back(row);
      }
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "A";
      for (const char* h : headers) std::cout << "\t" << h;
      std::cout << "\n";
      for (Truth v : rows) {
        std::cout << truth_char(v);
        for (const auto& [outer, inner] : columns) {
          std::cout << "\t" << truth_char(negation_chain_truth(outer, inner, v));
        }
        std::cout << "\n";
      }
    }
  } else if (*gen_cmd) {
    std::cout << render(random_program(gen_cfg));
  } else if (*check_cmd) {
    Program p = load_program(check_opts.file);
    AtomSet t = parse_atom_list(check_true);
    AtomSet f = parse_atom_list(check_false);
    ConditionReport rep = check_model_conditions(p, t, f);
    std::vector<SoundnessViolation> viol = soundness_report(p, check_opts.max_atoms);
    if (check_opts.format == "json") {
      json out{{"conditions",
                {{"a", rep.disjoint},
                 {"b", rep.true_fixpoint},
                 {"c", rep.false_coherent},
                 {"d", rep.false_supported}}},
               {"soundness_violations", viol.size()}};
      if (!rep.disjoint) out["conditions"]["witness_a"] = rep.witness_a;
      if (!rep.true_fixpoint) out["conditions"]["witness_b"] = rep.witness_b;
      if (!rep.false_coherent) out["conditions"]["witness_c"] = rep.witness_c;
      if (!rep.false_supported) out["conditions"]["witness_d"] = rep.witness_d;
      std::cout << out.dump(2) << "\n";
    } else {
      auto yn = [](bool b) { return b ? "true" : "false"; };
      std::cout << "(a) disjoint: " << yn(rep.disjoint) << "\n"
                << "(b) true fixpoint: " << yn(rep.true_fixpoint) << "\n"
                << "(c) false coherent: " << yn(rep.false_coherent) << "\n"
                << "(d) false supported: " << yn(rep.false_supported) << "\n"
                << "soundness violations: " << viol.size() << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InterpretationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const ProgramClassError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotLp;
  } catch (const NoAdmissibleClosureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoClosure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
