#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "shiftbribery/borda.hpp"
#include "shiftbribery/io.hpp"
#include "shiftbribery/oracle.hpp"
#include "shiftbribery/scoring_ptas.hpp"

using namespace shiftbribery;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

long long oracle_budget() {
  if (const char* env = std::getenv("SHIFTBRIBE_BUDGET")) return std::atoll(env);
  return kDefaultOracleBudget;
}

double ms_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void require_positional(const Rule& rule, const std::string& algo) {
  if (rule.is_copeland())
    throw std::runtime_error(algo + " handles positional scoring rules, not Copeland");
}

std::optional<ShiftAction> run_algorithm(const std::string& algo, const Instance& inst,
                                         const Rule& rule, const Rational& eps) {
  if (algo == "ptas-unit") {
    require_positional(rule, algo);
    return ptas_unit(inst, eps);
  }
  if (algo == "fpt") {
    require_positional(rule, algo);
    return fpt_exact(inst).action;
  }
  if (algo == "eptas-unit") {
    require_positional(rule, algo);
    return eptas_unit(inst, eps).action;
  }
  if (algo == "lp-additive") {
    require_positional(rule, algo);
    if (classify_prices(inst).kind == PriceFamilyKind::Unit && !inst.election.has_scoring_vectors())
      return lp_additive_unit(inst);
    return lp_additive_general(inst, eps);
  }
  if (algo == "ptas-general") {
    require_positional(rule, algo);
    return ptas_general(inst, eps).action;
  }
  if (algo == "greedy-aon") {
    require_positional(rule, algo);
    return greedy_uniform_aon(inst);
  }
  throw std::runtime_error("unknown algorithm " + algo);
}

int cmd_solve(const std::string& path, const std::string& algo, const std::string& eps_text,
              bool with_oracle, const std::string& action_out) {
  InstanceBundle bundle = parse_instance(read_file(path));
  Rational eps = parse_rational(eps_text);
  auto t0 = std::chrono::steady_clock::now();
  std::optional<ShiftAction> action = run_algorithm(algo, bundle.instance, bundle.rule, eps);

  RunReport report;
  report.algorithm = algo;
  report.eps = eps;
  report.wall_ms = ms_since(t0);
  if (action) {
    report.action = action;
    report.cost = cost(bundle.instance, *action);
    report.unit_shifts = action->unit_shifts();
    report.success = is_successful(bundle.instance, *action, bundle.rule);
  }
  if (with_oracle)
    report.oracle_cost = brute_force_opt(bundle.instance, bundle.rule, oracle_budget()).opt_cost;
  std::cout << to_json_line(report) << "\n";
  std::cerr << "algo=" << algo << " cost=" << to_string(report.cost)
            << " shifts=" << report.unit_shifts << " success=" << (report.success ? "yes" : "no")
            << "\n";
  if (!action_out.empty() && action) write_file(action_out, serialize_action(*action));
  return action && report.success ? 0 : 1;
}

int cmd_oracle(const std::string& path) {
  InstanceBundle bundle = parse_instance(read_file(path));
  auto t0 = std::chrono::steady_clock::now();
  OracleResult r = brute_force_opt(bundle.instance, bundle.rule, oracle_budget());
  RunReport report;
  report.algorithm = "oracle";
  report.cost = r.opt_cost;
  report.unit_shifts = r.witness ? r.witness->unit_shifts() : 0;
  report.success = r.witness.has_value();
  report.action = r.witness;
  report.wall_ms = ms_since(t0);
  std::cout << to_json_line(report) << "\n";
  std::cerr << "opt=" << to_string(r.opt_cost) << " min_unit_shifts=" << r.min_unit_shifts
            << " explored=" << r.explored << "\n";
  return 0;
}

int cmd_verify(const std::string& path, const std::string& action_path) {
  InstanceBundle bundle = parse_instance(read_file(path));
  ShiftAction action = parse_action(read_file(action_path));
  if (static_cast<int>(action.shifts.size()) != bundle.instance.voter_count())
    throw std::runtime_error("action length does not match the voter count");
  bool ok = is_successful(bundle.instance, action, bundle.rule);
  std::cout << "success=" << (ok ? "true" : "false")
            << " cost=" << to_string(cost(bundle.instance, action)) << "\n";
  return ok ? 0 : 1;
}

int cmd_generate(const std::string& reduction, const std::string& input,
                 const std::string& out_path, const std::string& witness_out, int k, int t,
                 const std::string& delta_text, const std::string& alpha_text) {
  Rational alpha = parse_rational(alpha_text);
  std::string text = read_file(input);
  ReductionOutput out = [&] {
    if (reduction == "dks-aon") return reduce_dks_aon(parse_graph(text), k, t, alpha);
    if (reduction == "dks-unit") return reduce_dks_unit(parse_graph(text), k, t, alpha);
    if (reduction == "clique-gap")
      return reduce_clique_gap(parse_graph(text), k, parse_rational(delta_text), alpha);
    if (reduction == "setcover") return reduce_setcover(parse_setcover(text), false, alpha);
    if (reduction == "setcover-unit") return reduce_setcover(parse_setcover(text), true, alpha);
    if (reduction == "vc3") return reduce_vc3(parse_graph(text), k);
    throw std::runtime_error("unknown reduction " + reduction);
  }();
  write_file(out_path, serialize_instance(out.instance, out.rule));
  std::cerr << "wrote " << out_path << ": m=" << out.instance.candidate_count()
            << " n=" << out.instance.voter_count() << "\n";
  if (out.witness) {
    std::cerr << "witness cost=" << to_string(cost(out.instance, out.witness->action))
              << " bound=" << to_string(out.witness->claimed_cost_bound) << "\n";
    if (!witness_out.empty()) write_file(witness_out, serialize_action(out.witness->action));
  } else if (!witness_out.empty()) {
    std::cerr << "no witness found\n";
    return 1;
  }
  return 0;
}

int cmd_bench(int seeds, int m, int n, const std::string& family_name,
              const std::vector<std::string>& algos, const std::string& eps_text) {
  Rational eps = parse_rational(eps_text);
  std::vector<RandomPriceFamily> families;
  if (family_name == "all") {
    families = {RandomPriceFamily::Unit, RandomPriceFamily::UniformAon,
                RandomPriceFamily::OneInfAon, RandomPriceFamily::General};
  } else {
    auto f = random_family_from_name(family_name);
    if (!f) throw std::runtime_error("unknown price family " + family_name);
    families = {*f};
  }
  std::cout << "seed,m,n,family,algorithm,eps,cost,oracle,ratio,success\n";
  for (RandomPriceFamily family : families) {
    for (int seed = 0; seed < seeds; ++seed) {
      Instance inst = random_instance(seed, m, n, family);
      OracleResult oracle = brute_force_opt(inst, Rule::positional(), oracle_budget());
      for (const auto& algo : algos) {
        bool fits = true;
        PriceFamilyKind kind = classify_prices(inst).kind;
        if ((algo == "ptas-unit" || algo == "eptas-unit") && kind != PriceFamilyKind::Unit)
          fits = false;
        if (algo == "greedy-aon" && kind != PriceFamilyKind::UniformAllOrNothing) fits = false;
        if (!fits) continue;
        std::optional<ShiftAction> action =
            run_algorithm(algo, inst, Rule::positional(), eps);
        std::cout << seed << "," << m << "," << n << "," << to_string(family) << "," << algo
                  << "," << to_string(eps) << ",";
        if (action) {
          ExtRational c = cost(inst, *action);
          std::cout << to_string(c) << "," << to_string(oracle.opt_cost) << ",";
          if (c.is_finite() && oracle.opt_cost.is_finite() && oracle.opt_cost.value() != 0)
            std::cout << to_string(Rational(c.value() / oracle.opt_cost.value()));
          std::cout << "," << (is_successful(inst, *action, Rule::positional()) ? "1" : "0")
                    << "\n";
        } else {
          std::cout << "inf," << to_string(oracle.opt_cost) << ",,0\n";
        }
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shift-Bribery solvers, oracle, and reduction generators"};
  app.require_subcommand(1);

  std::string instance_path, algo = "fpt", eps = "1/2", action_out, action_path;
  bool with_oracle = false;
  auto* solve = app.add_subcommand("solve", "run a solver on an instance file");
  solve->add_option("instance", instance_path)->required();
  solve->add_option("--algo", algo,
                    "ptas-unit | fpt | eptas-unit | lp-additive | ptas-general | greedy-aon");
  solve->add_option("--eps", eps, "approximation parameter (rational or decimal)");
  solve->add_flag("--oracle", with_oracle, "also compute the brute-force optimum");
  solve->add_option("--action-out", action_out, "write the winning shift action here");

  auto* oracle = app.add_subcommand("oracle", "brute-force optimum of an instance file");
  oracle->add_option("instance", instance_path)->required();

  auto* verify = app.add_subcommand("verify", "check a shift action against an instance");
  verify->add_option("instance", instance_path)->required();
  verify->add_option("--action", action_path)->required();

  std::string reduction, input, out_path = "instance.sb", witness_out, delta = "1/2",
                                alpha_text = "1/2";
  int k = 3, t = 1;
  auto* generate = app.add_subcommand("generate", "emit a hardness-reduction instance");
  generate->add_option("--reduction", reduction,
                       "dks-aon | dks-unit | clique-gap | setcover | setcover-unit | vc3")
      ->required();
  generate->add_option("--input", input, "graph or set-cover file")->required();
  generate->add_option("--out", out_path);
  generate->add_option("--witness-out", witness_out);
  generate->add_option("--k", k);
  generate->add_option("--t", t);
  generate->add_option("--delta", delta);
  generate->add_option("--alpha", alpha_text);

  int seeds = 25, bm = 4, bn = 4;
  std::string family = "all";
  std::vector<std::string> algos{"fpt", "ptas-unit", "eptas-unit", "lp-additive", "greedy-aon"};
  auto* bench = app.add_subcommand("bench", "sweep random instances and emit ratio CSV");
  bench->add_option("--seeds", seeds);
  bench->add_option("--m", bm);
  bench->add_option("--n", bn);
  bench->add_option("--family", family, "unit | uniform-aon | one-inf-aon | general | all");
  bench->add_option("--algos", algos);
  bench->add_option("--eps", eps);

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return cmd_solve(instance_path, algo, eps, with_oracle, action_out);
    if (oracle->parsed()) return cmd_oracle(instance_path);
    if (verify->parsed()) return cmd_verify(instance_path, action_path);
    if (generate->parsed())
      return cmd_generate(reduction, input, out_path, witness_out, k, t, delta, alpha_text);
    if (bench->parsed()) return cmd_bench(seeds, bm, bn, family, algos, eps);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
