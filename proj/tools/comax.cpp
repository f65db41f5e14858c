// comax: comaximal graphs of small Lie algebras over finite fields.
#include "comax/algebra_io.hpp"
#include "comax/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

std::vector<std::pair<std::string, std::string>> parse_params(const std::vector<std::string>& raw) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& p : raw) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw comax::Error("parameter '" + p + "' is not key=value");
    out.emplace_back(p.substr(0, eq), p.substr(eq + 1));
  }
  return out;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Comaximal graphs of Lie algebras over finite fields"};
  app.require_subcommand(0, 1);

  comax::RunConfig run;
  std::vector<std::string> params;
  std::string json_path, dot_path, inventory_path, text_path;
  std::uint64_t budget = comax::SolverBudget{}.node_limit;
  app.add_option("--family", run.family, "Catalog family id (or case3 with --param matrix=a,b,c,d)");
  app.add_option("--field", run.field, "Field designation p^k, p, or a prime power")->capture_default_str();
  app.add_option("--param", params, "Family parameter key=value (n, mu, lambda, matrix)");
  app.add_flag("--check", run.check, "Compare against the closed-form predictions");
  app.add_flag("--star", run.star, "Report the bundle and DOT for Gamma* (isolated vertices removed)");
  app.add_option("--json", json_path, "Write the JSON report");
  app.add_option("--dot", dot_path, "Write the graph in DOT format");
  app.add_option("--inventory", inventory_path, "Write the subalgebra inventory as JSON");
  app.add_option("--text", text_path, "Write the text report");
  app.add_option("--budget", budget, "Node limit for each exact solver")->capture_default_str();

  auto* sweep_cmd = app.add_subcommand("sweep", "Check every catalog family over several fields");
  bool sweep_all = false;
  std::string sweep_fields = "2,3,5";
  std::string sweep_families;
  std::string sweep_json;
  sweep_cmd->add_flag("--all", sweep_all, "Sweep every catalog family");
  sweep_cmd->add_option("--families", sweep_families, "Comma-separated family ids");
  sweep_cmd->add_option("--fields", sweep_fields, "Comma-separated field designations")->capture_default_str();
  sweep_cmd->add_option("--json", sweep_json, "Write the sweep report");
  sweep_cmd->add_option("--budget", budget, "Node limit for each exact solver");

  auto* load_cmd = app.add_subcommand("load", "Analyze an algebra from a structure-constants file");
  std::string load_file;
  std::string load_check = "laws";
  load_cmd->add_option("--file", load_file, "Structure-constants file")->required();
  load_cmd->add_option("--check", load_check, "none or laws")->check(CLI::IsMember({"none", "laws"}))->capture_default_str();
  load_cmd->add_flag("--star", run.star, "Report the bundle and DOT for Gamma*");
  load_cmd->add_option("--json", json_path, "Write the JSON report");
  load_cmd->add_option("--dot", dot_path, "Write the graph in DOT format");
  load_cmd->add_option("--inventory", inventory_path, "Write the subalgebra inventory as JSON");
  load_cmd->add_option("--text", text_path, "Write the text report");
  load_cmd->add_option("--budget", budget, "Node limit for each exact solver");

  CLI11_PARSE(app, argc, argv);

  try {
    comax::SolverBudget solver{budget};
    if (*sweep_cmd) {
      std::vector<comax::FamilySpec> families;
      if (sweep_all || sweep_families.empty()) {
        families = comax::sweep_families();
      } else {
        for (const auto& name : split_list(sweep_families)) {
          const auto spec = comax::parse_family(name);
          if (!spec) throw comax::Error("unknown family '" + name + "'");
          families.push_back(*spec);
        }
      }
      const auto result = comax::sweep(families, split_list(sweep_fields), solver);
      std::cout << result.table;
      std::cout << "totals: " << result.totals.match << " match, " << result.totals.mismatch << " mismatch, "
                << result.totals.unpredicted << " unpredicted, " << result.totals.undecided << " undecided, "
                << result.totals.conflict << " conflict, " << result.errors << " errors\n";
      if (!sweep_json.empty()) {
        std::ofstream out(sweep_json, std::ios::binary);
        if (!out) throw comax::Error("cannot write " + sweep_json);
        out << comax::dump_json(result.json);
      }
      return result.ok() ? 0 : 1;
    }

    if (*load_cmd) {
      run.algebra_file = load_file;
      run.laws = load_check == "laws";
      run.check = run.laws;
    } else if (run.family.empty()) {
      std::cerr << "comax: --family is required (or use the sweep / load subcommands)\n" << app.help();
      return 2;
    }
    run.params = parse_params(params);
    run.budget = solver;
    if (!json_path.empty()) run.json_path = json_path;
    if (!dot_path.empty()) run.dot_path = dot_path;
    if (!inventory_path.empty()) run.inventory_path = inventory_path;
    if (!text_path.empty()) run.text_path = text_path;

    const auto report = comax::run(run);
    std::cout << report.text;
    return !run.check || report.summary.ok() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "comax: " << e.what() << "\n";
    return 2;
  }
}
