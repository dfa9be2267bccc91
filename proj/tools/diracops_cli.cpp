#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "diracops/clifford.hpp"
#include "diracops/parser.hpp"
#include "diracops/solvers.hpp"
#include "diracops/suites.hpp"
#include "diracops/weighted.hpp"

using namespace diracops;

namespace {

int finish(const Report& r, const std::string& json_path) {
  std::cout << r.to_table();
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "cannot write " << json_path << "\n";
      return 2;
    }
    out << r.to_json() << "\n";
  }
  return r.ok() ? 0 : 1;
}

bool parse_sig(const std::string& text, Signature& sig) {
  auto comma = text.find(',');
  if (comma == std::string::npos) return false;
  try {
    sig.r = std::stoi(text.substr(0, comma));
    sig.s = std::stoi(text.substr(comma + 1));
  } catch (const std::exception&) {
    return false;
  }
  return sig.r >= 0 && sig.s >= 0 && sig.dim() >= 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for ambient Dirac operator identities"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string json_path;
  app.add_option("--json", json_path, "write the report as a JSON document");

  auto* nf = app.add_subcommand("nf", "print the normal form of an expression");
  std::string expr_text;
  nf->add_option("expr", expr_text, "expression")->required();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite_name, sig_text = "2,2";
  int pmax = 4, deg = 3, trials = 20;
  long seed = 1;
  verify->add_option("--suite", suite_name, "relations|prop2|prop3|prop4|flat|kernel|yiso")
      ->required()
      ->check(CLI::IsMember({"relations", "prop2", "prop3", "prop4", "flat", "kernel", "yiso"}));
  verify->add_option("--pmax", pmax, "largest p / dimension bound");
  verify->add_option("--sig", sig_text, "signature R,S for the flat suites");
  verify->add_option("--deg", deg, "polynomial degree bound");
  verify->add_option("--trials", trials, "random trials per case");
  verify->add_option("--seed", seed, "random seed");

  auto* solve = app.add_subcommand("solve", "run a formal-extension solver");
  std::string parity_name;
  int p = 1, max_order = -1;
  bool generic_w = false;
  solve->add_option("--parity", parity_name, "even|odd")
      ->required()
      ->check(CLI::IsMember({"even", "odd"}));
  solve->add_option("--p", p, "order index p >= 1")->check(CLI::PositiveNumber);
  solve->add_option("--max-order", max_order, "highest slot to solve");
  solve->add_flag("--generic-w", generic_w, "solve at symbolic weight w");

  auto* constants = app.add_subcommand("constants", "proportionality constants table");
  std::string cparity;
  int cpmax = 3;
  constants->add_option("--parity", cparity, "even|odd")
      ->required()
      ->check(CLI::IsMember({"even", "odd"}));
  constants->add_option("--pmax", cpmax, "largest p")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (*nf) {
      AlgebraElement value = evaluate(parse(expr_text));
      std::cout << format_element(value) << "\n";
      Report r;
      r.suite = "nf";
      Case c;
      c.id = expr_text;
      c.computed = format_element(value);
      r.cases.push_back(c);
      if (!json_path.empty()) {
        std::ofstream out(json_path);
        out << r.to_json() << "\n";
      }
      return 0;
    }

    if (*verify) {
      Report r;
      if (suite_name == "relations")
        r = verify_identity_suite(AlgebraSuite::Relations, pmax, seed);
      else if (suite_name == "prop2")
        r = verify_identity_suite(AlgebraSuite::Prop2, pmax, seed);
      else if (suite_name == "prop3")
        r = verify_identity_suite(AlgebraSuite::Prop3, pmax, seed);
      else if (suite_name == "prop4")
        r = verify_identity_suite(AlgebraSuite::Prop4, pmax, seed);
      else if (suite_name == "flat") {
        Signature sig;
        if (!parse_sig(sig_text, sig)) {
          std::cerr << "bad --sig, expected R,S\n";
          return 2;
        }
        r = verify_flat_relations(sig, deg, trials, seed, true);
      } else if (suite_name == "kernel")
        r = kernel_suite(std::max(pmax, 3), trials, seed, true);
      else
        r = yiso_suite(pmax, 4, seed);
      return finish(r, json_path);
    }

    if (*solve) {
      Parity parity = parity_name == "even" ? Parity::Even : Parity::Odd;
      int order = max_order;
      if (order < 0) order = parity == Parity::Even ? 2 * p : 2 * p + 1;
      SymScalar w = generic_w ? SymScalar::w()
                              : (parity == Parity::Even ? even_weight(p) : odd_weight(p));
      ExtensionResult res = parity == Parity::Even ? even_extend("s", w, order)
                                                   : odd_extend("s", w, order);
      Report r;
      r.suite = parity == Parity::Even ? "even extension" : "odd extension";
      Case rep;
      rep.id = "representative, w = " + to_string(w);
      rep.computed = to_string(res.representative);
      rep.note = "solved through order " + std::to_string(res.solvable_to);
      r.cases.push_back(rep);
      Case obs;
      obs.id = "obstruction";
      if (res.obstruction)
        obs.computed = "slot " + std::to_string(res.obstruction->slot) + ": " +
                       to_string(res.obstruction->value);
      else
        obs.computed = "none";
      r.cases.push_back(obs);
      Case den;
      den.id = "denominators";
      for (const auto& d : res.denominators) den.computed += to_string(d) + "; ";
      if (den.computed.empty()) den.computed = "none";
      r.cases.push_back(den);
      for (const auto& c : r.cases) std::cout << c.id << ": " << c.computed << "\n";
      if (!json_path.empty()) {
        std::ofstream out(json_path);
        out << r.to_json() << "\n";
      }
      return 0;
    }

    Parity parity = cparity == "even" ? Parity::Even : Parity::Odd;
    Report r;
    r.suite = "proportionality constants";
    for (int i = 1; i <= cpmax; ++i) {
      Case c;
      c.id = "p=" + std::to_string(i);
      try {
        c.computed = "c = " + to_string(proportionality_constant(parity, i));
      } catch (const NotProportional&) {
        c.computed = "not proportional";
        c.status = Status::Fail;
      }
      r.cases.push_back(c);
      std::cout << c.id << "  " << c.computed << "\n";
    }
    if (!json_path.empty()) {
      std::ofstream out(json_path);
      out << r.to_json() << "\n";
    }
    return r.ok() ? 0 : 1;
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
