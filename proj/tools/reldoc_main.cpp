#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "reldoc/cli.hpp"

using namespace reldoc;

namespace {

struct Common {
  std::string in;
  std::optional<double> eps;
  std::optional<std::size_t> hom_cap;
  std::optional<std::size_t> max_iter;
  std::optional<std::uint64_t> seed;
  bool json = false;
  bool text = false;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--in", c.in, "instance file (JSON)")->required();
  sub->add_option("--eps", c.eps, "tolerance for Lawvere comparisons");
  sub->add_option("--hom-cap", c.hom_cap, "largest hom-set to enumerate");
  sub->add_option("--max-iter", c.max_iter, "iteration bound for fixpoints");
  sub->add_option("--seed", c.seed, "sampling seed (RELDOC_SEED takes precedence)");
  auto* j = sub->add_flag("--json", c.json, "JSON output (default)");
  auto* t = sub->add_flag("--text", c.text, "human-readable output");
  j->excludes(t);
}

int emit(const CommandResult& r, bool text) {
  if (text)
    std::cout << render_text(r.json);
  else
    std::cout << r.json.dump(2) << "\n";
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite relational doctrines: law checks, quotients and bisimulations"};
  app.require_subcommand(1);
  Common c;

  auto* laws = app.add_subcommand("laws", "check doctrine laws");
  std::vector<std::string> law_targets;
  LawFlags flags;
  laws->add_option("--doctrine", law_targets, "doctrine ids (default: all)");
  laws->add_flag("--frobenius", flags.frobenius, "also check the Frobenius law");
  laws->add_flag("--modular", flags.modular, "also check the modular law");
  laws->add_flag("--cartesian", flags.cartesian, "also check the cartesian structure");
  laws->add_flag("--ruc", flags.ruc, "also check unique choice");

  auto* quot = app.add_subcommand("quotient", "quotient of an equivalence");
  std::string space;
  quot->add_option("--space", space, "metric space id")->required();
  auto* sep = app.add_subcommand("separate", "separation quotient of an equivalence");
  sep->add_option("--space", space, "metric space id")->required();

  auto* fact = app.add_subcommand("factorize", "quotient/injection factorization of a map");
  std::string map;
  fact->add_option("--map", map, "map id")->required();

  auto* bis = app.add_subcommand("bisim", "greatest bisimulation between two transition systems");
  std::vector<std::string> systems;
  std::optional<std::string> start;
  bis->add_option("--ts", systems, "two transition system ids")->required()->expected(2);
  bis->add_option("--start", start, "relation id to start below");

  auto* ruc = app.add_subcommand("ruc", "rule of unique choice for one pair of objects");
  std::string doctrine, x, y;
  ruc->add_option("--doctrine", doctrine, "doctrine id")->required();
  ruc->add_option("--x", x, "source object id");
  ruc->add_option("--y", y, "target object id");

  auto* rep = app.add_subcommand("report", "run every check the instance supports");

  for (auto* s : {laws, quot, sep, fact, bis, ruc, rep}) add_common(s, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    CommandResult r = error_result("", "BadInput", e.what());
    std::cout << r.json.dump(2) << "\n";
    return 2;
  }

  std::string command = app.get_subcommands().front()->get_name();
  try {
    OptionOverrides o{c.eps, c.hom_cap, c.max_iter, c.seed};
    if (const char* env = std::getenv("RELDOC_SEED")) {
      try {
        o.seed = std::stoull(env);
      } catch (const std::exception&) {
        throw Error(ErrorCode::bad_input, std::string("RELDOC_SEED is not an integer: ") + env);
      }
    }
    Instance in = load_instance_file(c.in, o);
    CommandResult r;
    if (command == "laws")
      r = cmd_check_laws(in, law_targets, flags);
    else if (command == "quotient")
      r = cmd_quotient(in, space);
    else if (command == "separate")
      r = cmd_separate(in, space);
    else if (command == "factorize")
      r = cmd_factorize(in, map);
    else if (command == "bisim")
      r = cmd_bisim(in, systems[0], systems[1], start);
    else if (command == "ruc")
      r = cmd_ruc(in, doctrine, x, y);
    else
      r = cmd_report(in);
    return emit(r, c.text);
  } catch (const Error& e) {
    return emit(error_result(command, e), c.text);
  } catch (const std::exception& e) {
    return emit(error_result(command, "InternalError", e.what()), c.text);
  }
}
