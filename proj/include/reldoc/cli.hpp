#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reldoc/doctrine.hpp"
#include "reldoc/finset.hpp"
#include "reldoc/law_report.hpp"
#include "reldoc/quantale.hpp"

namespace reldoc {

inline constexpr int kSchemaVersion = 1;

struct InstanceOptions {
  double eps = 1e-9;
  std::size_t hom_cap = kDefaultHomCap;
  std::size_t max_iter = 1000;
  std::size_t sample_count = 8;  // sampled relations per fibre
  std::size_t law_budget = 1u << 16;
  std::uint64_t seed = 0;
};

// Command-line values that take precedence over the file's options.
struct OptionOverrides {
  std::optional<double> eps;
  std::optional<std::size_t> hom_cap;
  std::optional<std::size_t> max_iter;
  std::optional<std::uint64_t> seed;
};

struct NamedRelation {
  std::string quantale;
  FinRel rel;
};

struct TransitionSpec {
  FinSet states;
  std::vector<std::vector<std::size_t>> succ;
};

// Powerset algebra: join of every subset (indexed by bitmask).
struct AlgebraSpec {
  FinSet carrier;
  std::vector<std::size_t> join;
};

// constructor: "vrel" | "qr" (over `quantale`) or "H"
struct DoctrineSpec {
  std::string constructor;
  std::string quantale;
};

struct Instance {
  InstanceOptions options;
  std::map<std::string, Quantale> quantales;
  std::map<std::string, FinSet> sets;
  std::map<std::string, FinMap> maps;
  std::map<std::string, NamedRelation> relations;
  std::map<std::string, NamedRelation> metric_spaces;  // equivalences
  std::map<std::string, TransitionSpec> transition_systems;
  std::map<std::string, AlgebraSpec> algebras;
  std::map<std::string, DoctrineSpec> doctrines;
};

// Parses and certifies an instance. Throws Error (BadInput, UnknownObject,
// NotEquivalence, ...) on anything malformed.
Instance load_instance(const Json& j, const OptionOverrides& o = {});
Instance load_instance_file(const std::string& path, const OptionOverrides& o = {});

struct LawFlags {
  bool frobenius = false;
  bool modular = false;
  bool cartesian = false;
  bool ruc = false;
};

// exit_code: 0 pass, 1 some check failed, 2 error
struct CommandResult {
  int exit_code = 0;
  Json json;
};

CommandResult cmd_check_laws(const Instance& in, const std::vector<std::string>& targets, const LawFlags& flags);
CommandResult cmd_quotient(const Instance& in, const std::string& space);
CommandResult cmd_separate(const Instance& in, const std::string& space);
CommandResult cmd_factorize(const Instance& in, const std::string& map);
// `start` optionally names a relation between the state sets; its quantale
// selects the relations the bisimulation lives in (Boolean by default).
CommandResult cmd_bisim(const Instance& in, const std::string& ts1, const std::string& ts2,
                        const std::optional<std::string>& start = std::nullopt);
CommandResult cmd_ruc(const Instance& in, const std::string& doctrine, const std::string& x, const std::string& y);
CommandResult cmd_report(const Instance& in);

CommandResult error_result(const std::string& command, const Error& e);
CommandResult error_result(const std::string& command, const std::string& code, const std::string& message);

// Human-readable rendering of a command's JSON output.
std::string render_text(const Json& j);

}  // namespace reldoc
