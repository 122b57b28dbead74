#include "reldoc/law_report.hpp"

#include <sstream>

#include "reldoc/error.hpp"

namespace reldoc {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::malformed_table: return "MalformedTable";
    case ErrorCode::empty_base: return "EmptyBase";
    case ErrorCode::unknown_object: return "UnknownObject";
    case ErrorCode::shape_mismatch: return "ShapeMismatch";
    case ErrorCode::cap_exceeded: return "CapExceeded";
    case ErrorCode::non_functorial: return "NonFunctorial";
    case ErrorCode::size_limit: return "SizeLimit";
    case ErrorCode::non_monotone_lifting: return "NonMonotoneLifting";
    case ErrorCode::not_descent_datum: return "NotDescentDatum";
    case ErrorCode::not_an_arrow: return "NotAnArrow";
    case ErrorCode::not_equivalence: return "NotEquivalence";
    case ErrorCode::not_coarser: return "NotCoarser";
    case ErrorCode::no_quotient_constructor: return "NoQuotientConstructor";
    case ErrorCode::ill_defined: return "IllDefined";
    case ErrorCode::not_parallel: return "NotParallel";
    case ErrorCode::no_products: return "NoProducts";
    case ErrorCode::precondition_failed: return "PreconditionFailed";
    case ErrorCode::not_congruence: return "NotCongruence";
    case ErrorCode::bad_input: return "BadInput";
  }
  return "Error";
}

LawCheck& LawReport::add(const std::string& law) {
  checks.push_back(LawCheck{});
  checks.back().law = law;
  return checks.back();
}

LawCheck& LawReport::get(const std::string& law) {
  for (auto& c : checks)
    if (c.law == law) return c;
  return add(law);
}

const LawCheck* LawReport::find(const std::string& law) const {
  for (const auto& c : checks)
    if (c.law == law) return &c;
  return nullptr;
}

bool LawReport::ok() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

bool LawReport::passes(const std::string& law) const {
  const LawCheck* c = find(law);
  if (c == nullptr) throw Error(ErrorCode::unknown_object, "no law named " + law);
  return c->pass;
}

void LawReport::merge(const LawReport& other, const std::string& prefix) {
  for (const auto& c : other.checks) {
    LawCheck copy = c;
    copy.law = prefix + c.law;
    checks.push_back(std::move(copy));
  }
}

Json LawReport::to_json() const {
  Json out;
  out["subject"] = subject;
  out["pass"] = ok();
  Json laws = Json::array();
  for (const auto& c : checks) {
    Json j;
    j["law"] = c.law;
    j["pass"] = c.pass;
    j["cases"] = c.cases;
    j["mode"] = c.exhaustive ? "exhaustive" : "sampled";
    if (!c.pass) j["witness"] = c.witness;
    if (!c.detail.is_null()) j["detail"] = c.detail;
    laws.push_back(std::move(j));
  }
  out["laws"] = std::move(laws);
  return out;
}

std::string LawReport::to_text() const {
  std::ostringstream os;
  os << subject << ": " << (ok() ? "PASS" : "FAIL") << "\n";
  for (const auto& c : checks) {
    os << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.law << "  (" << c.cases << " cases, "
       << (c.exhaustive ? "exhaustive" : "sampled") << ")\n";
    if (!c.pass) os << "        witness: " << c.witness.dump() << "\n";
  }
  return os.str();
}

}  // namespace reldoc
