#pragma once

#include <cstddef>
#include <string>
#include <deque>
#include <vector>

#include "json.hpp"

namespace reldoc {

using Json = nlohmann::ordered_json;

// One law (or property) checked over a batch of cases.
struct LawCheck {
  std::string law;
  bool pass = true;
  std::size_t cases = 0;
  bool exhaustive = true;  // false once any case batch was subsampled
  Json witness;            // first counterexample, null while passing
  Json detail;             // optional extra data (e.g. computed values)

  // Records one case; keeps the first failing witness.
  void record(bool ok, const Json& w = Json()) {
    ++cases;
    if (!ok && pass) {
      pass = false;
      witness = w;
    }
  }
};

struct LawReport {
  std::string subject;
  std::deque<LawCheck> checks;  // deque: references from add() stay valid

  LawCheck& add(const std::string& law);
  // Existing entry with this name, or a new one.
  LawCheck& get(const std::string& law);
  const LawCheck* find(const std::string& law) const;
  bool ok() const;
  bool passes(const std::string& law) const;
  void merge(const LawReport& other, const std::string& prefix = "");
  Json to_json() const;
  std::string to_text() const;
};

}  // namespace reldoc
