#pragma once

#include <cstddef>
#include <limits>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "reldoc/law_report.hpp"

namespace reldoc {

// Values of a quantale. Finite carriers store the element index; the
// Lawvere carrier stores the real number itself (inf included).
using Value = double;

inline constexpr Value kInf = std::numeric_limits<double>::infinity();

class Quantale {
 public:
  enum class Kind { finite, lawvere };

  static Quantale boolean();
  static Quantale lawvere(double eps = 1e-9);
  static Quantale powerset(const std::vector<std::string>& base);
  // Order is the reflexive-transitive closure of `leq_pairs`. Throws
  // MalformedTable when the tensor table is not total or names are unknown.
  // Laws are not checked here; see check_quantale_laws / certified().
  static Quantale from_tables(std::string name, std::vector<std::string> carrier,
                              const std::vector<std::pair<std::string, std::string>>& leq_pairs,
                              const std::vector<std::vector<std::string>>& tensor_triples,
                              const std::string& unit);

  Kind kind() const { return kind_; }
  bool finite() const { return kind_ == Kind::finite; }
  const std::string& name() const { return name_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& element_names() const { return elements_; }
  double eps() const { return eps_; }

  Value unit() const { return unit_; }
  Value bottom() const { return bottom_; }
  Value top() const { return top_; }

  Value tensor(Value a, Value b) const {
    if (kind_ == Kind::lawvere) return a + b;  // inf + x = inf
    return tensor_[idx(a) * n_ + idx(b)];
  }
  Value join(Value a, Value b) const {
    if (kind_ == Kind::lawvere) return a < b ? a : b;
    return join_[idx(a) * n_ + idx(b)];
  }
  Value meet(Value a, Value b) const {
    if (kind_ == Kind::lawvere) return a < b ? b : a;
    return meet_[idx(a) * n_ + idx(b)];
  }
  bool leq(Value a, Value b) const {
    if (kind_ == Kind::lawvere) {
      if (a == kInf) return true;
      if (b == kInf) return false;
      return a >= b - eps_;
    }
    return leq_[idx(a) * n_ + idx(b)] != 0;
  }
  bool eq(Value a, Value b) const {
    if (kind_ == Kind::lawvere) {
      if (a == kInf || b == kInf) return a == b;
      return a - b <= eps_ && b - a <= eps_;
    }
    return a == b;
  }

  // All elements of a finite carrier (as values).
  std::vector<Value> elements() const;

  bool zero_divisor_free() const { return zero_divisor_free_; }
  bool meet_is_tensor() const { return meet_is_tensor_; }
  // False when some pair of elements has no join/meet in the given order.
  bool is_lattice() const { return lattice_; }

  std::string format(Value v) const;
  // Accepts an element name (finite) or a number / "inf" (Lawvere).
  Value parse(const std::string& token) const;
  Value parse_number(double x) const;

  // Element lookup for finite carriers; throws UnknownObject.
  Value element(const std::string& name) const;

  bool operator==(const Quantale& other) const;

  // Throws MalformedTable with the failing law when check_quantale_laws fails.
  const Quantale& certified() const;

 private:
  std::size_t idx(Value v) const { return static_cast<std::size_t>(v); }
  void derive_lattice();
  void derive_flags();

  Kind kind_ = Kind::finite;
  std::string name_;
  std::vector<std::string> elements_;
  std::size_t n_ = 0;
  std::vector<char> leq_;
  std::vector<Value> tensor_, join_, meet_;
  Value unit_ = 0, bottom_ = 0, top_ = 0;
  double eps_ = 0;
  bool zero_divisor_free_ = true;
  bool meet_is_tensor_ = false;
  bool lattice_ = true;
};

LawReport check_quantale_laws(const Quantale& q, unsigned long long seed = 0);

// Ordered commutative semiring with finite sums only.
class Semiring {
 public:
  enum class Kind { finite, nonneg_real };

  static Semiring nonneg_reals(double eps = 1e-9);
  static Semiring from_quantale(const Quantale& q);
  // Tables are triples (a, b, a+b) and (a, b, a*b); order by leq pairs.
  static Semiring from_tables(std::string name, std::vector<std::string> carrier,
                              const std::vector<std::pair<std::string, std::string>>& leq_pairs,
                              const std::vector<std::vector<std::string>>& add_triples,
                              const std::vector<std::vector<std::string>>& mul_triples,
                              const std::string& zero, const std::string& one);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  std::size_t size() const { return elements_.size(); }
  Value zero() const { return zero_; }
  Value one() const { return one_; }
  Value add(Value a, Value b) const {
    if (kind_ == Kind::nonneg_real) return a + b;
    return add_[idx(a) * n_ + idx(b)];
  }
  Value mul(Value a, Value b) const {
    if (kind_ == Kind::nonneg_real) return a * b;
    return mul_[idx(a) * n_ + idx(b)];
  }
  bool leq(Value a, Value b) const {
    if (kind_ == Kind::nonneg_real) return a <= b + eps_;
    return leq_[idx(a) * n_ + idx(b)] != 0;
  }
  bool eq(Value a, Value b) const { return leq(a, b) && leq(b, a); }
  std::vector<Value> elements() const;
  std::string format(Value v) const;
  double eps() const { return eps_; }

 private:
  std::size_t idx(Value v) const { return static_cast<std::size_t>(v); }

  Kind kind_ = Kind::finite;
  std::string name_;
  std::vector<std::string> elements_;
  std::size_t n_ = 0;
  std::vector<char> leq_;
  std::vector<Value> add_, mul_;
  Value zero_ = 0, one_ = 0;
  double eps_ = 0;
};

LawReport check_semiring_laws(const Semiring& s, unsigned long long seed = 0);

}  // namespace reldoc
