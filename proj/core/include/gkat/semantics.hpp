#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gkat/algebra.hpp"
#include "gkat/relation.hpp"
#include "gkat/term.hpp"

namespace gkat {

struct Binding {
  std::string name;
  Sort sort = Sort::Program;
  Element value;
};

/// Assignment of carrier elements to variables, kept in binding order.
class Valuation {
 public:
  Valuation() = default;
  explicit Valuation(std::vector<Binding> bindings) : bindings_(std::move(bindings)) {}

  /// Adds or replaces a binding.
  void set(const std::string& name, Sort sort, Element value);
  const Binding* find(std::string_view name) const;
  /// Throws UnboundVariableError.
  Element at(std::string_view name) const;

  const std::vector<Binding>& bindings() const noexcept { return bindings_; }
  bool empty() const noexcept { return bindings_.empty(); }
  std::size_t size() const noexcept { return bindings_.size(); }

  /// "b=0, c=m, p=0"
  std::string render(const Algebra& alg) const;

  friend bool operator==(const Valuation& a, const Valuation& b);

 private:
  std::vector<Binding> bindings_;
};

inline bool operator==(const Binding& a, const Binding& b) {
  return a.name == b.name && a.sort == b.sort && a.value == b.value;
}
inline bool operator==(const Valuation& a, const Valuation& b) {
  return a.bindings_ == b.bindings_;
}

struct Exhaustive {};
struct Sampled {
  std::uint64_t count = 10000;
  std::uint64_t seed = 0;
};
using Strategy = std::variant<Exhaustive, Sampled>;

/// Range of Test-sorted variables. AllElements lets them take any carrier
/// element (used to replay witnesses that ignore the declared test set).
enum class TestDomain : std::uint8_t { Tests, AllElements };

struct CheckOptions {
  unsigned jobs = 1;
  /// Largest exhaustive valuation space accepted before SizeError.
  std::uint64_t cap = 100'000'000;
  TestDomain test_domain = TestDomain::Tests;
  /// Variables pinned to one value; they are not enumerated.
  Valuation fixed;
  /// Variables listed here are enumerated first, in this order; the rest
  /// follow in order of first occurrence.
  std::vector<std::string> order;
};

enum class VerdictStatus : std::uint8_t { Valid, Refuted, SampledValid };
const char* to_string(VerdictStatus s);

struct Verdict {
  VerdictStatus status = VerdictStatus::Valid;
  std::optional<Valuation> counterexample;
  /// Conclusion sides at the counterexample, as element names.
  std::optional<std::pair<std::string, std::string>> witness;
  /// Size of the enumerated space or number of samples.
  std::uint64_t space_size = 0;
  /// Valuations examined before the verdict was reached.
  std::uint64_t checked = 0;

  bool holds() const noexcept { return status != VerdictStatus::Refuted; }
};

/// Structural evaluation. Throws UnboundVariableError for a free variable
/// missing from `val` and SortError when a Test variable is bound to a
/// non-test (unless `relaxed`).
Element eval(const Term& term, const Algebra& alg, const Valuation& val,
             bool relaxed = false);

/// Whether `rel` holds at `val`; Leq is p + q = q.
bool holds(const Relation& rel, const Algebra& alg, const Valuation& val,
           bool relaxed = false);

Verdict check_equation(const Algebra& alg, const Term& lhs, const Term& rhs, Rel rel,
                       const Strategy& strategy, const CheckOptions& options = {});

/// Exhaustive enumeration is lexicographic in variable order (first
/// variable most significant) and element declaration order; the first
/// counterexample in that order is reported regardless of `jobs`.
Verdict check_quasi_equation(const Algebra& alg, const QuasiEquation& q,
                             const Strategy& strategy, const CheckOptions& options = {});

}  // namespace gkat
