#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "gkat/algebra.hpp"
#include "gkat/errors.hpp"

namespace gkat {

/// Raw table description of a finite algebra. Indices refer to
/// `element_names`; tables are row-major |K|x|K| with row = left operand.
struct FiniteAlgebraData {
  /// Marks an arrow cell outside tests x tests that carries no value.
  static constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

  std::string name;
  std::vector<std::string> element_names;
  std::vector<std::uint32_t> tests;
  std::uint32_t zero = 0;
  std::uint32_t one = 0;
  std::vector<std::uint32_t> plus;
  std::vector<std::uint32_t> seq;
  std::vector<std::uint32_t> arrow;
  std::vector<std::uint32_t> star;

  std::size_t size() const noexcept { return element_names.size(); }
};

/// Table-backed algebra. Construction validates the structural invariants:
/// well-formed tables, 0 and 1 among the tests, and the tests closed under
/// +, ; and (on tests x tests) ->. The algebraic laws are not assumed;
/// check them with run_law_suite.
class FiniteAlgebra final : public Algebra {
 public:
  explicit FiniteAlgebra(FiniteAlgebraData data);

  const std::string& name() const override { return data_.name; }
  bool is_finite() const override { return true; }

  Element zero() const override { return make_element(data_.zero); }
  Element one() const override { return make_element(data_.one); }
  Element plus(Element a, Element b) const override {
    return make_element(data_.plus[cell(a, b)]);
  }
  Element seq(Element a, Element b) const override {
    return make_element(data_.seq[cell(a, b)]);
  }
  Element star(Element a) const override {
    return make_element(data_.star[a.index]);
  }
  Element arrow(Element a, Element b) const override;
  bool is_test(Element a) const override { return is_test_[a.index] != 0; }

  std::span<const Element> elements() const override { return elements_; }
  std::span<const Element> test_elements() const override { return tests_; }

  std::string element_name(Element a) const override {
    return data_.element_names[a.index];
  }
  std::optional<Element> find_element(std::string_view name) const override;
  std::uint64_t identity_hash() const override { return hash_; }

  std::size_t size() const noexcept { return data_.size(); }
  Element at(std::uint32_t index) const;
  const FiniteAlgebraData& data() const noexcept { return data_; }

  /// Length of the longest strict chain in the derived order, counted in
  /// steps (a one-element carrier has height 0).
  std::size_t height() const;

 private:
  std::size_t cell(Element a, Element b) const noexcept {
    return static_cast<std::size_t>(a.index) * data_.size() + b.index;
  }

  FiniteAlgebraData data_;
  std::vector<std::uint8_t> is_test_;
  std::vector<Element> elements_;
  std::vector<Element> tests_;
  std::unordered_map<std::string, std::uint32_t> by_name_;
  std::uint64_t hash_ = 0;
};

using FiniteAlgebraPtr = std::shared_ptr<const FiniteAlgebra>;

/// Least fixpoint of x |-> 1 + a;x iterated from 1, stopping at the first
/// repeated iterate. Throws NonMonotoneAlgebraError when no repetition
/// happens within `carrier_size + 1` steps.
template <class Plus, class Seq>
std::uint32_t star_lfp(std::size_t carrier_size, std::uint32_t one,
                       Plus&& plus, Seq&& seq, std::uint32_t a) {
  std::uint32_t current = one;
  for (std::size_t step = 0; step <= carrier_size; ++step) {
    const std::uint32_t next = plus(one, seq(a, current));
    if (next == current) return current;
    current = next;
  }
  throw NonMonotoneAlgebraError("star iteration did not stabilise within " +
                                std::to_string(carrier_size + 1) + " steps");
}

/// star_lfp over an existing algebra's + and ; (ignores its declared star).
/// For sampled algebras the bound is `max_steps`.
Element star_lfp(const Algebra& alg, Element a, std::size_t max_steps = 4096);

/// Builds a table-backed copy of `alg` restricted to `carrier`, which must
/// be closed under the operations (tests x tests for ->). Arrow cells
/// outside tests x tests are left unset.
FiniteAlgebraPtr tabulate(const Algebra& alg, std::span<const Element> carrier,
                          std::string name);

/// Fills `data.star` with star_lfp of each element.
void synthesize_star(FiniteAlgebraData& data);

/// Canonical rendering of an algebra file (see algebra_file.hpp); the
/// identity hash is taken over this text.
std::string serialize(const FiniteAlgebraData& data);

}  // namespace gkat
