#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gkat/element.hpp"

namespace gkat {

/// Two-sorted term over the signature. Negation is not a constructor: `!t`
/// is stored as Arrow(t, Zero).
///
/// Sorting: a term is Test-sorted iff it contains no Star and no Program
/// variable. Arrow requires Test-sorted children; the factory throws
/// SortError otherwise, so every Term value is well sorted.
class Term {
 public:
  enum class Kind : std::uint8_t { Var, Zero, One, Plus, Seq, Star, Arrow };

  /// The constant 0.
  Term() : Term(zero()) {}

  static Term var(std::string name, Sort sort);
  static Term zero();
  static Term one();
  static Term plus(Term lhs, Term rhs);
  static Term seq(Term lhs, Term rhs);
  static Term star(Term body);
  static Term arrow(Term lhs, Term rhs);
  static Term negate(Term t) { return arrow(std::move(t), zero()); }

  Kind kind() const noexcept;
  Sort sort() const noexcept;
  /// Variable name; empty for non-variables.
  const std::string& name() const noexcept;
  /// Children: lhs/rhs for binary nodes, `lhs()` is the body of Star.
  const Term& lhs() const;
  const Term& rhs() const;
  bool is_negation() const noexcept;

  /// Free variables with their sorts, in order of first occurrence
  /// (left to right).
  std::vector<std::pair<std::string, Sort>> variables() const;

  /// Re-associates every chain of + and ; to the left.
  Term left_associated() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace gkat
