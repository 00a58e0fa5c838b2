#pragma once

#include <string>
#include <vector>

#include "gkat/term.hpp"

namespace gkat {

enum class Rel : std::uint8_t { Eq, Leq };

/// `lhs = rhs` or `lhs <= rhs`, the latter in the derived order.
struct Relation {
  Term lhs;
  Term rhs;
  Rel rel = Rel::Eq;
};

/// hypotheses => conclusion; an equation is the case with no hypotheses.
struct QuasiEquation {
  std::vector<Relation> hypotheses;
  Relation conclusion;

  /// Free variables in order of first occurrence, hypotheses first.
  std::vector<std::pair<std::string, Sort>> variables() const;
};

}  // namespace gkat
