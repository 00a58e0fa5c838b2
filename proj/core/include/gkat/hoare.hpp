#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gkat/laws.hpp"
#include "gkat/relation.hpp"
#include "gkat/semantics.hpp"

namespace gkat {

/// {pre} prog {post}.
struct HoareTriple {
  Term pre;
  Term prog;
  Term post;
};

/// b;p <= b;p;c and b;p = b;p;c, which agree in every GKAT.
struct TripleEncoding {
  Relation inequation;
  Relation equation;
};

/// Throws SortError unless pre and post are tests.
TripleEncoding triple_to_equation(const HoareTriple& t);

enum class RuleName : std::uint8_t {
  Composition, Conditional, WeakenStrengthen, WhileGKAT, WhileIGKAT,
  KATComposition, KATConditional, KATWhile, KATWeaken
};

/// CLI spelling: composition, conditional, weaken, while-gkat, while-igkat,
/// kat-composition, kat-conditional, kat-while, kat-weaken.
const char* to_string(RuleName r);
std::optional<RuleName> parse_rule_name(std::string_view s);
const std::vector<RuleName>& all_rules();

/// Rule encodings over b, c, d, b1, c1 (tests) and p, q (programs).
/// b1 and c1 stand for the weakened precondition and postcondition.
struct RuleSchema {
  RuleName name;
  std::string text;
  QuasiEquation formula;
};

RuleSchema rule_schema(RuleName name);

Verdict check_rule(const Algebra& alg, RuleName name, const Strategy& strategy,
                   const CheckOptions& options = {});

/// Commutation conditions on a test b and a program p:
///   (1) b;p = p;b   (2) !b;p = p;!b   (3) b;p;!b + !b;p;b = 0
Relation commutation_condition(int index);

struct CommutationVerdict {
  int from = 0;
  int to = 0;
  Verdict verdict;
};

/// All six directed implications, in the order 1=>2, 1=>3, 2=>1, 2=>3,
/// 3=>1, 3=>2. Enumeration order is b then p.
std::vector<CommutationVerdict> commutation_conditions(const Algebra& alg,
                                                       const Strategy& strategy,
                                                       const CheckOptions& options = {});

/// Auxiliary facts about triples: both directions of the inequation and
/// equation forms, and b;p = b;p;c => b;p;!c = 0.
const std::vector<Law>& triple_laws();

/// !(a + b) = !a;!b over tests.
Verdict check_demorgan(const Algebra& alg, const Strategy& strategy,
                       const CheckOptions& options = {});

/// Evidence that an algebra satisfies the denesting side conditions.
struct SideConditionReport {
  std::uint32_t algebra_id = 0;
  std::uint64_t algebra_hash = 0;
  LawReport igkat;
  LawReport demorgan;

  bool passed() const { return igkat.all_hold() && demorgan.all_hold(); }
};

SideConditionReport check_denesting_side_conditions(const Algebra& alg,
                                                    const Strategy& strategy,
                                                    const CheckOptions& options = {});

/// Nested loop form and single loop form.
Term denesting_lhs();
Term denesting_rhs();
/// p;(q;p)* = (p;q)*;p and p*;(q;p*)* = (p+q)*.
const std::vector<Law>& denesting_identities();

struct DenestingResult {
  Verdict equivalence;
  Verdict sliding;
  Verdict star_denesting;
};

/// Throws StaleReportError when `side` was produced for a different
/// algebra and SideConditionError when it records a failure.
DenestingResult denesting_equivalence(const Algebra& alg, const SideConditionReport& side,
                                      const Strategy& strategy,
                                      const CheckOptions& options = {});

}  // namespace gkat
