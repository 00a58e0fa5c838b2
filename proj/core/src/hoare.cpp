#include "gkat/hoare.hpp"

#include "gkat/errors.hpp"
#include "gkat/parser.hpp"

namespace gkat {

namespace {

const SortDecls& rule_decls() {
  static const SortDecls d = {{"b", Sort::Test},  {"c", Sort::Test},  {"d", Sort::Test},
                              {"b1", Sort::Test}, {"c1", Sort::Test}, {"p", Sort::Program},
                              {"q", Sort::Program}};
  return d;
}

const char* rule_text(RuleName r) {
  switch (r) {
    case RuleName::Composition:
      return "b;p <= b;p;c, c;q <= c;q;d => b;p;q = b;p;q;d";
    case RuleName::Conditional:
      return "b;c;p <= b;c;p;d, !b;c;q <= !b;c;q;d => c;(b;p + !b;q) <= c;(b;p + !b;q);d";
    case RuleName::WeakenStrengthen:
      return "b1 <= b, b;p <= b;p;c, c <= c1 => b1;p <= b1;p;c1";
    case RuleName::WhileGKAT:
    case RuleName::WhileIGKAT:
      return "b;c;p <= b;c;p;c => c;(b;p)*;!b <= c;(b;p)*;!b;!b;c";
    case RuleName::KATComposition:
      return "b;p = b;p;c, c;q = c;q;d => b;p;q = b;p;q;d";
    case RuleName::KATConditional:
      return "b;c;p = b;c;p;d, !b;c;q = !b;c;q;d => c;(b;p + !b;q) = c;(b;p + !b;q);d";
    case RuleName::KATWhile:
      return "b;c;p = b;c;p;c => c;(b;p)*;!b = c;(b;p)*;!b;!b;c";
    case RuleName::KATWeaken:
      return "b1 <= b, b;p = b;p;c, c <= c1 => b1;p = b1;p;c1";
  }
  throw ParameterError("unknown rule");
}

}  // namespace

TripleEncoding triple_to_equation(const HoareTriple& t) {
  if (t.pre.sort() != Sort::Test || t.post.sort() != Sort::Test) {
    throw SortError("triple pre- and postconditions must be tests");
  }
  const Term lhs = Term::seq(t.pre, t.prog);
  const Term rhs = Term::seq(lhs, t.post);
  return TripleEncoding{Relation{lhs, rhs, Rel::Leq}, Relation{lhs, rhs, Rel::Eq}};
}

const char* to_string(RuleName r) {
  switch (r) {
    case RuleName::Composition: return "composition";
    case RuleName::Conditional: return "conditional";
    case RuleName::WeakenStrengthen: return "weaken";
    case RuleName::WhileGKAT: return "while-gkat";
    case RuleName::WhileIGKAT: return "while-igkat";
    case RuleName::KATComposition: return "kat-composition";
    case RuleName::KATConditional: return "kat-conditional";
    case RuleName::KATWhile: return "kat-while";
    case RuleName::KATWeaken: return "kat-weaken";
  }
  return "?";
}

const std::vector<RuleName>& all_rules() {
  static const std::vector<RuleName> rules = {
      RuleName::Composition,    RuleName::Conditional,    RuleName::WeakenStrengthen,
      RuleName::WhileGKAT,      RuleName::WhileIGKAT,     RuleName::KATComposition,
      RuleName::KATConditional, RuleName::KATWhile,       RuleName::KATWeaken};
  return rules;
}

std::optional<RuleName> parse_rule_name(std::string_view s) {
  for (auto r : all_rules()) {
    if (s == to_string(r)) return r;
  }
  return std::nullopt;
}

RuleSchema rule_schema(RuleName name) {
  const char* text = rule_text(name);
  return RuleSchema{name, text, parse_quasi_equation(text, rule_decls())};
}

Verdict check_rule(const Algebra& alg, RuleName name, const Strategy& strategy,
                   const CheckOptions& options) {
  return check_quasi_equation(alg, rule_schema(name).formula, strategy, options);
}

Relation commutation_condition(int index) {
  static const SortDecls d = {{"b", Sort::Test}, {"p", Sort::Program}};
  switch (index) {
    case 1: return parse_relation("b;p = p;b", d);
    case 2: return parse_relation("!b;p = p;!b", d);
    case 3: return parse_relation("b;p;!b + !b;p;b = 0", d);
    default: throw ParameterError("commutation conditions are numbered 1 to 3");
  }
}

std::vector<CommutationVerdict> commutation_conditions(const Algebra& alg,
                                                       const Strategy& strategy,
                                                       const CheckOptions& options) {
  CheckOptions opts = options;
  opts.order = {"b", "p"};
  std::vector<CommutationVerdict> out;
  for (int from = 1; from <= 3; ++from) {
    for (int to = 1; to <= 3; ++to) {
      if (from == to) continue;
      QuasiEquation q{{commutation_condition(from)}, commutation_condition(to)};
      out.push_back({from, to, check_quasi_equation(alg, q, strategy, opts)});
    }
  }
  return out;
}

const std::vector<Law>& triple_laws() {
  static const std::vector<Law> laws = {
      make_law("triple-leq-to-eq", "b;p <= b;p;c => b;p = b;p;c"),
      make_law("triple-eq-to-leq", "b;p = b;p;c => b;p <= b;p;c"),
      make_law("triple-complement", "b;p = b;p;c => b;p;!c = 0"),
  };
  return laws;
}

Verdict check_demorgan(const Algebra& alg, const Strategy& strategy, const CheckOptions& options) {
  return check_quasi_equation(alg, suite_laws(SuiteName::DeMorgan).front().formula, strategy,
                              options);
}

SideConditionReport check_denesting_side_conditions(const Algebra& alg,
                                                    const Strategy& strategy,
                                                    const CheckOptions& options) {
  SideConditionReport r;
  r.algebra_id = alg.id();
  r.algebra_hash = alg.identity_hash();
  r.igkat = run_law_suite(alg, SuiteName::IGKAT, strategy, options);
  r.demorgan = run_law_suite(alg, SuiteName::DeMorgan, strategy, options);
  return r;
}

Term denesting_lhs() {
  static const Term t = parse_term("(b;p;(c;q)*;!c)*;!b", rule_decls());
  return t;
}

Term denesting_rhs() {
  static const Term t = parse_term("b;p;((b + c);(c;q + !c;p))*;!(b + c) + !b", rule_decls());
  return t;
}

const std::vector<Law>& denesting_identities() {
  static const std::vector<Law> laws = {
      make_law("sliding", "p;(q;p)* = (p;q)*;p"),
      make_law("star-denesting", "p*;(q;p*)* = (p + q)*"),
  };
  return laws;
}

DenestingResult denesting_equivalence(const Algebra& alg, const SideConditionReport& side,
                                      const Strategy& strategy, const CheckOptions& options) {
  if (side.algebra_id != alg.id() || side.algebra_hash != alg.identity_hash()) {
    throw StaleReportError("side-condition report belongs to another algebra; re-run the "
                           "igkat and demorgan suites on '" + alg.name() + "'");
  }
  if (side.igkat.suite != SuiteName::IGKAT || side.demorgan.suite != SuiteName::DeMorgan ||
      side.igkat.entries.size() != suite_laws(SuiteName::IGKAT).size() ||
      side.demorgan.entries.size() != suite_laws(SuiteName::DeMorgan).size()) {
    throw StaleReportError("side-condition report does not cover the igkat and demorgan suites");
  }
  if (!side.passed()) {
    const LawEntry* f = side.igkat.first_failure();
    if (!f) f = side.demorgan.first_failure();
    throw SideConditionError("'" + alg.name() + "' fails side condition " + f->law);
  }
  DenestingResult out;
  out.equivalence =
      check_equation(alg, denesting_lhs(), denesting_rhs(), Rel::Eq, strategy, options);
  const auto& ids = denesting_identities();
  out.sliding = check_quasi_equation(alg, ids[0].formula, strategy, options);
  out.star_denesting = check_quasi_equation(alg, ids[1].formula, strategy, options);
  return out;
}

}  // namespace gkat
