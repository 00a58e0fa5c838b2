#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "gkat/algebra_file.hpp"
#include "gkat/constructions.hpp"
#include "gkat/errors.hpp"
#include "gkat/hoare.hpp"
#include "gkat/instances.hpp"
#include "gkat/laws.hpp"
#include "gkat/parser.hpp"
#include "gkat/semantics.hpp"
#include "report.hpp"

namespace gkat::cli {

namespace {

struct Options {
  std::string builtin;
  std::string algebra_file;
  std::string construct;
  std::string mode;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  bool json = false;
  bool timing = false;
  std::string tests;
  std::string progs;
  std::vector<std::string> binds;
  std::string expr;
  std::string equation;
  std::vector<std::string> hyps;
  std::string suite = "gkat";
  std::string rule;
  bool print = false;
  bool relaxed = false;
  std::string emit_alg;
  std::size_t cap = 4096;
  bool allow_sampling = false;
  std::size_t construct_samples = 48;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

AlgebraPtr load(const Options& o) {
  const int sources = !o.builtin.empty() + !o.algebra_file.empty() + !o.construct.empty();
  if (sources != 1) throw UsageError("give exactly one of --builtin, --algebra, --construct");
  if (!o.builtin.empty()) return make_builtin(o.builtin);
  if (!o.algebra_file.empty()) return load_algebra(o.algebra_file);
  ConstructionOptions c;
  c.cap = o.cap;
  c.allow_sampling = o.allow_sampling;
  c.sample_count = o.construct_samples;
  c.seed = o.seed;
  return make_construction(o.construct, c);
}

Strategy strategy_for(const Options& o, const Algebra& alg) {
  const std::string mode = o.mode.empty() ? (alg.is_finite() ? "exhaustive" : "sample") : o.mode;
  if (mode == "exhaustive") return Exhaustive{};
  if (mode == "sample") return Sampled{o.samples, o.seed};
  throw UsageError("--mode must be exhaustive or sample");
}

CheckOptions check_options(const Options& o) {
  CheckOptions c;
  c.jobs = o.jobs;
  if (o.relaxed) c.test_domain = TestDomain::AllElements;
  return c;
}

Report start(const std::string& command, const std::vector<std::string>& args,
             const Algebra& alg, const Strategy& strategy) {
  Report r;
  r.command = command;
  r.args = args;
  r.algebra = alg.name();
  r.algebra_hash = hex(alg.identity_hash());
  r.finite = alg.is_finite();
  r.carrier = alg.elements().size();
  if (const auto* s = std::get_if<Sampled>(&strategy)) {
    r.mode = "sample";
    r.samples = s->count;
    r.seed = s->seed;
  } else {
    r.mode = "exhaustive";
  }
  return r;
}

std::vector<std::pair<std::string, std::string>> named(const Algebra& alg, const Valuation& v,
                                                       const SortDecls* constants = nullptr) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& b : v.bindings()) {
    if (constants && constants->count(b.name)) continue;
    out.emplace_back(b.name, alg.element_name(b.value));
  }
  return out;
}

ReportEntry from_verdict(const std::string& name, const Algebra& alg, const Verdict& v,
                         const SortDecls* constants = nullptr) {
  ReportEntry e;
  e.name = name;
  e.status = to_string(v.status);
  e.checked = v.checked;
  e.space = v.space_size;
  if (v.counterexample) e.counterexample = named(alg, *v.counterexample, constants);
  e.witness = v.witness;
  return e;
}

ReportEntry from_law(const Algebra& alg, const LawEntry& l) {
  ReportEntry e;
  e.name = l.law;
  e.status = to_string(l.status);
  e.checked = l.checked_count;
  if (l.counterexample) e.counterexample = named(alg, *l.counterexample);
  e.witness = l.witness;
  return e;
}

void finish(Report& r) {
  for (const auto& e : r.entries) {
    if (e.failed()) r.passed = false;
  }
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// Sort declarations from --tests/--progs, plus element names used as
// constants, plus --bind values. Constants are pinned in `fixed`.
struct Scope {
  SortDecls decls;
  SortDecls constants;
  Valuation fixed;
};

Scope make_scope(const Options& o, const Algebra& alg, const std::vector<std::string>& texts) {
  Scope s;
  for (const auto& t : split_list(o.tests)) s.decls[t] = Sort::Test;
  for (const auto& p : split_list(o.progs)) {
    if (s.decls.count(p)) throw UsageError("'" + p + "' declared as both test and program");
    s.decls[p] = Sort::Program;
  }
  for (const auto& b : o.binds) {
    const auto eq = b.find('=');
    if (eq == std::string::npos) throw UsageError("--bind expects var=element, got '" + b + "'");
    const std::string var = b.substr(0, eq);
    const std::string value = b.substr(eq + 1);
    auto e = alg.find_element(value);
    if (!e) throw UsageError("no element named '" + value + "' in " + alg.name());
    auto it = s.decls.find(var);
    const Sort sort = it != s.decls.end() ? it->second : alg.is_test(*e) ? Sort::Test : Sort::Program;
    s.decls[var] = sort;
    s.fixed.set(var, sort, *e);
  }
  for (const auto& text : texts) {
    for (std::size_t i = 0; i < text.size();) {
      if (!std::isalpha(static_cast<unsigned char>(text[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      const std::string id = text.substr(i, j - i);
      i = j;
      if (s.decls.count(id)) continue;
      if (auto e = alg.find_element(id)) {
        const Sort sort = alg.is_test(*e) ? Sort::Test : Sort::Program;
        s.decls[id] = sort;
        s.constants[id] = sort;
        s.fixed.set(id, sort, *e);
      }
    }
  }
  return s;
}

// ---------------------------------------------------------------- commands

int cmd_check_laws(const Options& o, const std::vector<std::string>& args, std::ostream& out,
                   Report& r, const Algebra& alg, const Strategy& st) {
  (void)out;
  (void)args;
  auto suite = parse_suite_name(o.suite);
  if (!suite) throw UsageError("unknown suite '" + o.suite + "'");
  const LawReport lr = run_law_suite(alg, *suite, st, check_options(o));
  r.result = std::string("suite ") + to_string(*suite);
  for (const auto& e : lr.entries) r.entries.push_back(from_law(alg, e));
  return 0;
}

int cmd_classify(const Options& o, Report& r, const Algebra& alg, const Strategy& st) {
  const ClassificationResult c = classify(alg, st, check_options(o));
  r.result = to_string(c.cls);
  if (c.witness) {
    ReportEntry e = from_law(alg, *c.witness);
    e.name = c.witness_suite + "/" + e.name;
    e.detail = "strongest failing suite " + c.witness_suite;
    r.entries.push_back(std::move(e));
  }
  r.passed = c.cls != Classification::NotGKAT;
  return 0;
}

int cmd_eval(const Options& o, Report& r, const Algebra& alg) {
  if (o.expr.empty()) throw UsageError("eval needs --expr");
  const Scope s = make_scope(o, alg, {o.expr});
  const Term t = parse_term(o.expr, s.decls);
  const Element v = eval(t, alg, s.fixed, o.relaxed);
  r.result = alg.element_name(v);
  ReportEntry e;
  e.name = pretty(t);
  e.status = "value";
  e.detail = alg.element_name(v);
  e.counterexample = named(alg, s.fixed, &s.constants);
  r.entries.push_back(std::move(e));
  return 0;
}

int cmd_prove(const Options& o, Report& r, const Algebra& alg, const Strategy& st) {
  if (o.equation.empty()) throw UsageError("prove needs --equation");
  std::vector<std::string> texts = o.hyps;
  texts.push_back(o.equation);
  const Scope s = make_scope(o, alg, texts);
  QuasiEquation q;
  for (const auto& h : o.hyps) q.hypotheses.push_back(parse_relation(h, s.decls));
  q.conclusion = parse_relation(o.equation, s.decls);
  CheckOptions c = check_options(o);
  c.fixed = s.fixed;
  const Verdict v = check_quasi_equation(alg, q, st, c);
  r.entries.push_back(from_verdict(pretty(q), alg, v, &s.constants));
  return 0;
}

int cmd_rule(const Options& o, Report& r, const Algebra& alg, const Strategy& st) {
  std::vector<RuleName> rules;
  if (o.rule.empty() || o.rule == "all") {
    rules = all_rules();
  } else {
    auto n = parse_rule_name(o.rule);
    if (!n) throw UsageError("unknown rule '" + o.rule + "'");
    rules.push_back(*n);
  }
  for (auto name : rules) {
    const RuleSchema schema = rule_schema(name);
    if (o.print) {
      ReportEntry e;
      e.name = to_string(name);
      e.status = "schema";
      e.detail = pretty(schema.formula);
      r.entries.push_back(std::move(e));
      continue;
    }
    ReportEntry e = from_verdict(to_string(name), alg, check_rule(alg, name, st, check_options(o)));
    e.detail = pretty(schema.formula);
    r.entries.push_back(std::move(e));
  }
  return 0;
}

int cmd_lemmas(const Options& o, Report& r, const Algebra& alg, const Strategy& st) {
  for (const auto& cv : commutation_conditions(alg, st, check_options(o))) {
    ReportEntry e = from_verdict(std::to_string(cv.from) + "=>" + std::to_string(cv.to), alg, cv.verdict);
    e.detail = pretty(commutation_condition(cv.from)) + "  =>  " + pretty(commutation_condition(cv.to));
    r.entries.push_back(std::move(e));
  }
  r.result = o.relaxed ? "commutation conditions, b over all elements"
                       : "commutation conditions, b over tests";
  return 0;
}

int cmd_demorgan(const Options& o, Report& r, const Algebra& alg, const Strategy& st) {
  r.entries.push_back(from_verdict("demorgan", alg, check_demorgan(alg, st, check_options(o))));
  return 0;
}

int cmd_denest(const Options& o, Report& r, const Algebra& alg, const Strategy& st) {
  const CheckOptions c = check_options(o);
  const SideConditionReport side = check_denesting_side_conditions(alg, st, c);
  for (const auto& e : side.igkat.entries) r.entries.push_back(from_law(alg, e));
  for (const auto& e : side.demorgan.entries) r.entries.push_back(from_law(alg, e));
  if (!side.passed()) {
    r.result = "side conditions fail; equivalence not checked";
    return 0;
  }
  const DenestingResult d = denesting_equivalence(alg, side, st, c);
  ReportEntry eq = from_verdict("denesting", alg, d.equivalence);
  eq.detail = pretty(denesting_lhs()) + " = " + pretty(denesting_rhs());
  r.entries.push_back(std::move(eq));
  r.entries.push_back(from_verdict("sliding", alg, d.sliding));
  r.entries.push_back(from_verdict("star-denesting", alg, d.star_denesting));
  r.result = d.equivalence.holds() ? "equivalent" : "not equivalent";
  return 0;
}

int cmd_construct(const Options& o, Report& r, const Algebra& alg, const Strategy& st) {
  ReportEntry e;
  e.name = "carrier";
  e.status = alg.is_finite() ? "finite" : "sampled";
  e.detail = std::to_string(alg.elements().size()) + " elements, " +
             std::to_string(alg.test_elements().size()) + " tests";
  r.entries.push_back(std::move(e));
  if (!o.emit_alg.empty()) {
    const auto* f = dynamic_cast<const FiniteAlgebra*>(&alg);
    if (!f) throw UsageError("--emit-alg needs a finite construction");
    save_algebra(*f, o.emit_alg);
  }
  if (!o.suite.empty() && o.suite != "none") {
    auto suite = parse_suite_name(o.suite);
    if (!suite) throw UsageError("unknown suite '" + o.suite + "'");
    for (const auto& l : run_law_suite(alg, *suite, st, check_options(o)).entries) {
      r.entries.push_back(from_law(alg, l));
    }
    r.result = std::string("suite ") + to_string(*suite);
  }
  return 0;
}

void add_common(CLI::App* sub, Options& o, bool needs_source = true) {
  if (needs_source) {
    sub->add_option("--builtin", o.builtin, "Builtin algebra (bool2, chain3, powerset:xy, luka:N, ...)");
    sub->add_option("--algebra", o.algebra_file, "Algebra file");
  }
  sub->add_option("--construct", o.construct, "Construction spec (fset:, frel:, flang:, mat:)");
  sub->add_option("--mode", o.mode, "exhaustive or sample")->check(CLI::IsMember({"exhaustive", "sample"}));
  sub->add_option("--samples", o.samples, "Valuations drawn in sample mode");
  sub->add_option("--seed", o.seed, "Seed for sampling");
  sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  sub->add_option("--cap", o.cap, "Largest construction carrier tabulated");
  sub->add_flag("--allow-sampling", o.allow_sampling, "Sample constructions past --cap");
  sub->add_option("--construct-samples", o.construct_samples, "Sample elements of a sampled construction");
  sub->add_flag("--relaxed-tests", o.relaxed, "Let test variables range over every element");
  sub->add_flag("--json", o.json, "Machine-readable report");
  sub->add_flag("--timing", o.timing, "Append wall-clock time");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Graded Kleene algebra with tests workbench", "gkat"};
  app.require_subcommand(1);

  auto* check_laws = app.add_subcommand("check-laws", "Run a law suite");
  add_common(check_laws, o);
  check_laws->add_option("--suite", o.suite, "kleene, gkat, igkat, kat, derived, demorgan, order");

  auto* classify_cmd = app.add_subcommand("classify", "Place the algebra in KAT / IGKAT / GKAT");
  add_common(classify_cmd, o);

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a term");
  add_common(eval_cmd, o);
  eval_cmd->add_option("--expr", o.expr, "Term")->required();
  eval_cmd->add_option("--bind", o.binds, "var=element");
  eval_cmd->add_option("--tests", o.tests, "Test variables, comma separated");
  eval_cmd->add_option("--progs", o.progs, "Program variables, comma separated");

  auto* prove_cmd = app.add_subcommand("prove", "Check an equation or quasi-equation");
  add_common(prove_cmd, o);
  prove_cmd->add_option("--equation", o.equation, "l = r or l <= r")->required();
  prove_cmd->add_option("--hyp", o.hyps, "Hypothesis, repeatable");
  prove_cmd->add_option("--bind", o.binds, "var=element");
  prove_cmd->add_option("--tests", o.tests, "Test variables, comma separated");
  prove_cmd->add_option("--progs", o.progs, "Program variables, comma separated");

  auto* rule_cmd = app.add_subcommand("rule", "Check a Hoare rule encoding");
  add_common(rule_cmd, o);
  rule_cmd->add_option("--name", o.rule, "Rule name or 'all'");
  rule_cmd->add_flag("--print", o.print, "Print the schema instead of checking it");

  auto* lemmas_cmd = app.add_subcommand("lemmas", "Commutation-condition implications");
  add_common(lemmas_cmd, o);

  auto* demorgan_cmd = app.add_subcommand("demorgan", "Check !(a+b) = !a;!b");
  add_common(demorgan_cmd, o);

  auto* denest_cmd = app.add_subcommand("denest", "Nested-loop denesting equivalence");
  add_common(denest_cmd, o);

  auto* construct_cmd = app.add_subcommand("construct", "Build a construction");
  add_common(construct_cmd, o, false);
  construct_cmd->add_option("spec", o.construct, "Construction spec");
  construct_cmd->add_option("--emit-alg", o.emit_alg, "Write the tabulated algebra file");
  construct_cmd->add_option("--suite", o.suite, "Suite to run, or none")->default_str("none");

  std::vector<const char*> argv{"gkat"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.back()->help());
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }
  if (construct_cmd->parsed() && construct_cmd->count("--suite") == 0) o.suite = "none";

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (command == "construct" && o.construct.empty()) throw UsageError("construct needs a spec");
    const AlgebraPtr alg = load(o);
    Report r;
    if (command == "rule" && o.print) {
      r = start(command, args, *alg, Exhaustive{});
      cmd_rule(o, r, *alg, Exhaustive{});
    } else {
      const Strategy st = strategy_for(o, *alg);
      r = start(command, args, *alg, st);
      if (command == "check-laws") cmd_check_laws(o, args, out, r, *alg, st);
      else if (command == "classify") cmd_classify(o, r, *alg, st);
      else if (command == "eval") cmd_eval(o, r, *alg);
      else if (command == "prove") cmd_prove(o, r, *alg, st);
      else if (command == "rule") cmd_rule(o, r, *alg, st);
      else if (command == "lemmas") cmd_lemmas(o, r, *alg, st);
      else if (command == "demorgan") cmd_demorgan(o, r, *alg, st);
      else if (command == "denest") cmd_denest(o, r, *alg, st);
      else if (command == "construct") cmd_construct(o, r, *alg, st);
    }
    if (command != "classify") finish(r);
    if (o.timing) {
      r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
    if (o.json) {
      out << r.to_json().dump(2) << '\n';
    } else {
      out << r.render();
    }
    return r.passed ? kPass : kFail;
  } catch (const SideConditionError& e) {
    err << "error: " << e.what() << '\n';
    return kFail;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << sub->help();
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace gkat::cli
