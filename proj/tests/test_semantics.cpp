#include <gtest/gtest.h>

#include <map>
#include <random>

#include "gkat/errors.hpp"
#include "gkat/instances.hpp"
#include "gkat/parser.hpp"
#include "gkat/semantics.hpp"
#include "support.hpp"

namespace gkat {
namespace {

using testing::el;
using testing::nm;
using testing::P;
using testing::T;

const SortDecls kDecls =
    testing::decls({{"a", T}, {"b", T}, {"c", T}, {"p", P}, {"q", P}, {"r", P}});

// Reference semantics: plain recursion over the tree, no sharing or caching.
using Env = std::map<std::string, Element>;

Element naive_eval(const Term& t, const Algebra& A, const Env& env) {
  switch (t.kind()) {
    case Term::Kind::Var: return env.at(t.name());
    case Term::Kind::Zero: return A.zero();
    case Term::Kind::One: return A.one();
    case Term::Kind::Plus: return A.plus(naive_eval(t.lhs(), A, env), naive_eval(t.rhs(), A, env));
    case Term::Kind::Seq: return A.seq(naive_eval(t.lhs(), A, env), naive_eval(t.rhs(), A, env));
    case Term::Kind::Star: return A.star(naive_eval(t.lhs(), A, env));
    case Term::Kind::Arrow: return A.arrow(naive_eval(t.lhs(), A, env), naive_eval(t.rhs(), A, env));
  }
  throw std::logic_error("kind");
}

bool naive_holds(const Relation& r, const Algebra& A, const Env& env) {
  const Element l = naive_eval(r.lhs, A, env), h = naive_eval(r.rhs, A, env);
  return r.rel == Rel::Eq ? l == h : A.plus(l, h) == h;
}

struct NaiveResult {
  bool valid = true;
  Env counterexample;
};

// Nested loops, first variable outermost.
NaiveResult naive_check(const QuasiEquation& q, const Algebra& A) {
  const auto vars = q.variables();
  NaiveResult out;
  Env env;
  std::function<bool(std::size_t)> go = [&](std::size_t k) -> bool {
    if (k == vars.size()) {
      for (const auto& h : q.hypotheses) {
        if (!naive_holds(h, A, env)) return true;
      }
      return naive_holds(q.conclusion, A, env);
    }
    auto dom = vars[k].second == Sort::Test ? A.test_elements() : A.elements();
    for (auto e : dom) {
      env[vars[k].first] = e;
      if (!go(k + 1)) return false;
    }
    return true;
  };
  if (!go(0)) {
    out.valid = false;
    out.counterexample = env;
  }
  return out;
}

Term random_term(std::mt19937_64& rng, bool test, int depth) {
  auto pick = [&](int n) { return static_cast<int>(rng() % n); };
  const char* tests[] = {"a", "b", "c"};
  const char* progs[] = {"p", "q", "r"};
  if (depth == 0 || pick(3) == 0) {
    switch (pick(test ? 4 : 6)) {
      case 0: return Term::zero();
      case 1: return Term::one();
      case 2:
      case 3: {
        const char* n = tests[pick(3)];
        return Term::var(n, T);
      }
      default: {
        const char* n = progs[pick(3)];
        return Term::var(n, P);
      }
    }
  }
  switch (pick(test ? 3 : 4)) {
    case 0: return Term::plus(random_term(rng, test, depth - 1), random_term(rng, test, depth - 1));
    case 1: return Term::seq(random_term(rng, test, depth - 1), random_term(rng, test, depth - 1));
    case 2: return Term::arrow(random_term(rng, true, depth - 1), random_term(rng, true, depth - 1));
    default: return Term::star(random_term(rng, false, depth - 1));
  }
}

QuasiEquation random_quasi(std::mt19937_64& rng) {
  QuasiEquation q;
  const int hyps = static_cast<int>(rng() % 3);
  for (int i = 0; i < hyps; ++i) {
    q.hypotheses.push_back({random_term(rng, false, 2), random_term(rng, false, 2),
                            rng() % 2 ? Rel::Eq : Rel::Leq});
  }
  q.conclusion = {random_term(rng, false, 3), random_term(rng, false, 3),
                  rng() % 2 ? Rel::Eq : Rel::Leq};
  return q;
}

TEST(Eval, PointValues) {
  auto ex9 = make_builtin("ex9");
  Valuation v;
  v.set("a", T, el(*ex9, "m"));
  v.set("p", P, el(*ex9, "n"));
  EXPECT_EQ(nm(*ex9, eval(parse_term("a;!a", kDecls), *ex9, v)), "0");
  EXPECT_EQ(nm(*ex9, eval(parse_term("a + !a", kDecls), *ex9, v)), "m");
  EXPECT_EQ(nm(*ex9, eval(parse_term("p;1 + 0", kDecls), *ex9, v)), "n");
  EXPECT_EQ(nm(*ex9, eval(parse_term("p*", kDecls), *ex9, v)), "1");
}

TEST(Eval, Errors) {
  auto ex9 = make_builtin("ex9");
  auto other = make_builtin("ex9");
  Valuation v;
  EXPECT_THROW(eval(parse_term("p", kDecls), *ex9, v), UnboundVariableError);
  v.set("a", T, el(*ex9, "n"));
  EXPECT_THROW(eval(parse_term("a", kDecls), *ex9, v), SortError);
  EXPECT_EQ(nm(*ex9, eval(parse_term("a", kDecls), *ex9, v, true)), "n");
  Valuation w;
  w.set("p", P, other->one());
  EXPECT_THROW(eval(parse_term("p", kDecls), *ex9, w), DomainMismatchError);
}

TEST(Valuation, SetFindRender) {
  auto ex9 = make_builtin("ex9");
  Valuation v;
  v.set("b", T, el(*ex9, "0"));
  v.set("c", T, el(*ex9, "m"));
  v.set("b", T, el(*ex9, "1"));
  EXPECT_EQ(v.size(), 2u);
  EXPECT_EQ(v.render(*ex9), "b=1, c=m");
  EXPECT_EQ(v.at("c"), el(*ex9, "m"));
  EXPECT_EQ(v.find("z"), nullptr);
  EXPECT_THROW(v.at("z"), UnboundVariableError);
}

TEST(Holds, LeqIsDerivedOrder) {
  auto c3 = make_builtin("chain3");
  Valuation v;
  v.set("a", T, el(*c3, "u"));
  EXPECT_TRUE(holds(parse_relation("a <= 1", kDecls), *c3, v));
  EXPECT_FALSE(holds(parse_relation("1 <= a", kDecls), *c3, v));
  EXPECT_FALSE(holds(parse_relation("a = 1", kDecls), *c3, v));
}

TEST(Check, FirstCounterexampleInOrder) {
  auto ex9 = make_builtin("ex9");
  const QuasiEquation q = parse_quasi_equation("a;a = a", kDecls);
  const Verdict v = check_quasi_equation(*ex9, q, Exhaustive{});
  EXPECT_EQ(v.status, VerdictStatus::Refuted);
  EXPECT_EQ(v.counterexample->render(*ex9), "a=m");
  EXPECT_EQ(v.witness->first, "0");
  EXPECT_EQ(v.witness->second, "m");
  EXPECT_EQ(v.checked, 2u);
  EXPECT_EQ(v.space_size, 3u);
}

TEST(Check, ValidReportsFullSpace) {
  auto l4 = make_builtin("luka:4");
  const Verdict v = check_equation(*l4, parse_term("p + q", kDecls), parse_term("q + p", kDecls),
                                   Rel::Eq, Exhaustive{});
  EXPECT_EQ(v.status, VerdictStatus::Valid);
  EXPECT_EQ(v.space_size, 25u);
  EXPECT_EQ(v.checked, 25u);
  EXPECT_FALSE(v.counterexample);
}

TEST(Check, HypothesesFilter) {
  auto ex9 = make_builtin("ex9");
  // Refuted without the hypothesis, valid once a = 1 is assumed.
  EXPECT_FALSE(check_quasi_equation(*ex9, parse_quasi_equation("a;a = a", kDecls), Exhaustive{}).holds());
  EXPECT_TRUE(check_quasi_equation(*ex9, parse_quasi_equation("a = 1 => a;a = a", kDecls), Exhaustive{}).holds());
  EXPECT_TRUE(check_quasi_equation(*ex9, parse_quasi_equation("0 = 1 => p = q", kDecls), Exhaustive{}).holds());
}

TEST(Check, OrderOverride) {
  auto c3 = make_builtin("chain3");
  const QuasiEquation q = parse_quasi_equation("p;q = q;p + p", kDecls);
  CheckOptions o;
  o.order = {"q", "p"};
  const Verdict v = check_quasi_equation(*c3, q, Exhaustive{}, o);
  // Same equation with q occurring first; 0;q + x = x in any GKAT.
  const NaiveResult n = naive_check(parse_quasi_equation("0;q + p;q = q;p + p", kDecls), *c3);
  ASSERT_FALSE(v.holds());
  ASSERT_FALSE(n.valid);
  EXPECT_EQ(v.counterexample->bindings()[0].name, "q");
  EXPECT_EQ(v.counterexample->at("p"), n.counterexample.at("p"));
  EXPECT_EQ(v.counterexample->at("q"), n.counterexample.at("q"));
}

TEST(Check, FixedVariables) {
  auto ex9 = make_builtin("ex9");
  CheckOptions o;
  o.fixed.set("a", T, el(*ex9, "1"));
  EXPECT_TRUE(check_quasi_equation(*ex9, parse_quasi_equation("a;a = a", kDecls), Exhaustive{}, o).holds());
  o.fixed.set("a", T, el(*ex9, "m"));
  const Verdict v = check_quasi_equation(*ex9, parse_quasi_equation("a;a = a", kDecls), Exhaustive{}, o);
  EXPECT_FALSE(v.holds());
  EXPECT_EQ(v.space_size, 1u);
}

TEST(Check, AllElementsTestDomain) {
  auto ex9 = make_builtin("ex9");
  CheckOptions o;
  o.test_domain = TestDomain::AllElements;
  const Verdict v = check_quasi_equation(*ex9, parse_quasi_equation("a + 0 = a", kDecls), Exhaustive{}, o);
  EXPECT_EQ(v.space_size, 4u);
}

TEST(Check, StrategyErrors) {
  auto prod = make_builtin("product");
  const QuasiEquation q = parse_quasi_equation("p + q = q + p", kDecls);
  EXPECT_THROW(check_quasi_equation(*prod, q, Exhaustive{}), UnsupportedStrategyError);
  auto l5 = make_builtin("luka:5");
  CheckOptions o;
  o.cap = 35;
  EXPECT_THROW(check_quasi_equation(*l5, q, Exhaustive{}, o), SizeError);
  o.cap = 36;
  EXPECT_NO_THROW(check_quasi_equation(*l5, q, Exhaustive{}, o));
}

TEST(Check, AgreesWithNaiveOracle) {
  std::mt19937_64 rng(2024);
  int refuted = 0;
  for (const char* name : {"ex9", "lemma4", "lemma6", "chain3", "luka:3", "wajsberg:3"}) {
    auto A = make_builtin(name);
    for (int i = 0; i < 120; ++i) {
      const QuasiEquation q = random_quasi(rng);
      const Verdict v = check_quasi_equation(*A, q, Exhaustive{});
      const NaiveResult n = naive_check(q, *A);
      ASSERT_EQ(v.holds(), n.valid) << name << ": " << pretty(q);
      if (!n.valid) {
        ++refuted;
        for (const auto& b : v.counterexample->bindings()) {
          ASSERT_EQ(b.value, n.counterexample.at(b.name)) << name << ": " << pretty(q);
        }
      }
    }
  }
  EXPECT_GT(refuted, 50);
}

TEST(Check, DeterministicAcrossJobs) {
  std::mt19937_64 rng(99);
  auto A = make_builtin("luka:5");
  for (int i = 0; i < 40; ++i) {
    const QuasiEquation q = random_quasi(rng);
    const Verdict base = check_quasi_equation(*A, q, Exhaustive{});
    const Verdict sampled = check_quasi_equation(*A, q, Sampled{500, 3});
    for (unsigned jobs : {2u, 3u, 8u}) {
      CheckOptions o;
      o.jobs = jobs;
      const Verdict v = check_quasi_equation(*A, q, Exhaustive{}, o);
      EXPECT_EQ(v.status, base.status);
      EXPECT_EQ(v.counterexample, base.counterexample);
      EXPECT_EQ(v.checked, base.checked);
      const Verdict s = check_quasi_equation(*A, q, Sampled{500, 3}, o);
      EXPECT_EQ(s.status, sampled.status);
      EXPECT_EQ(s.counterexample, sampled.counterexample);
    }
  }
}

TEST(Check, SampledDrawsFromSeededStream) {
  // Replays the draw: one 64-bit output per variable, reduced mod domain size.
  auto A = make_builtin("luka:4");
  const QuasiEquation q = parse_quasi_equation("p;q = q", kDecls);
  const Verdict v = check_quasi_equation(*A, q, Sampled{100, 42});
  ASSERT_FALSE(v.holds());
  std::mt19937_64 rng(42);
  const auto dom = A->elements();
  for (std::uint64_t i = 0;; ++i) {
    Env env{{"p", dom[rng() % dom.size()]}};
    env["q"] = dom[rng() % dom.size()];
    if (!naive_holds(q.conclusion, *A, env)) {
      EXPECT_EQ(v.checked, i + 1);
      EXPECT_EQ(v.counterexample->at("p"), env["p"]);
      EXPECT_EQ(v.counterexample->at("q"), env["q"]);
      break;
    }
  }
  const Verdict again = check_quasi_equation(*A, q, Sampled{100, 42});
  EXPECT_EQ(again.counterexample, v.counterexample);
}

TEST(Check, SampledValidStatus) {
  auto prod = make_builtin("product");
  const Verdict v = check_quasi_equation(*prod, parse_quasi_equation("p + q = q + p", kDecls), Sampled{300, 0});
  EXPECT_EQ(v.status, VerdictStatus::SampledValid);
  EXPECT_TRUE(v.holds());
  EXPECT_EQ(v.space_size, 300u);
  EXPECT_STREQ(to_string(v.status), "sampled-valid");
}

}  // namespace
}  // namespace gkat
