// Acceptance checks. One PASS/FAIL line per criterion; details follow
// indented. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "gkat/constructions.hpp"
#include "gkat/errors.hpp"
#include "gkat/hoare.hpp"
#include "gkat/instances.hpp"
#include "gkat/laws.hpp"
#include "gkat/parser.hpp"
#include "gkat/semantics.hpp"

namespace {

using namespace gkat;
using Clock = std::chrono::steady_clock;

// Time limits, seconds.
constexpr double kSuiteLimit = 10.0;
constexpr double kGradedRulesLimit = 60.0;
constexpr double kMatStarLimit = 10.0;

// Sampling budgets.
constexpr std::uint64_t kTernarySamples = 100'000;
constexpr std::uint64_t kLanguageSamples = 100'000;
constexpr std::uint64_t kSeed = 0;
constexpr int kRandomMatrices = 200;

class Criterion {
 public:
  explicit Criterion(std::string label) : label_(std::move(label)), start_(Clock::now()) {}

  void check(bool ok, const std::string& detail) {
    if (!ok) pass_ = false;
    details_ << "    " << (ok ? "ok   " : "FAIL ") << detail << "\n";
  }
  void note(const std::string& detail) { details_ << "    " << detail << "\n"; }

  double elapsed() const {
    return std::chrono::duration<double>(Clock::now() - start_).count();
  }

  void within(double limit) {
    const double t = elapsed();
    char buf[96];
    std::snprintf(buf, sizeof buf, "runtime %.2fs (limit %.0fs)", t, limit);
    check(t < limit, buf);
  }

  bool finish() {
    std::cout << (pass_ ? "PASS " : "FAIL ") << label_ << "\n" << details_.str();
    std::cout.flush();
    return pass_;
  }

  void fail(const std::string& detail) { check(false, detail); }

 private:
  std::string label_;
  Clock::time_point start_;
  std::ostringstream details_;
  bool pass_ = true;
};

CheckOptions parallel() {
  CheckOptions o;
  o.jobs = std::max(1u, std::thread::hardware_concurrency());
  return o;
}

std::string describe(const Algebra& alg, const LawEntry& e) {
  std::string s = e.law;
  if (e.counterexample) s += " at " + e.counterexample->render(alg);
  if (e.witness) s += " (" + e.witness->first + " vs " + e.witness->second + ")";
  return s;
}

std::string describe(const Algebra& alg, const Verdict& v) {
  std::string s = to_string(v.status);
  if (v.counterexample) s += " at " + v.counterexample->render(alg);
  if (v.witness) s += " (" + v.witness->first + " vs " + v.witness->second + ")";
  return s;
}

void guarded(Criterion& c, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    c.fail(std::string("exception: ") + e.what());
  }
}

bool suites_exhaustive() {
  Criterion c("GKAT suite holds exhaustively on the nine reference tables, under 10s");
  guarded(c, [&] {
    for (const char* name : {"bool2", "chain3", "powerset:xy", "luka:5", "godel:5", "wajsberg:4",
                             "ex9", "lemma4", "lemma6"}) {
      auto A = make_builtin(name);
      const LawReport r = run_law_suite(*A, SuiteName::GKAT, Exhaustive{});
      const LawEntry* f = r.first_failure();
      c.check(f == nullptr, std::string(name) + (f ? ": " + describe(*A, *f) : ""));
    }
  });
  c.within(kSuiteLimit);
  return c.finish();
}

bool classification() {
  Criterion c("classification places each builtin in its expected class, with witnesses");
  struct Expect {
    const char* name;
    Classification cls;
  };
  const Expect expected[] = {
      {"bool2", Classification::KAT},
      {"chain3", Classification::KAT},
      {"powerset:xy", Classification::KAT},
      {"godel:3", Classification::IGKATNotKAT},
      {"godel:4", Classification::IGKATNotKAT},
      {"godel:5", Classification::IGKATNotKAT},
      {"luka:2", Classification::GKATNotIGKAT},
      {"luka:3", Classification::GKATNotIGKAT},
      {"luka:5", Classification::GKATNotIGKAT},
      {"wajsberg:3", Classification::GKATNotIGKAT},
      {"wajsberg:4", Classification::GKATNotIGKAT},
      {"wajsberg:8", Classification::GKATNotIGKAT},
      {"ex9", Classification::GKATNotIGKAT},
  };
  guarded(c, [&] {
    for (const auto& e : expected) {
      auto A = make_builtin(e.name);
      const ClassificationResult r = classify(*A, Exhaustive{}, parallel());
      std::string line = std::string(e.name) + ": " + to_string(r.cls) + " (expected " +
                         to_string(e.cls) + ")";
      if (r.witness) line += "; " + r.witness_suite + " fails " + describe(*A, *r.witness);
      const bool witnessed = e.cls == Classification::KAT || r.witness.has_value();
      c.check(r.cls == e.cls && witnessed, line);
    }
    // The ex9 witness for idempotence, exactly.
    auto A = make_builtin("ex9");
    const Element m = *A->find_element("m");
    c.check(A->seq(m, m) == A->zero() && m != A->zero(), "ex9: m;m = 0 and m != 0");
  });
  return c.finish();
}

bool ex9_while_rule() {
  Criterion c("ex9: m + !m = m != 1, and the graded while rule is refuted at b=0, c=m, p=0");
  guarded(c, [&] {
    auto A = make_builtin("ex9");
    const Element m = *A->find_element("m");
    const Element mm = A->plus(m, A->arrow(m, A->zero()));
    c.check(mm == m && mm != A->one(), "m + (m -> 0) = " + A->element_name(mm));

    const RuleSchema schema = rule_schema(RuleName::WhileGKAT);
    const Verdict v = check_rule(*A, RuleName::WhileGKAT, Exhaustive{});
    c.check(v.status == VerdictStatus::Refuted, "while-gkat: " + describe(*A, v));
    if (!v.counterexample) return;
    const std::string at = v.counterexample->render(*A);
    c.check(at == "b=0, c=m, p=0", "reported counterexample " + at);
    // Re-verify by evaluation: hypotheses hold, conclusion does not.
    bool hyps = true;
    for (const auto& h : schema.formula.hypotheses) hyps = hyps && holds(h, *A, *v.counterexample);
    c.check(hyps && !holds(schema.formula.conclusion, *A, *v.counterexample),
            "counterexample re-verified by direct evaluation");
  });
  return c.finish();
}

/// Finite GKAT builtins with at most eight elements.
std::vector<std::string> small_builtins() {
  std::vector<std::string> names = {"bool2", "chain3", "powerset:x", "powerset:xy",
                                    "powerset:xyz", "ex9", "lemma4", "lemma6"};
  for (int n = 1; n <= 7; ++n) {
    names.push_back("luka:" + std::to_string(n));
    names.push_back("godel:" + std::to_string(n));
  }
  for (int k = 2; k <= 8; ++k) names.push_back("wajsberg:" + std::to_string(k));
  return names;
}

bool graded_rules() {
  Criterion c(
      "composition, conditional and weaken/strengthen rules hold exhaustively on every finite "
      "builtin of at most 8 elements, under 60s");
  guarded(c, [&] {
    for (const auto& name : small_builtins()) {
      auto A = make_builtin(name);
      if (A->elements().size() > 8) {
        c.fail(name + " has more than 8 elements");
        continue;
      }
      for (RuleName r : {RuleName::Composition, RuleName::Conditional, RuleName::WeakenStrengthen}) {
        const Verdict v = check_rule(*A, r, Exhaustive{});
        if (!v.holds()) c.fail(name + " " + to_string(r) + ": " + describe(*A, v));
      }
    }
    c.note(std::to_string(small_builtins().size()) + " algebras checked");
  });
  c.within(kGradedRulesLimit);
  return c.finish();
}

bool idempotent_while_rule() {
  Criterion c("idempotent while rule holds exhaustively on bool2, chain3, powerset:xy, godel:5");
  guarded(c, [&] {
    for (const char* name : {"bool2", "chain3", "powerset:xy", "godel:5"}) {
      auto A = make_builtin(name);
      const Verdict v = check_rule(*A, RuleName::WhileIGKAT, Exhaustive{});
      c.check(v.status == VerdictStatus::Valid, std::string(name) + ": " + describe(*A, v));
    }
  });
  return c.finish();
}

bool commutation() {
  Criterion c(
      "commutation: (1)=>(3) and (2)=>(3) hold everywhere; lemma4 separates (1) and (2); lemma6 "
      "refutes (3)=>(1) with b;p = n;m = n against p;b = m;n = 0");
  guarded(c, [&] {
    std::vector<std::string> names = small_builtins();
    for (const char* extra : {"luka:8", "godel:8"}) names.emplace_back(extra);
    bool to_three = true;
    for (const auto& name : names) {
      auto A = make_builtin(name);
      for (const auto& v : commutation_conditions(*A, Exhaustive{})) {
        if (v.to == 3 && !v.verdict.holds()) {
          to_three = false;
          c.fail(name + " " + std::to_string(v.from) + "=>3: " + describe(*A, v.verdict));
        }
      }
    }
    c.check(to_three, "(1)=>(3), (2)=>(3) on " + std::to_string(names.size()) + " algebras");

    auto L4 = make_builtin("lemma4");
    const auto v4 = commutation_conditions(*L4, Exhaustive{});
    const bool separated = !v4[0].verdict.holds() || !v4[2].verdict.holds();
    c.check(separated, "lemma4 (1)<=>(2) refuted; 2=>1 " + describe(*L4, v4[2].verdict));

    auto L6 = make_builtin("lemma6");
    const auto v6 = commutation_conditions(*L6, Exhaustive{});
    const Verdict& three_one = v6[4].verdict;
    c.check(!three_one.holds(), "lemma6 3=>1 " + describe(*L6, three_one));
    const Element n = *L6->find_element("n");
    const Element m = *L6->find_element("m");
    const bool tables = L6->element_name(L6->seq(n, m)) == "n" &&
                        L6->element_name(L6->seq(m, n)) == "0";
    c.check(tables, "lemma6 n;m = " + L6->element_name(L6->seq(n, m)) +
                        ", m;n = " + L6->element_name(L6->seq(m, n)));
    const bool exact = three_one.counterexample &&
                       three_one.counterexample->render(*L6) == "b=n, p=m" && three_one.witness &&
                       *three_one.witness == std::make_pair(std::string("n"), std::string("0"));
    c.check(exact, "lemma6 witness is b=n, p=m with sides (n, 0)");
  });
  return c.finish();
}

bool denesting() {
  Criterion c(
      "denesting: nested and single loop agree on bool2, chain3, powerset:xy, godel:4 after the "
      "side conditions are established; sliding and star denesting hold there");
  guarded(c, [&] {
    for (const char* name : {"bool2", "chain3", "powerset:xy", "godel:4"}) {
      auto A = make_builtin(name);
      const SideConditionReport side = check_denesting_side_conditions(*A, Exhaustive{}, parallel());
      c.check(side.passed(), std::string(name) + ": IGKAT and De Morgan side conditions");
      if (!side.passed()) continue;
      const DenestingResult r = denesting_equivalence(*A, side, Exhaustive{}, parallel());
      c.check(r.equivalence.status == VerdictStatus::Valid,
              std::string(name) + ": loops " + describe(*A, r.equivalence));
      c.check(r.sliding.status == VerdictStatus::Valid,
              std::string(name) + ": sliding " + describe(*A, r.sliding));
      c.check(r.star_denesting.status == VerdictStatus::Valid,
              std::string(name) + ": star denesting " + describe(*A, r.star_denesting));
    }
  });
  return c.finish();
}

/// Laws over at most two variables exhaustively, the rest sampled.
void split_suite(Criterion& c, const Algebra& A, SuiteName suite, const std::string& label) {
  std::uint64_t exhaustive = 0;
  std::uint64_t sampled = 0;
  bool ok = true;
  for (const Law& law : suite_laws(suite)) {
    const bool small = law.formula.variables().size() <= 2;
    const Strategy s = small ? Strategy{Exhaustive{}} : Strategy{Sampled{kTernarySamples, kSeed}};
    const LawEntry e = check_law(A, law, s, parallel());
    (small ? exhaustive : sampled) += 1;
    if (e.status == LawStatus::Fails) {
      ok = false;
      c.fail(label + " " + describe(A, e));
    }
  }
  c.check(ok, label + ": " + std::to_string(exhaustive) + " laws exhaustive, " +
                  std::to_string(sampled) + " sampled at " + std::to_string(kTernarySamples));
}

bool constructions() {
  Criterion c(
      "constructions: fuzzy sets exhaustively, fuzzy relations and 2x2 matrices split "
      "exhaustive/sampled, fuzzy languages sampled, all without failures");
  guarded(c, [&] {
    auto chain3 = make_builtin("chain3");

    auto F = fset_algebra(chain3, "xy");
    c.check(F->elements().size() == 9, "fset(chain3, xy) has " +
                                           std::to_string(F->elements().size()) + " elements");
    const LawReport fr = run_law_suite(*F, SuiteName::GKAT, Exhaustive{}, parallel());
    c.check(fr.all_hold(), "fset(chain3, xy) GKAT exhaustive" +
                               (fr.first_failure() ? ": " + describe(*F, *fr.first_failure())
                                                   : std::string()));

    auto R = frel_algebra(chain3, chain3, "xy");
    c.check(R->is_finite() && R->elements().size() == 81, "frel(chain3, chain3, xy) has " +
                                                              std::to_string(R->elements().size()) +
                                                              " elements");
    split_suite(c, *R, SuiteName::GKAT, "frel(chain3, chain3, xy)");

    auto M = mat_algebra_tabulated(make_builtin("ex9"), 2);
    c.check(M->elements().size() == 256, "M(2, ex9) has " +
                                             std::to_string(M->elements().size()) + " elements");
    split_suite(c, *M, SuiteName::GKAT, "M(2, ex9)");

    auto L = flang_algebra(chain3, chain3, "ab", 4);
    const LawReport lr =
        run_law_suite(*L, SuiteName::IGKAT, Sampled{kLanguageSamples, kSeed}, parallel());
    c.check(lr.all_hold(), "flang(chain3, chain3, ab, 4) IGKAT sampled at " +
                               std::to_string(kLanguageSamples) +
                               (lr.first_failure() ? ": " + describe(*L, *lr.first_failure())
                                                   : std::string()));
  });
  return c.finish();
}

/// Partial sums I, I + M, I + M + M^2, ... until they stop changing.
Matrix iterative_star(const Algebra& A, const Matrix& m) {
  const std::size_t n = m.n;
  Matrix sum{n, std::vector<Element>(n * n, A.zero())};
  Matrix power{n, std::vector<Element>(n * n, A.zero())};
  for (std::size_t i = 0; i < n; ++i) power.entries[i * n + i] = A.one();
  for (std::size_t i = 0; i < n * n; ++i) sum.entries[i] = power.entries[i];
  for (;;) {
    Matrix next{n, std::vector<Element>(n * n, A.zero())};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Element acc = A.zero();
        for (std::size_t k = 0; k < n; ++k)
          acc = A.plus(acc, A.seq(power.entries[i * n + k], m.entries[k * n + j]));
        next.entries[i * n + j] = acc;
      }
    power = next;
    Matrix grown = sum;
    for (std::size_t i = 0; i < n * n; ++i) grown.entries[i] = A.plus(sum.entries[i], power.entries[i]);
    if (grown == sum) return sum;
    sum = grown;
  }
}

bool matrix_star() {
  Criterion c("block-recursive matrix star equals the partial-sum fixpoint on 200 random luka:4 "
              "matrices, n in {2, 3}, under 10s");
  guarded(c, [&] {
    auto A = make_builtin("luka:4");
    const auto& elems = A->elements();
    std::mt19937_64 rng(kSeed);
    int agree = 0;
    for (int t = 0; t < kRandomMatrices; ++t) {
      const std::size_t n = 2 + static_cast<std::size_t>(t % 2);
      Matrix m{n, std::vector<Element>(n * n)};
      for (auto& e : m.entries) e = elems[rng() % elems.size()];
      if (mat_star(*A, m) == iterative_star(*A, m)) ++agree;
    }
    c.check(agree == kRandomMatrices,
            std::to_string(agree) + "/" + std::to_string(kRandomMatrices) + " agree exactly");
  });
  c.within(kMatStarLimit);
  return c.finish();
}

bool triple_encodings() {
  Criterion c("b;p <= b;p;c and b;p = b;p;c agree at every valuation on every finite builtin");
  guarded(c, [&] {
    const SortDecls d = {{"b", Sort::Test}, {"c", Sort::Test}, {"p", Sort::Program}};
    const TripleEncoding enc = triple_to_equation(
        {parse_term("b", d), parse_term("p", d), parse_term("c", d)});
    std::vector<std::string> names = small_builtins();
    for (const char* extra : {"luka:8", "godel:8"}) names.emplace_back(extra);
    for (const auto& name : names) {
      auto A = make_builtin(name);
      const Verdict forward =
          check_quasi_equation(*A, {{enc.inequation}, enc.equation}, Exhaustive{});
      const Verdict backward =
          check_quasi_equation(*A, {{enc.equation}, enc.inequation}, Exhaustive{});
      if (!forward.holds() || !backward.holds())
        c.fail(name + ": " + describe(*A, forward.holds() ? backward : forward));
    }
    c.note(std::to_string(names.size()) + " algebras checked");
  });
  return c.finish();
}

}  // namespace

int main() {
  const std::vector<bool (*)()> criteria = {
      suites_exhaustive, classification, ex9_while_rule, graded_rules, idempotent_while_rule,
      commutation,       denesting,      constructions,  matrix_star,  triple_encodings};
  int failed = 0;
  for (auto* run : criteria) failed += run() ? 0 : 1;
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
