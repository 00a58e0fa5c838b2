#include "gkat/laws.hpp"

#include "gkat/errors.hpp"
#include "gkat/parser.hpp"

namespace gkat {

namespace {

const SortDecls& default_decls() {
  static const SortDecls decls = [] {
    SortDecls d;
    for (const char* p : {"p", "q", "r", "s", "x", "y", "z"}) d[p] = Sort::Program;
    for (const char* t : {"a", "b", "c", "d", "e"}) d[t] = Sort::Test;
    for (int i = 1; i <= 8; ++i) d["b" + std::to_string(i)] = Sort::Test;
    return d;
  }();
  return decls;
}

using LawList = std::vector<Law>;

LawList kleene() {
  return {
      make_law("plus-assoc", "p + (q + r) = (p + q) + r"),
      make_law("plus-comm", "p + q = q + p"),
      make_law("seq-assoc", "p;(q;r) = (p;q);r"),
      make_law("seq-unit-right", "p;1 = p"),
      make_law("seq-unit-left", "1;p = p"),
      make_law("distrib-left", "p;(q + r) = p;q + p;r"),
      make_law("distrib-right", "(p + q);r = p;r + q;r"),
      make_law("seq-zero-right", "p;0 = 0"),
      make_law("seq-zero-left", "0;p = 0"),
      make_law("star-unfold", "1 + p;p* = p*"),
      make_law("star-induct-left", "q + p;r <= r => p*;q <= r"),
      make_law("star-induct-right", "q + r;p <= r => q;p* <= r"),
  };
}

LawList gkat_extra() {
  return {
      make_law("residuation", "a;b <= c => b <= a->c"),
      make_law("residuation-converse", "b <= a->c => a;b <= c"),
      make_law("test-below-one", "a <= 1"),
      make_law("test-commute", "a;b = b;a"),
  };
}

LawList concat(LawList a, const LawList& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

Law make_law(std::string name, std::string_view text) {
  return Law{std::move(name), parse_quasi_equation(text, default_decls()), {}};
}

const char* to_string(SuiteName s) {
  switch (s) {
    case SuiteName::Kleene: return "kleene";
    case SuiteName::GKAT: return "gkat";
    case SuiteName::IGKAT: return "igkat";
    case SuiteName::KAT: return "kat";
    case SuiteName::Derived: return "derived";
    case SuiteName::DeMorgan: return "demorgan";
    case SuiteName::Order: return "order";
  }
  return "?";
}

std::optional<SuiteName> parse_suite_name(std::string_view s) {
  for (auto n : {SuiteName::Kleene, SuiteName::GKAT, SuiteName::IGKAT, SuiteName::KAT,
                 SuiteName::Derived, SuiteName::DeMorgan, SuiteName::Order}) {
    if (s == to_string(n)) return n;
  }
  return std::nullopt;
}

const std::vector<Law>& suite_laws(SuiteName suite) {
  static const LawList k = kleene();
  static const LawList g = concat(k, gkat_extra());
  static const LawList ig = concat(g, {make_law("test-idempotent", "a;a = a")});
  static const LawList kat = concat(ig, {make_law("test-complement", "a + !a = 1")});
  static const LawList derived = {
      make_law("plus-idempotent", "p + p = p"),
      make_law("plus-zero", "p + 0 = p"),
      make_law("star-unfold-right", "1 + p*;p = p*"),
      make_law("plus-monotone", "p <= q, r <= s => p + r <= q + s"),
      make_law("test-contradiction", "a;!a = 0"),
  };
  static const LawList demorgan = {make_law("demorgan", "!(a + b) = !a;!b")};
  static const LawList order = {
      make_law("reflexive", "p <= p"),
      make_law("antisymmetric", "p <= q, q <= p => p = q"),
      make_law("transitive", "p <= q, q <= r => p <= r"),
      make_law("monotone.seq-right", "p <= q => p;r <= q;r"),
      make_law("monotone.seq-left", "p <= q => r;p <= r;q"),
      make_law("monotone.plus", "p <= q => p + r <= q + r"),
  };
  switch (suite) {
    case SuiteName::Kleene: return k;
    case SuiteName::GKAT: return g;
    case SuiteName::IGKAT: return ig;
    case SuiteName::KAT: return kat;
    case SuiteName::Derived: return derived;
    case SuiteName::DeMorgan: return demorgan;
    case SuiteName::Order: return order;
  }
  throw ParameterError("unknown suite");
}

std::vector<Law> finite_distributivity_laws(std::size_t k) {
  if (k < 1 || k > 8) throw ParameterError("finite distributivity needs 1 <= k <= 8");
  std::string sum, left, right;
  for (std::size_t i = 1; i <= k; ++i) {
    const std::string b = "b" + std::to_string(i);
    const std::string sep = i == 1 ? "" : " + ";
    sum += sep + b;
    left += sep + "a;" + b;
    right += sep + b + ";a";
  }
  const std::string n = std::to_string(k);
  return {make_law("distrib.left." + n, "a;(" + sum + ") = " + left),
          make_law("distrib.right." + n, "(" + sum + ");a = " + right)};
}

const char* to_string(LawStatus s) {
  switch (s) {
    case LawStatus::Holds: return "holds";
    case LawStatus::Fails: return "fails";
    case LawStatus::SampledHolds: return "sampled-holds";
  }
  return "?";
}

bool LawReport::all_hold() const { return first_failure() == nullptr; }

const LawEntry* LawReport::first_failure() const {
  for (const auto& e : entries) {
    if (e.status == LawStatus::Fails) return &e;
  }
  return nullptr;
}

LawEntry check_law(const Algebra& alg, const Law& law, const Strategy& strategy,
                   const CheckOptions& options) {
  CheckOptions opts = options;
  if (!law.order.empty()) opts.order = law.order;
  const Verdict v = check_quasi_equation(alg, law.formula, strategy, opts);
  LawEntry e;
  e.law = law.name;
  e.status = v.status == VerdictStatus::Refuted  ? LawStatus::Fails
             : v.status == VerdictStatus::Valid ? LawStatus::Holds
                                                : LawStatus::SampledHolds;
  e.counterexample = v.counterexample;
  e.witness = v.witness;
  e.checked_count = v.checked;
  return e;
}

LawReport run_laws(const Algebra& alg, const std::vector<Law>& laws, SuiteName tag,
                   const Strategy& strategy, const CheckOptions& options) {
  LawReport r;
  r.algebra = alg.name();
  r.suite = tag;
  for (const auto& law : laws) r.entries.push_back(check_law(alg, law, strategy, options));
  return r;
}

LawReport run_law_suite(const Algebra& alg, SuiteName suite, const Strategy& strategy,
                        const CheckOptions& options) {
  return run_laws(alg, suite_laws(suite), suite, strategy, options);
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::KAT: return "KAT";
    case Classification::IGKATNotKAT: return "IGKAT-not-KAT";
    case Classification::GKATNotIGKAT: return "GKAT-not-IGKAT";
    case Classification::NotGKAT: return "NotGKAT";
  }
  return "?";
}

ClassificationResult classify(const Algebra& alg, const Strategy& strategy,
                              const CheckOptions& options) {
  // The suites nest, so one KAT run decides every level.
  const LawReport full = run_law_suite(alg, SuiteName::KAT, strategy, options);
  auto restrict_to = [&](SuiteName suite) {
    LawReport r;
    r.algebra = full.algebra;
    r.suite = suite;
    const auto n = suite_laws(suite).size();
    r.entries.assign(full.entries.begin(), full.entries.begin() + static_cast<long>(n));
    return r;
  };
  const SuiteName chain[] = {SuiteName::KAT, SuiteName::IGKAT, SuiteName::GKAT};
  const Classification classes[] = {Classification::KAT, Classification::IGKATNotKAT,
                                    Classification::GKATNotIGKAT};
  ClassificationResult out;
  std::optional<LawReport> stronger;
  for (std::size_t i = 0; i < 3; ++i) {
    LawReport r = restrict_to(chain[i]);
    if (r.all_hold()) {
      out.cls = classes[i];
      out.passing = std::move(r);
      if (stronger) {
        out.witness = *stronger->first_failure();
        out.witness_suite = to_string(stronger->suite);
      }
      return out;
    }
    stronger = std::move(r);
  }
  out.cls = Classification::NotGKAT;
  out.passing = *stronger;
  out.witness = *stronger->first_failure();
  out.witness_suite = to_string(stronger->suite);
  return out;
}

}  // namespace gkat
