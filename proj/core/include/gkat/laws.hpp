#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gkat/algebra.hpp"
#include "gkat/relation.hpp"
#include "gkat/semantics.hpp"

namespace gkat {

/// A named (quasi-)equation. Variables p,q,r,s are programs and a,b,c,d
/// tests unless the law says otherwise.
struct Law {
  std::string name;
  QuasiEquation formula;
  /// Enumeration order override (see CheckOptions::order).
  std::vector<std::string> order;

  bool is_equation() const noexcept { return formula.hypotheses.empty(); }
};

/// Builds a law from "h1, h2 => c" text with the default sort convention.
Law make_law(std::string name, std::string_view text);

enum class SuiteName : std::uint8_t { Kleene, GKAT, IGKAT, KAT, Derived, DeMorgan, Order };

const char* to_string(SuiteName s);
/// Accepts the lower-case names ("kleene", "gkat", "igkat", ...).
std::optional<SuiteName> parse_suite_name(std::string_view s);

/// Laws of a suite in report order. Suites nest: GKAT extends Kleene,
/// IGKAT extends GKAT, KAT extends IGKAT.
const std::vector<Law>& suite_laws(SuiteName suite);

/// a;(b1+...+bk) = a;b1+...+a;bk and the mirrored law, as finite sums.
std::vector<Law> finite_distributivity_laws(std::size_t k);

enum class LawStatus : std::uint8_t { Holds, Fails, SampledHolds };
const char* to_string(LawStatus s);

struct LawEntry {
  std::string law;
  LawStatus status = LawStatus::Holds;
  std::optional<Valuation> counterexample;
  std::optional<std::pair<std::string, std::string>> witness;
  std::uint64_t checked_count = 0;
};

struct LawReport {
  std::string algebra;
  SuiteName suite = SuiteName::GKAT;
  std::vector<LawEntry> entries;

  bool all_hold() const;
  /// First failing entry, if any.
  const LawEntry* first_failure() const;
};

LawEntry check_law(const Algebra& alg, const Law& law, const Strategy& strategy,
                   const CheckOptions& options = {});

LawReport run_laws(const Algebra& alg, const std::vector<Law>& laws, SuiteName tag,
                   const Strategy& strategy, const CheckOptions& options = {});

/// Exhaustive strategy on a sampled algebra throws UnsupportedStrategyError.
LawReport run_law_suite(const Algebra& alg, SuiteName suite, const Strategy& strategy,
                        const CheckOptions& options = {});

enum class Classification : std::uint8_t { KAT, IGKATNotKAT, GKATNotIGKAT, NotGKAT };
const char* to_string(Classification c);

struct ClassificationResult {
  Classification cls = Classification::NotGKAT;
  /// The report of the strongest passing suite (GKAT when none passes).
  LawReport passing;
  /// First failing law of the next stronger suite; empty for KAT.
  std::optional<LawEntry> witness;
  std::string witness_suite;
};

/// Suites are tried strongest first and the first fully passing one wins.
ClassificationResult classify(const Algebra& alg, const Strategy& strategy,
                              const CheckOptions& options = {});

}  // namespace gkat
