#pragma once

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "gkat/algebra.hpp"
#include "gkat/instances.hpp"
#include "gkat/parser.hpp"

namespace gkat::testing {

inline Element el(const Algebra& alg, const std::string& name) {
  auto e = alg.find_element(name);
  if (!e) throw std::runtime_error("no element " + name + " in " + alg.name());
  return *e;
}

inline std::string nm(const Algebra& alg, Element e) { return alg.element_name(e); }

/// Every finite builtin the suites are run on, small enough for
/// exhaustive three-variable checks.
inline const std::vector<std::string>& finite_builtins() {
  static const std::vector<std::string> names = {
      "bool2",  "chain3",     "powerset:x", "powerset:xy", "powerset:xyz", "luka:2", "luka:4",
      "luka:5", "godel:3",    "godel:4",    "godel:5",     "wajsberg:3",   "wajsberg:4",
      "wajsberg:8", "ex9", "lemma4", "lemma6"};
  return names;
}

inline SortDecls decls(std::initializer_list<std::pair<const char*, Sort>> items) {
  SortDecls d;
  for (auto& [n, s] : items) d[n] = s;
  return d;
}

constexpr Sort T = Sort::Test;
constexpr Sort P = Sort::Program;

}  // namespace gkat::testing
