#include "gkat/finite_algebra.hpp"

#include <algorithm>
#include <sstream>

namespace gkat {

namespace {

void check_table_shape(const std::vector<std::uint32_t>& table, std::size_t n,
                       const char* name) {
  if (table.size() != n) {
    throw ParameterError(std::string("table ") + name + " has " +
                         std::to_string(table.size()) + " cells, expected " +
                         std::to_string(n));
  }
}

}  // namespace

FiniteAlgebra::FiniteAlgebra(FiniteAlgebraData data) : data_(std::move(data)) {
  const std::size_t n = data_.size();
  if (n == 0) throw ParameterError("algebra '" + data_.name + "' has no elements");
  check_table_shape(data_.plus, n * n, "plus");
  check_table_shape(data_.seq, n * n, "seq");
  check_table_shape(data_.arrow, n * n, "arrow");
  check_table_shape(data_.star, n, "star");

  for (std::uint32_t i = 0; i < n; ++i) {
    if (!by_name_.emplace(data_.element_names[i], i).second) {
      throw ParameterError("duplicate element name '" + data_.element_names[i] +
                           "'");
    }
  }
  if (data_.zero >= n || data_.one >= n) {
    throw ParameterError("constant index out of range");
  }

  is_test_.assign(n, 0);
  std::sort(data_.tests.begin(), data_.tests.end());
  data_.tests.erase(std::unique(data_.tests.begin(), data_.tests.end()),
                    data_.tests.end());
  for (auto t : data_.tests) {
    if (t >= n) throw ParameterError("test index out of range");
    is_test_[t] = 1;
  }
  const auto& names = data_.element_names;
  if (!is_test_[data_.zero]) {
    throw ClosureError("tests", names[data_.zero], "-", "zero is not a test");
  }
  if (!is_test_[data_.one]) {
    throw ClosureError("tests", names[data_.one], "-", "one is not a test");
  }

  auto check_cell = [&](const char* table, std::uint32_t value, std::size_t row,
                        std::size_t col) {
    if (value >= n) {
      throw ClosureError(table, names[row], col < n ? names[col] : "-",
                         "entry is not an element");
    }
  };
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      check_cell("plus", data_.plus[r * n + c], r, c);
      check_cell("seq", data_.seq[r * n + c], r, c);
    }
    check_cell("star", data_.star[r], r, n);
  }
  for (auto r : data_.tests) {
    for (auto c : data_.tests) {
      const std::size_t k = static_cast<std::size_t>(r) * n + c;
      if (data_.arrow[k] == FiniteAlgebraData::kUnset) {
        throw ClosureError("arrow", names[r], names[c],
                           "arrow must be defined on tests");
      }
      check_cell("arrow", data_.arrow[k], r, c);
      if (!is_test_[data_.plus[k]]) {
        throw ClosureError("plus", names[r], names[c], "tests not closed under +");
      }
      if (!is_test_[data_.seq[k]]) {
        throw ClosureError("seq", names[r], names[c], "tests not closed under ;");
      }
      if (!is_test_[data_.arrow[k]]) {
        throw ClosureError("arrow", names[r], names[c],
                           "tests not closed under ->");
      }
    }
  }
  // Arrow cells outside tests x tests may hold any element or be unset.
  for (std::size_t k = 0; k < n * n; ++k) {
    const auto v = data_.arrow[k];
    if (v != FiniteAlgebraData::kUnset && v >= n) {
      throw ClosureError("arrow", names[k / n], names[k % n],
                         "entry is not an element");
    }
  }

  elements_.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) elements_.push_back(make_element(i));
  for (auto t : data_.tests) tests_.push_back(make_element(t));
  hash_ = fnv1a(serialize(data_));
}

Element FiniteAlgebra::arrow(Element a, Element b) const {
  const auto v = data_.arrow[cell(a, b)];
  if (v == FiniteAlgebraData::kUnset) {
    throw DomainMismatchError("arrow is undefined on (" + element_name(a) +
                              ", " + element_name(b) + ") in '" + data_.name +
                              "'");
  }
  return make_element(v);
}

std::optional<Element> FiniteAlgebra::find_element(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return make_element(it->second);
}

Element FiniteAlgebra::at(std::uint32_t index) const {
  if (index >= data_.size()) {
    throw DomainMismatchError("element index " + std::to_string(index) +
                              " out of range for '" + data_.name + "'");
  }
  return make_element(index);
}

std::size_t FiniteAlgebra::height() const {
  const std::size_t n = data_.size();
  auto leq = [&](std::size_t a, std::size_t b) { return data_.plus[a * n + b] == b; };
  // Sort by the number of elements below; a strict predecessor always has
  // strictly fewer, so one pass in this order computes longest chains.
  std::vector<std::size_t> below(n, 0), order(n);
  for (std::size_t a = 0; a < n; ++a) {
    order[a] = a;
    for (std::size_t b = 0; b < n; ++b) below[a] += leq(b, a) ? 1 : 0;
  }
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return below[x] < below[y]; });
  std::vector<std::size_t> depth(n, 0);
  std::size_t best = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = order[i];
    for (std::size_t j = 0; j < i; ++j) {
      const auto b = order[j];
      if (b != a && leq(b, a)) depth[a] = std::max(depth[a], depth[b] + 1);
    }
    best = std::max(best, depth[a]);
  }
  return best;
}

Element star_lfp(const Algebra& alg, Element a, std::size_t max_steps) {
  alg.require_owned(a);
  const std::size_t bound = alg.is_finite() ? alg.elements().size() : max_steps;
  const Element one = alg.one();
  Element current = one;
  for (std::size_t step = 0; step <= bound; ++step) {
    const Element next = alg.plus(one, alg.seq(a, current));
    if (next == current) return current;
    current = next;
  }
  throw NonMonotoneAlgebraError("star iteration did not stabilise within " +
                                std::to_string(bound + 1) + " steps in '" +
                                alg.name() + "'");
}

void synthesize_star(FiniteAlgebraData& data) {
  const std::size_t n = data.size();
  data.star.assign(n, 0);
  auto plus = [&](std::uint32_t a, std::uint32_t b) { return data.plus[a * n + b]; };
  auto seq = [&](std::uint32_t a, std::uint32_t b) { return data.seq[a * n + b]; };
  for (std::uint32_t a = 0; a < n; ++a) {
    data.star[a] = star_lfp(n, data.one, plus, seq, a);
  }
}

FiniteAlgebraPtr tabulate(const Algebra& alg, std::span<const Element> carrier,
                          std::string name) {
  const std::size_t n = carrier.size();
  std::unordered_map<Element, std::uint32_t> position;
  position.reserve(n * 2);
  FiniteAlgebraData data;
  data.name = std::move(name);
  for (std::uint32_t i = 0; i < n; ++i) {
    alg.require_owned(carrier[i]);
    if (!position.emplace(carrier[i], i).second) {
      throw ParameterError("tabulate: duplicate carrier element " +
                           alg.element_name(carrier[i]));
    }
    data.element_names.push_back(alg.element_name(carrier[i]));
    if (alg.is_test(carrier[i])) data.tests.push_back(i);
  }
  auto locate = [&](Element e, const char* table, std::size_t r, std::size_t c) {
    auto it = position.find(e);
    if (it == position.end()) {
      throw ClosureError(table, data.element_names[r],
                         c < n ? data.element_names[c] : "-",
                         "result " + alg.element_name(e) + " leaves the carrier");
    }
    return it->second;
  };
  data.zero = locate(alg.zero(), "zero", 0, n);
  data.one = locate(alg.one(), "one", 0, n);
  data.plus.resize(n * n);
  data.seq.resize(n * n);
  data.arrow.assign(n * n, FiniteAlgebraData::kUnset);
  data.star.resize(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      data.plus[r * n + c] = locate(alg.plus(carrier[r], carrier[c]), "plus", r, c);
      data.seq[r * n + c] = locate(alg.seq(carrier[r], carrier[c]), "seq", r, c);
    }
    data.star[r] = locate(alg.star(carrier[r]), "star", r, n);
  }
  for (auto r : data.tests) {
    for (auto c : data.tests) {
      data.arrow[r * n + c] =
          locate(alg.arrow(carrier[r], carrier[c]), "arrow", r, c);
    }
  }
  return std::make_shared<const FiniteAlgebra>(std::move(data));
}

std::string serialize(const FiniteAlgebraData& data) {
  const std::size_t n = data.size();
  std::ostringstream out;
  auto name_of = [&](std::uint32_t v) -> const std::string& {
    static const std::string unset = "_";
    return v == FiniteAlgebraData::kUnset ? unset : data.element_names[v];
  };
  auto row = [&](const std::vector<std::uint32_t>& table, std::size_t r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (c) out << ' ';
      out << name_of(table[r * n + c]);
    }
    out << '\n';
  };
  out << "algebra " << data.name << '\n';
  out << "elements";
  for (const auto& e : data.element_names) out << ' ' << e;
  out << "\ntests";
  std::vector<std::uint32_t> tests = data.tests;
  std::sort(tests.begin(), tests.end());
  for (auto t : tests) out << ' ' << data.element_names[t];
  out << "\nzero " << data.element_names[data.zero] << '\n';
  out << "one " << data.element_names[data.one] << '\n';
  out << "table plus\n";
  for (std::size_t r = 0; r < n; ++r) row(data.plus, r);
  out << "table seq\n";
  for (std::size_t r = 0; r < n; ++r) row(data.seq, r);
  out << "table arrow\n";
  for (std::size_t r = 0; r < n; ++r) row(data.arrow, r);
  out << "table star\n";
  for (std::size_t c = 0; c < n; ++c) {
    if (c) out << ' ';
    out << name_of(data.star[c]);
  }
  out << '\n';
  return out.str();
}

}  // namespace gkat
