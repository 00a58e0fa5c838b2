#include "gkat/semantics.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <random>
#include <thread>
#include <tuple>

#include "gkat/errors.hpp"
#include "gkat/parser.hpp"

namespace gkat {

void Valuation::set(const std::string& name, Sort sort, Element value) {
  for (auto& b : bindings_) {
    if (b.name == name) {
      b.sort = sort;
      b.value = value;
      return;
    }
  }
  bindings_.push_back({name, sort, value});
}

const Binding* Valuation::find(std::string_view name) const {
  for (const auto& b : bindings_) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

Element Valuation::at(std::string_view name) const {
  if (const auto* b = find(name)) return b->value;
  throw UnboundVariableError("variable '" + std::string(name) + "' is unbound");
}

std::string Valuation::render(const Algebra& alg) const {
  std::string out;
  for (const auto& b : bindings_) {
    if (!out.empty()) out += ", ";
    out += b.name + "=" + alg.element_name(b.value);
  }
  return out;
}

const char* to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Valid: return "valid";
    case VerdictStatus::Refuted: return "refuted";
    case VerdictStatus::SampledValid: return "sampled-valid";
  }
  return "?";
}

Element eval(const Term& term, const Algebra& alg, const Valuation& val, bool relaxed) {
  switch (term.kind()) {
    case Term::Kind::Var: {
      const Binding* b = val.find(term.name());
      if (!b) throw UnboundVariableError("variable '" + term.name() + "' is unbound");
      alg.require_owned(b->value);
      if (!relaxed && term.sort() == Sort::Test && !alg.is_test(b->value)) {
        throw SortError("test variable '" + term.name() + "' bound to non-test '" +
                        alg.element_name(b->value) + "'");
      }
      return b->value;
    }
    case Term::Kind::Zero: return alg.zero();
    case Term::Kind::One: return alg.one();
    case Term::Kind::Plus:
      return alg.plus(eval(term.lhs(), alg, val, relaxed), eval(term.rhs(), alg, val, relaxed));
    case Term::Kind::Seq:
      return alg.seq(eval(term.lhs(), alg, val, relaxed), eval(term.rhs(), alg, val, relaxed));
    case Term::Kind::Star: return alg.star(eval(term.lhs(), alg, val, relaxed));
    case Term::Kind::Arrow:
      return alg.arrow(eval(term.lhs(), alg, val, relaxed), eval(term.rhs(), alg, val, relaxed));
  }
  throw Error("unreachable term kind");
}

bool holds(const Relation& rel, const Algebra& alg, const Valuation& val, bool relaxed) {
  const Element l = eval(rel.lhs, alg, val, relaxed);
  const Element r = eval(rel.rhs, alg, val, relaxed);
  return rel.rel == Rel::Eq ? l == r : alg.plus(l, r) == r;
}

Verdict check_equation(const Algebra& alg, const Term& lhs, const Term& rhs, Rel rel,
                       const Strategy& strategy, const CheckOptions& options) {
  QuasiEquation q;
  q.conclusion = Relation{lhs, rhs, rel};
  return check_quasi_equation(alg, q, strategy, options);
}

namespace {

// Shared-subterm DAG of a quasi-equation. Each node caches its value and is
// recomputed only after one of its free variables changes.
struct Compiled {
  struct Node {
    Term::Kind kind;
    int a = -1;
    int b = -1;
    int var = -1;
    std::uint64_t mask = 0;
  };
  struct Root {
    int lhs;
    int rhs;
    Rel rel;
  };
  std::vector<Node> nodes;
  std::vector<Root> hypotheses;
  Root conclusion{};
  std::vector<std::string> var_names;
  std::vector<Sort> var_sorts;
  std::map<std::tuple<int, int, int, int>, int> index;

  int var_slot(const std::string& name) const {
    auto it = std::find(var_names.begin(), var_names.end(), name);
    return static_cast<int>(it - var_names.begin());
  }

  int add(const Term& t) {
    Node n{t.kind()};
    switch (t.kind()) {
      case Term::Kind::Var:
        n.var = var_slot(t.name());
        n.mask = std::uint64_t{1} << n.var;
        break;
      case Term::Kind::Zero:
      case Term::Kind::One:
        break;
      case Term::Kind::Star:
        n.a = add(t.lhs());
        n.mask = nodes[n.a].mask;
        break;
      default:
        n.a = add(t.lhs());
        n.b = add(t.rhs());
        n.mask = nodes[n.a].mask | nodes[n.b].mask;
    }
    const auto key = std::make_tuple(static_cast<int>(n.kind), n.a, n.b, n.var);
    auto [it, inserted] = index.try_emplace(key, static_cast<int>(nodes.size()));
    if (inserted) nodes.push_back(n);
    return it->second;
  }

  Root add(const Relation& r) { return Root{add(r.lhs), add(r.rhs), r.rel}; }
};

class Evaluator {
 public:
  Evaluator(const Compiled& c, const Algebra& alg)
      : c_(c), alg_(alg), value_(c.nodes.size()), dirty_(c.nodes.size(), 1),
        vars_(c.var_names.size()) {}

  void set(std::size_t slot, Element e) {
    if (vars_[slot] == e && !(pending_ & (std::uint64_t{1} << slot)) && primed_) return;
    vars_[slot] = e;
    pending_ |= std::uint64_t{1} << slot;
  }

  // True when the valuation satisfies the quasi-equation.
  bool check() {
    flush();
    for (const auto& h : c_.hypotheses) {
      if (!relation(h)) return true;
    }
    return relation(c_.conclusion);
  }

  Element get(int n) {
    if (!dirty_[n]) return value_[n];
    const auto& node = c_.nodes[n];
    Element v;
    switch (node.kind) {
      case Term::Kind::Var: v = vars_[node.var]; break;
      case Term::Kind::Zero: v = alg_.zero(); break;
      case Term::Kind::One: v = alg_.one(); break;
      case Term::Kind::Plus: v = alg_.plus(get(node.a), get(node.b)); break;
      case Term::Kind::Seq: v = alg_.seq(get(node.a), get(node.b)); break;
      case Term::Kind::Star: v = alg_.star(get(node.a)); break;
      case Term::Kind::Arrow: v = alg_.arrow(get(node.a), get(node.b)); break;
    }
    value_[n] = v;
    dirty_[n] = 0;
    return v;
  }

 private:
  void flush() {
    if (!primed_) {
      primed_ = true;
    } else if (pending_) {
      for (std::size_t i = 0; i < c_.nodes.size(); ++i) {
        if (c_.nodes[i].mask & pending_) dirty_[i] = 1;
      }
    }
    pending_ = 0;
  }

  bool relation(const Compiled::Root& r) {
    const Element l = get(r.lhs);
    const Element rr = get(r.rhs);
    return r.rel == Rel::Eq ? l == rr : alg_.plus(l, rr) == rr;
  }

  const Compiled& c_;
  const Algebra& alg_;
  std::vector<Element> value_;
  std::vector<std::uint8_t> dirty_;
  std::vector<Element> vars_;
  std::uint64_t pending_ = 0;
  bool primed_ = false;
};

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

void atomic_min(std::atomic<std::uint64_t>& target, std::uint64_t v) {
  std::uint64_t cur = target.load();
  while (v < cur && !target.compare_exchange_weak(cur, v)) {
  }
}

template <class Work>
void run_parallel(unsigned jobs, std::uint64_t total, Work&& work) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || total < 2 * jobs) {
    work(std::uint64_t{0}, total);
    return;
  }
  std::vector<std::thread> threads;
  const std::uint64_t chunk = (total + jobs - 1) / jobs;
  for (unsigned j = 0; j < jobs; ++j) {
    const std::uint64_t begin = j * chunk;
    const std::uint64_t end = std::min(total, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([&work, begin, end] { work(begin, end); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace

Verdict check_quasi_equation(const Algebra& alg, const QuasiEquation& q,
                             const Strategy& strategy, const CheckOptions& options) {
  const bool exhaustive = std::holds_alternative<Exhaustive>(strategy);
  if (exhaustive && !alg.is_finite()) {
    throw UnsupportedStrategyError("exhaustive checking needs a finite algebra; '" +
                                   alg.name() + "' is sampled");
  }

  auto vars = q.variables();
  std::vector<std::pair<std::string, Sort>> ordered;
  for (const auto& name : options.order) {
    auto it = std::find_if(vars.begin(), vars.end(), [&](auto& v) { return v.first == name; });
    if (it != vars.end()) {
      ordered.push_back(*it);
      vars.erase(it);
    }
  }
  ordered.insert(ordered.end(), vars.begin(), vars.end());
  if (ordered.size() > 64) throw ParameterError("at most 64 variables are supported");

  Compiled c;
  for (const auto& [name, sort] : ordered) {
    c.var_names.push_back(name);
    c.var_sorts.push_back(sort);
  }
  for (const auto& h : q.hypotheses) c.hypotheses.push_back(c.add(h));
  c.conclusion = c.add(q.conclusion);

  std::vector<std::vector<Element>> domains;
  for (const auto& [name, sort] : ordered) {
    if (const Binding* b = options.fixed.find(name)) {
      alg.require_owned(b->value);
      domains.push_back({b->value});
    } else if (sort == Sort::Test && options.test_domain == TestDomain::Tests) {
      auto t = alg.test_elements();
      domains.emplace_back(t.begin(), t.end());
    } else {
      auto e = alg.elements();
      domains.emplace_back(e.begin(), e.end());
    }
  }
  const std::size_t nv = domains.size();

  Verdict verdict;
  std::atomic<std::uint64_t> best{kNone};
  std::vector<std::uint32_t> samples;

  if (exhaustive) {
    std::uint64_t total = 1;
    for (const auto& d : domains) {
      if (d.empty()) {
        total = 0;
        break;
      }
      if (total > options.cap / d.size()) {
        throw SizeError("valuation space exceeds the cap of " + std::to_string(options.cap));
      }
      total *= d.size();
    }
    verdict.space_size = total;
    run_parallel(options.jobs, total, [&](std::uint64_t begin, std::uint64_t end) {
      Evaluator ev(c, alg);
      std::vector<std::size_t> digit(nv);
      std::uint64_t rest = begin;
      for (std::size_t k = nv; k-- > 0;) {
        digit[k] = rest % domains[k].size();
        rest /= domains[k].size();
        ev.set(k, domains[k][digit[k]]);
      }
      for (std::uint64_t i = begin; i < end; ++i) {
        if (i > best.load(std::memory_order_relaxed)) return;
        if (!ev.check()) {
          atomic_min(best, i);
          return;
        }
        for (std::size_t k = nv; k-- > 0;) {
          if (++digit[k] < domains[k].size()) {
            ev.set(k, domains[k][digit[k]]);
            break;
          }
          digit[k] = 0;
          ev.set(k, domains[k][0]);
        }
      }
    });
  } else {
    const auto& s = std::get<Sampled>(strategy);
    bool empty = false;
    for (const auto& d : domains) empty = empty || d.empty();
    const std::uint64_t total = empty ? 0 : s.count;
    verdict.space_size = total;
    samples.resize(total * nv);
    std::mt19937_64 rng(s.seed);
    for (std::uint64_t i = 0; i < total; ++i) {
      for (std::size_t k = 0; k < nv; ++k) {
        samples[i * nv + k] = static_cast<std::uint32_t>(rng() % domains[k].size());
      }
    }
    run_parallel(options.jobs, total, [&](std::uint64_t begin, std::uint64_t end) {
      Evaluator ev(c, alg);
      for (std::uint64_t i = begin; i < end; ++i) {
        if (i > best.load(std::memory_order_relaxed)) return;
        for (std::size_t k = 0; k < nv; ++k) ev.set(k, domains[k][samples[i * nv + k]]);
        if (!ev.check()) {
          atomic_min(best, i);
          return;
        }
      }
    });
  }

  const std::uint64_t fail = best.load();
  if (fail == kNone) {
    verdict.status = exhaustive ? VerdictStatus::Valid : VerdictStatus::SampledValid;
    verdict.checked = verdict.space_size;
    return verdict;
  }

  verdict.status = VerdictStatus::Refuted;
  verdict.checked = fail + 1;
  Valuation cx;
  if (exhaustive) {
    std::uint64_t rest = fail;
    std::vector<Element> vals(nv);
    for (std::size_t k = nv; k-- > 0;) {
      vals[k] = domains[k][rest % domains[k].size()];
      rest /= domains[k].size();
    }
    for (std::size_t k = 0; k < nv; ++k) cx.set(c.var_names[k], c.var_sorts[k], vals[k]);
  } else {
    for (std::size_t k = 0; k < nv; ++k) {
      cx.set(c.var_names[k], c.var_sorts[k], domains[k][samples[fail * nv + k]]);
    }
  }
  const bool relaxed = options.test_domain == TestDomain::AllElements;
  const Element l = eval(q.conclusion.lhs, alg, cx, relaxed);
  const Element r = eval(q.conclusion.rhs, alg, cx, relaxed);
  verdict.witness = std::make_pair(alg.element_name(l), alg.element_name(r));
  verdict.counterexample = std::move(cx);
  return verdict;
}

}  // namespace gkat
