#include "gkat/term.hpp"

#include <algorithm>
#include <functional>

#include "gkat/errors.hpp"
#include "gkat/parser.hpp"

namespace gkat {

struct Term::Node {
  Kind kind;
  Sort sort;
  std::string name;
  std::vector<Term> children;
};

Term Term::var(std::string name, Sort sort) {
  return Term(std::make_shared<const Node>(Node{Kind::Var, sort, std::move(name), {}}));
}

Term Term::zero() {
  static const Term t(std::make_shared<const Node>(Node{Kind::Zero, Sort::Test, {}, {}}));
  return t;
}

Term Term::one() {
  static const Term t(std::make_shared<const Node>(Node{Kind::One, Sort::Test, {}, {}}));
  return t;
}

Term Term::plus(Term lhs, Term rhs) {
  const Sort s = lhs.sort() == Sort::Test && rhs.sort() == Sort::Test ? Sort::Test
                                                                       : Sort::Program;
  return Term(std::make_shared<const Node>(
      Node{Kind::Plus, s, {}, {std::move(lhs), std::move(rhs)}}));
}

Term Term::seq(Term lhs, Term rhs) {
  const Sort s = lhs.sort() == Sort::Test && rhs.sort() == Sort::Test ? Sort::Test
                                                                       : Sort::Program;
  return Term(std::make_shared<const Node>(
      Node{Kind::Seq, s, {}, {std::move(lhs), std::move(rhs)}}));
}

Term Term::star(Term body) {
  return Term(std::make_shared<const Node>(
      Node{Kind::Star, Sort::Program, {}, {std::move(body)}}));
}

Term Term::arrow(Term lhs, Term rhs) {
  for (const Term* side : {&lhs, &rhs}) {
    if (side->sort() != Sort::Test) {
      throw SortError("-> applied to program-sorted subterm " + pretty(*side));
    }
  }
  return Term(std::make_shared<const Node>(
      Node{Kind::Arrow, Sort::Test, {}, {std::move(lhs), std::move(rhs)}}));
}

Term::Kind Term::kind() const noexcept { return node_->kind; }
Sort Term::sort() const noexcept { return node_->sort; }
const std::string& Term::name() const noexcept { return node_->name; }

const Term& Term::lhs() const {
  if (node_->children.empty()) throw Error("term has no children");
  return node_->children[0];
}

const Term& Term::rhs() const {
  if (node_->children.size() < 2) throw Error("term has no right child");
  return node_->children[1];
}

bool Term::is_negation() const noexcept {
  return node_->kind == Kind::Arrow && node_->children[1].kind() == Kind::Zero;
}

std::vector<std::pair<std::string, Sort>> Term::variables() const {
  std::vector<std::pair<std::string, Sort>> out;
  std::function<void(const Term&)> walk = [&](const Term& t) {
    if (t.kind() == Kind::Var) {
      auto it = std::find_if(out.begin(), out.end(),
                             [&](const auto& v) { return v.first == t.name(); });
      if (it == out.end()) {
        out.emplace_back(t.name(), t.sort());
      } else if (it->second != t.sort()) {
        throw SortError("variable '" + t.name() + "' used with both sorts");
      }
      return;
    }
    for (const auto& c : t.node_->children) walk(c);
  };
  walk(*this);
  return out;
}

Term Term::left_associated() const {
  switch (kind()) {
    case Kind::Var:
    case Kind::Zero:
    case Kind::One:
      return *this;
    case Kind::Star:
      return star(lhs().left_associated());
    case Kind::Arrow:
      return arrow(lhs().left_associated(), rhs().left_associated());
    case Kind::Plus:
    case Kind::Seq: {
      const Kind k = kind();
      std::vector<Term> operands;
      std::function<void(const Term&)> flatten = [&](const Term& t) {
        if (t.kind() == k) {
          flatten(t.lhs());
          flatten(t.rhs());
        } else {
          operands.push_back(t.left_associated());
        }
      };
      flatten(*this);
      Term acc = operands.front();
      for (std::size_t i = 1; i < operands.size(); ++i) {
        acc = k == Kind::Plus ? plus(acc, operands[i]) : seq(acc, operands[i]);
      }
      return acc;
    }
  }
  return *this;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.sort() != b.sort() || a.name() != b.name()) return false;
  const auto& ca = a.node_->children;
  const auto& cb = b.node_->children;
  if (ca.size() != cb.size()) return false;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (!(ca[i] == cb[i])) return false;
  }
  return true;
}


}  // namespace gkat
