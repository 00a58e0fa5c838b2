#include "gkat/parser.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "gkat/errors.hpp"

namespace gkat {

namespace {

enum class Tok {
  Ident, Zero, One, Plus, Semi, Star, Arrow, Bang, LParen, RParen,
  Eq, Leq, Comma, Implies, End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      const auto digits = s.substr(start, i - start);
      if (digits == "0") {
        out.push_back({Tok::Zero, "0", start});
      } else if (digits == "1") {
        out.push_back({Tok::One, "1", start});
      } else {
        throw ParseError("unexpected numeral '" + std::string(digits) + "'", 1, start + 1);
      }
      continue;
    }
    auto two = s.substr(i, 2);
    if (two == "->") { out.push_back({Tok::Arrow, "->", start}); i += 2; continue; }
    if (two == "<=") { out.push_back({Tok::Leq, "<=", start}); i += 2; continue; }
    if (two == "=>") { out.push_back({Tok::Implies, "=>", start}); i += 2; continue; }
    switch (c) {
      case '+': out.push_back({Tok::Plus, "+", start}); break;
      case ';': out.push_back({Tok::Semi, ";", start}); break;
      case '*': out.push_back({Tok::Star, "*", start}); break;
      case '!': out.push_back({Tok::Bang, "!", start}); break;
      case '(': out.push_back({Tok::LParen, "(", start}); break;
      case ')': out.push_back({Tok::RParen, ")", start}); break;
      case '=': out.push_back({Tok::Eq, "=", start}); break;
      case ',': out.push_back({Tok::Comma, ",", start}); break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", 1, start + 1);
    }
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class TermParser {
 public:
  TermParser(std::string_view text, const SortDecls& decls)
      : tokens_(tokenize(text)), decls_(decls) {}

  Term term() { return arrow(); }

  Relation relation() {
    Relation r;
    r.lhs = term();
    if (peek().kind == Tok::Eq) {
      r.rel = Rel::Eq;
    } else if (peek().kind == Tok::Leq) {
      r.rel = Rel::Leq;
    } else {
      fail("expected '=' or '<='");
    }
    ++pos_;
    r.rhs = term();
    return r;
  }

  QuasiEquation quasi_equation() {
    std::vector<Relation> rels{relation()};
    while (accept(Tok::Comma)) rels.push_back(relation());
    QuasiEquation q;
    if (accept(Tok::Implies)) {
      q.hypotheses = std::move(rels);
      q.conclusion = relation();
    } else {
      if (rels.size() != 1) fail("expected '=>' after hypotheses");
      q.conclusion = std::move(rels.front());
    }
    return q;
  }

  void expect_end() {
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, 1, peek().pos + 1);
  }

  template <class F>
  Term sorted(std::size_t at, F&& build) {
    try {
      return build();
    } catch (const SortError& e) {
      throw SortError(std::string(e.what()) + " at 1:" + std::to_string(at + 1));
    }
  }

  Term arrow() {
    const std::size_t at = peek().pos;
    Term lhs = sum();
    if (!accept(Tok::Arrow)) return lhs;
    Term rhs = arrow();
    return sorted(at, [&] { return Term::arrow(lhs, rhs); });
  }

  Term sum() {
    Term acc = seq();
    while (accept(Tok::Plus)) acc = Term::plus(acc, seq());
    return acc;
  }

  Term seq() {
    Term acc = star();
    while (accept(Tok::Semi)) acc = Term::seq(acc, star());
    return acc;
  }

  Term star() {
    Term acc = atom();
    while (accept(Tok::Star)) acc = Term::star(acc);
    return acc;
  }

  Term atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident: {
        auto it = decls_.find(t.text);
        if (it == decls_.end()) fail("undeclared identifier '" + t.text + "'");
        ++pos_;
        return Term::var(t.text, it->second);
      }
      case Tok::Zero: ++pos_; return Term::zero();
      case Tok::One: ++pos_; return Term::one();
      case Tok::Bang: {
        const std::size_t at = t.pos;
        ++pos_;
        Term inner = atom();
        return sorted(at, [&] { return Term::negate(inner); });
      }
      case Tok::LParen: {
        ++pos_;
        Term inner = term();
        if (!accept(Tok::RParen)) fail("expected ')'");
        return inner;
      }
      default:
        fail(t.kind == Tok::End ? "unexpected end of input"
                                : "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> tokens_;
  const SortDecls& decls_;
  std::size_t pos_ = 0;
};

int level(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Arrow: return t.is_negation() ? 4 : 0;
    case Term::Kind::Plus: return 1;
    case Term::Kind::Seq: return 2;
    case Term::Kind::Star: return 3;
    default: return 4;
  }
}

void render(const Term& t, int min_level, std::string& out) {
  const bool parens = level(t) < min_level;
  if (parens) out += '(';
  switch (t.kind()) {
    case Term::Kind::Var: out += t.name(); break;
    case Term::Kind::Zero: out += '0'; break;
    case Term::Kind::One: out += '1'; break;
    case Term::Kind::Plus:
      render(t.lhs(), 1, out);
      out += " + ";
      render(t.rhs(), 2, out);
      break;
    case Term::Kind::Seq:
      render(t.lhs(), 2, out);
      out += ';';
      render(t.rhs(), 3, out);
      break;
    case Term::Kind::Star:
      render(t.lhs(), 3, out);
      out += '*';
      break;
    case Term::Kind::Arrow:
      if (t.is_negation()) {
        out += '!';
        render(t.lhs(), 4, out);
      } else {
        render(t.lhs(), 1, out);
        out += "->";
        render(t.rhs(), 0, out);
      }
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::vector<std::pair<std::string, Sort>> QuasiEquation::variables() const {
  std::vector<std::pair<std::string, Sort>> out;
  auto add = [&](const Term& t) {
    for (auto& v : t.variables()) {
      auto it = std::find_if(out.begin(), out.end(),
                             [&](const auto& w) { return w.first == v.first; });
      if (it == out.end()) {
        out.push_back(v);
      } else if (it->second != v.second) {
        throw SortError("variable '" + v.first + "' used with both sorts");
      }
    }
  };
  for (const auto& h : hypotheses) {
    add(h.lhs);
    add(h.rhs);
  }
  add(conclusion.lhs);
  add(conclusion.rhs);
  return out;
}

Term parse_term(std::string_view text, const SortDecls& decls) {
  TermParser p(text, decls);
  Term t = p.term();
  p.expect_end();
  return t;
}

Relation parse_relation(std::string_view text, const SortDecls& decls) {
  TermParser p(text, decls);
  Relation r = p.relation();
  p.expect_end();
  return r;
}

QuasiEquation parse_quasi_equation(std::string_view text, const SortDecls& decls) {
  TermParser p(text, decls);
  QuasiEquation q = p.quasi_equation();
  p.expect_end();
  return q;
}

std::string pretty(const Term& t) {
  std::string out;
  render(t, 0, out);
  return out;
}

std::string pretty(const Relation& r) {
  return pretty(r.lhs) + (r.rel == Rel::Eq ? " = " : " <= ") + pretty(r.rhs);
}

std::string pretty(const QuasiEquation& q) {
  std::string out;
  for (std::size_t i = 0; i < q.hypotheses.size(); ++i) {
    if (i) out += ", ";
    out += pretty(q.hypotheses[i]);
  }
  if (!q.hypotheses.empty()) out += " => ";
  out += pretty(q.conclusion);
  return out;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

}  // namespace gkat
