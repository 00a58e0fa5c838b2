#include "gkat/program.hpp"

#include <cctype>

#include "gkat/errors.hpp"

namespace gkat {

WhileProgram WhileProgram::atom(Term action) {
  return WhileProgram(std::make_shared<const Node>(Atom{std::move(action)}));
}
const WhileProgram::Node& WhileProgram::node() const noexcept { return *node_; }

WhileProgram WhileProgram::skip() { return WhileProgram(std::make_shared<const Node>(Skip{})); }
WhileProgram WhileProgram::halt() { return WhileProgram(std::make_shared<const Node>(Halt{})); }
WhileProgram WhileProgram::seq(WhileProgram first, WhileProgram second) {
  return WhileProgram(
      std::make_shared<const Node>(Seq{std::move(first), std::move(second)}));
}

namespace {
void require_test(const Term& t) {
  if (t.sort() != Sort::Test) {
    throw SortError("condition '" + pretty(t) + "' is not a test");
  }
}
}  // namespace

WhileProgram WhileProgram::if_else(Term test, WhileProgram then_branch,
                                   WhileProgram else_branch) {
  require_test(test);
  return WhileProgram(std::make_shared<const Node>(
      If{std::move(test), std::move(then_branch), std::move(else_branch)}));
}
WhileProgram WhileProgram::if_then(Term test, WhileProgram body) {
  require_test(test);
  return WhileProgram(
      std::make_shared<const Node>(IfThen{std::move(test), std::move(body)}));
}
WhileProgram WhileProgram::while_do(Term test, WhileProgram body) {
  require_test(test);
  return WhileProgram(
      std::make_shared<const Node>(While{std::move(test), std::move(body)}));
}

namespace {

// Statements are split on keywords, braces and top-level ';'. Whatever lies
// between those delimiters is handed to the term parser: conditions with
// undeclared identifiers as tests, atoms with undeclared identifiers as
// programs.
class ProgramParser {
 public:
  ProgramParser(std::string_view text, const SortDecls& decls)
      : text_(text), decls_(decls) {}

  WhileProgram parse() {
    WhileProgram p = sequence();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, 1, pos_ + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_keyword(std::string_view kw) {
    skip_space();
    if (text_.substr(pos_, kw.size()) != kw) return false;
    const std::size_t end = pos_ + kw.size();
    return end == text_.size() ||
           !(std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_');
  }

  void expect_keyword(std::string_view kw) {
    if (!at_keyword(kw)) fail("expected '" + std::string(kw) + "'");
    pos_ += kw.size();
  }

  void expect_char(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  WhileProgram sequence() {
    WhileProgram acc = statement();
    for (;;) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == ';') {
        ++pos_;
        acc = WhileProgram::seq(acc, statement());
      } else {
        return acc;
      }
    }
  }

  WhileProgram block() {
    expect_char('{');
    WhileProgram body = sequence();
    expect_char('}');
    return body;
  }

  WhileProgram statement() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '{') return block();
    if (at_keyword("skip")) {
      pos_ += 4;
      return WhileProgram::skip();
    }
    if (at_keyword("halt")) {
      pos_ += 4;
      return WhileProgram::halt();
    }
    if (at_keyword("if")) {
      pos_ += 2;
      Term test = condition("then");
      expect_keyword("then");
      WhileProgram then_branch = block();
      if (at_keyword("else")) {
        pos_ += 4;
        WhileProgram else_branch = block();
        return WhileProgram::if_else(test, then_branch, else_branch);
      }
      return WhileProgram::if_then(test, then_branch);
    }
    if (at_keyword("while")) {
      pos_ += 5;
      Term test = condition("do");
      expect_keyword("do");
      return WhileProgram::while_do(test, block());
    }
    return WhileProgram::atom(action());
  }

  Term condition(std::string_view terminator) {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !at_keyword(terminator)) ++pos_;
    if (pos_ >= text_.size()) fail("expected '" + std::string(terminator) + "'");
    return sub_term(start, pos_, Sort::Test);
  }

  Term action() {
    skip_space();
    const std::size_t start = pos_;
    int depth = 0;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth == 0 && (c == ';' || c == '}' || c == '{')) break;
      ++pos_;
    }
    if (pos_ == start) fail("expected a statement");
    return sub_term(start, pos_, Sort::Program);
  }

  Term sub_term(std::size_t start, std::size_t end, Sort fallback) {
    const std::string_view piece = text_.substr(start, end - start);
    SortDecls local = decls_;
    for (std::size_t i = 0; i < piece.size();) {
      if (std::isalpha(static_cast<unsigned char>(piece[i]))) {
        std::size_t j = i;
        while (j < piece.size() &&
               (std::isalnum(static_cast<unsigned char>(piece[j])) || piece[j] == '_')) {
          ++j;
        }
        local.try_emplace(std::string(piece.substr(i, j - i)), fallback);
        i = j;
      } else {
        ++i;
      }
    }
    try {
      return parse_term(piece, local);
    } catch (const ParseError& e) {
      throw ParseError(e.reason(), 1, start + e.column());
    }
  }

  std::string_view text_;
  const SortDecls& decls_;
  std::size_t pos_ = 0;
};

std::string pretty_program(const WhileProgram& p) {
  struct Visitor {
    std::string operator()(const WhileProgram::Atom& a) const {
      const std::string s = pretty(a.action);
      return s.find(';') == std::string::npos ? s : "(" + s + ")";
    }
    std::string operator()(const WhileProgram::Skip&) const { return "skip"; }
    std::string operator()(const WhileProgram::Halt&) const { return "halt"; }
    std::string operator()(const WhileProgram::Seq& s) const {
      return pretty_program(s.first) + "; " + pretty_program(s.second);
    }
    std::string operator()(const WhileProgram::If& i) const {
      return "if " + pretty(i.test) + " then { " + pretty_program(i.then_branch) +
             " } else { " + pretty_program(i.else_branch) + " }";
    }
    std::string operator()(const WhileProgram::IfThen& i) const {
      return "if " + pretty(i.test) + " then { " + pretty_program(i.body) + " }";
    }
    std::string operator()(const WhileProgram::While& w) const {
      return "while " + pretty(w.test) + " do { " + pretty_program(w.body) + " }";
    }
  };
  return std::visit(Visitor{}, p.node());
}

}  // namespace

WhileProgram parse_program(std::string_view text, const SortDecls& decls) {
  return ProgramParser(text, decls).parse();
}

Term desugar(const WhileProgram& program) {
  struct Visitor {
    Term operator()(const WhileProgram::Atom& a) const { return a.action; }
    Term operator()(const WhileProgram::Skip&) const { return Term::one(); }
    Term operator()(const WhileProgram::Halt&) const { return Term::zero(); }
    Term operator()(const WhileProgram::Seq& s) const {
      return Term::seq(desugar(s.first), desugar(s.second));
    }
    Term operator()(const WhileProgram::If& i) const {
      return Term::plus(Term::seq(i.test, desugar(i.then_branch)),
                        Term::seq(Term::negate(i.test), desugar(i.else_branch)));
    }
    Term operator()(const WhileProgram::IfThen& i) const {
      return Term::plus(Term::seq(i.test, desugar(i.body)), Term::negate(i.test));
    }
    Term operator()(const WhileProgram::While& w) const {
      return Term::seq(Term::star(Term::seq(w.test, desugar(w.body))),
                       Term::negate(w.test));
    }
  };
  return std::visit(Visitor{}, program.node());
}

std::string pretty(const WhileProgram& program) { return pretty_program(program); }

}  // namespace gkat
