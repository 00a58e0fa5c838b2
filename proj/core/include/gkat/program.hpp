#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gkat/parser.hpp"
#include "gkat/term.hpp"

namespace gkat {

/// Sugared while-programs. Conditions are Test-sorted terms.
class WhileProgram {
 public:
  struct Atom;
  struct Skip {};
  struct Halt {};
  struct Seq;
  struct If;
  struct IfThen;
  struct While;
  using Node = std::variant<Atom, Skip, Halt, Seq, If, IfThen, While>;

  static WhileProgram atom(Term action);
  static WhileProgram skip();
  static WhileProgram halt();
  static WhileProgram seq(WhileProgram first, WhileProgram second);
  static WhileProgram if_else(Term test, WhileProgram then_branch,
                              WhileProgram else_branch);
  static WhileProgram if_then(Term test, WhileProgram body);
  static WhileProgram while_do(Term test, WhileProgram body);

  const Node& node() const noexcept;

 private:
  explicit WhileProgram(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct WhileProgram::Atom { Term action; };
struct WhileProgram::Seq { WhileProgram first, second; };
struct WhileProgram::If { Term test; WhileProgram then_branch, else_branch; };
struct WhileProgram::IfThen { Term test; WhileProgram body; };
struct WhileProgram::While { Term test; WhileProgram body; };

/// Program syntax: `if b then { p } else { q }`, `if b then { p }`,
/// `while b do { p }`, `skip`, `halt`, `p ; q`, `{ p }` and atoms.
/// Undeclared atoms default to Program sort.
WhileProgram parse_program(std::string_view text, const SortDecls& decls);

/// if b then p else q  ->  b;p + !b;q
/// if b then p         ->  b;p + !b
/// while b do p        ->  (b;p)*;!b
/// skip -> 1, halt -> 0, sequencing structurally.
Term desugar(const WhileProgram& program);

std::string pretty(const WhileProgram& program);

}  // namespace gkat
