#ifndef STAGELET_AST_HPP
#define STAGELET_AST_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "stagelet/name.hpp"
#include "stagelet/value.hpp"

namespace stagelet {

struct AstNode;

// Immutable handle to a node of generated Base code. Copies share the tree.
class Ast {
public:
  explicit Ast(std::shared_ptr<const AstNode> node) : node_(std::move(node)) {}

  const AstNode& node() const noexcept { return *node_; }
  const AstNode* operator->() const noexcept { return node_.get(); }

  // Structural equality (names compared exactly, no alpha-renaming).
  friend bool operator==(const Ast& a, const Ast& b);

private:
  std::shared_ptr<const AstNode> node_;
};

enum class BinOp { Add, Sub, Mul, Div, Eq };

namespace node {
struct IntLit { std::int64_t value; };
struct BoolLit { bool value; };
struct Var { Name name; };
struct Succ { Ast arg; };
struct Binary { BinOp op; Ast lhs; Ast rhs; };
struct If { Ast cond; Ast then_branch; Ast else_branch; };
struct Lam { Name param; Ast body; };
struct App { Ast fn; Ast arg; };
struct Let { Name name; Ast rhs; Ast body; };
struct LetRec { std::vector<std::pair<Name, Ast>> clauses; Ast body; };
}  // namespace node

struct AstNode : std::variant<node::IntLit, node::BoolLit, node::Var, node::Succ, node::Binary, node::If,
                              node::Lam, node::App, node::Let, node::LetRec> {
  using variant::variant;
};

// Smart constructors.
namespace ast {
Ast int_lit(std::int64_t value);
Ast bool_lit(bool value);
Ast var(Name name);
Ast var(const char* source_name);
Ast succ(Ast arg);
Ast binary(BinOp op, Ast lhs, Ast rhs);
Ast add(Ast lhs, Ast rhs);
Ast sub(Ast lhs, Ast rhs);
Ast mul(Ast lhs, Ast rhs);
Ast div(Ast lhs, Ast rhs);
Ast eq(Ast lhs, Ast rhs);
Ast if_(Ast cond, Ast then_branch, Ast else_branch);
Ast lam(Name param, Ast body);
Ast app(Ast fn, Ast arg);
Ast let(Name name, Ast rhs, Ast body);
// Throws std::invalid_argument on zero clauses or duplicate clause names.
Ast letrec(std::vector<std::pair<Name, Ast>> clauses, Ast body);
}  // namespace ast

// Fully parenthesized, human-oriented rendering, e.g. "(fun x -> (x * x))".
std::string pretty(const Ast& tree);

// Canonical prefix form, e.g. "(lam x (mul (var x) (var x)))".
std::string to_sexp(const Ast& tree);

std::set<Name> free_vars(const Ast& tree);

// Equality up to consistent renaming of bound names; free names must match.
bool alpha_eq(const Ast& a, const Ast& b);

// Number of Let binders anywhere in the tree.
std::size_t count_lets(const Ast& tree);

// Every name a binder introduces, in preorder.
std::vector<Name> binders(const Ast& tree);

// Call-by-value reference interpreter.
Value eval_ast(const Ast& tree, const std::map<Name, Value>& env = {}, Limits limits = {});

}  // namespace stagelet

#endif  // STAGELET_AST_HPP
