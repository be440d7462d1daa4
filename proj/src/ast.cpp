#include "stagelet/ast.hpp"

#include <algorithm>
#include <stdexcept>

namespace stagelet {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

Ast make(AstNode n) { return Ast(std::make_shared<const AstNode>(std::move(n))); }

const char* infix_symbol(BinOp op) {
  switch (op) {
    case BinOp::Add: return "+";
    case BinOp::Sub: return "-";
    case BinOp::Mul: return "*";
    case BinOp::Div: return "/";
    case BinOp::Eq: return "=";
  }
  return "?";
}

const char* prefix_symbol(BinOp op) {
  switch (op) {
    case BinOp::Add: return "add";
    case BinOp::Sub: return "sub";
    case BinOp::Mul: return "mul";
    case BinOp::Div: return "div";
    case BinOp::Eq: return "eq";
  }
  return "?";
}

void pretty_into(const Ast& t, std::string& out) {
  std::visit(overloaded{
                 [&](const node::IntLit& n) { out += std::to_string(n.value); },
                 [&](const node::BoolLit& n) { out += n.value ? "true" : "false"; },
                 [&](const node::Var& n) { out += n.name.render(); },
                 [&](const node::Succ& n) {
                   out += "(succ ";
                   pretty_into(n.arg, out);
                   out += ')';
                 },
                 [&](const node::Binary& n) {
                   out += '(';
                   pretty_into(n.lhs, out);
                   out += ' ';
                   out += infix_symbol(n.op);
                   out += ' ';
                   pretty_into(n.rhs, out);
                   out += ')';
                 },
                 [&](const node::If& n) {
                   out += "(if ";
                   pretty_into(n.cond, out);
                   out += " then ";
                   pretty_into(n.then_branch, out);
                   out += " else ";
                   pretty_into(n.else_branch, out);
                   out += ')';
                 },
                 [&](const node::Lam& n) {
                   out += "(fun " + n.param.render() + " -> ";
                   pretty_into(n.body, out);
                   out += ')';
                 },
                 [&](const node::App& n) {
                   out += '(';
                   pretty_into(n.fn, out);
                   out += ' ';
                   pretty_into(n.arg, out);
                   out += ')';
                 },
                 [&](const node::Let& n) {
                   out += "(let " + n.name.render() + " = ";
                   pretty_into(n.rhs, out);
                   out += " in ";
                   pretty_into(n.body, out);
                   out += ')';
                 },
                 [&](const node::LetRec& n) {
                   out += "(let rec ";
                   for (std::size_t i = 0; i < n.clauses.size(); ++i) {
                     if (i != 0) out += " and ";
                     out += n.clauses[i].first.render() + " = ";
                     pretty_into(n.clauses[i].second, out);
                   }
                   out += " in ";
                   pretty_into(n.body, out);
                   out += ')';
                 },
             },
             static_cast<const AstNode::variant&>(t.node()));
}

void sexp_into(const Ast& t, std::string& out) {
  std::visit(overloaded{
                 [&](const node::IntLit& n) { out += "(int " + std::to_string(n.value) + ")"; },
                 [&](const node::BoolLit& n) { out += n.value ? "(bool true)" : "(bool false)"; },
                 [&](const node::Var& n) { out += "(var " + n.name.render() + ")"; },
                 [&](const node::Succ& n) {
                   out += "(succ ";
                   sexp_into(n.arg, out);
                   out += ')';
                 },
                 [&](const node::Binary& n) {
                   out += '(';
                   out += prefix_symbol(n.op);
                   out += ' ';
                   sexp_into(n.lhs, out);
                   out += ' ';
                   sexp_into(n.rhs, out);
                   out += ')';
                 },
                 [&](const node::If& n) {
                   out += "(if ";
                   sexp_into(n.cond, out);
                   out += ' ';
                   sexp_into(n.then_branch, out);
                   out += ' ';
                   sexp_into(n.else_branch, out);
                   out += ')';
                 },
                 [&](const node::Lam& n) {
                   out += "(lam " + n.param.render() + " ";
                   sexp_into(n.body, out);
                   out += ')';
                 },
                 [&](const node::App& n) {
                   out += "(app ";
                   sexp_into(n.fn, out);
                   out += ' ';
                   sexp_into(n.arg, out);
                   out += ')';
                 },
                 [&](const node::Let& n) {
                   out += "(let " + n.name.render() + " ";
                   sexp_into(n.rhs, out);
                   out += ' ';
                   sexp_into(n.body, out);
                   out += ')';
                 },
                 [&](const node::LetRec& n) {
                   out += "(letrec (";
                   for (std::size_t i = 0; i < n.clauses.size(); ++i) {
                     if (i != 0) out += ' ';
                     out += "(" + n.clauses[i].first.render() + " ";
                     sexp_into(n.clauses[i].second, out);
                     out += ')';
                   }
                   out += ") ";
                   sexp_into(n.body, out);
                   out += ')';
                 },
             },
             static_cast<const AstNode::variant&>(t.node()));
}

// Names bound between the root and the current node, innermost last.
using Scope = std::vector<Name>;

bool bound_in(const Scope& scope, const Name& n) {
  return std::find(scope.begin(), scope.end(), n) != scope.end();
}

void free_into(const Ast& t, Scope& scope, std::set<Name>& out) {
  std::visit(overloaded{
                 [](const node::IntLit&) {},
                 [](const node::BoolLit&) {},
                 [&](const node::Var& n) {
                   if (!bound_in(scope, n.name)) out.insert(n.name);
                 },
                 [&](const node::Succ& n) { free_into(n.arg, scope, out); },
                 [&](const node::Binary& n) {
                   free_into(n.lhs, scope, out);
                   free_into(n.rhs, scope, out);
                 },
                 [&](const node::If& n) {
                   free_into(n.cond, scope, out);
                   free_into(n.then_branch, scope, out);
                   free_into(n.else_branch, scope, out);
                 },
                 [&](const node::Lam& n) {
                   scope.push_back(n.param);
                   free_into(n.body, scope, out);
                   scope.pop_back();
                 },
                 [&](const node::App& n) {
                   free_into(n.fn, scope, out);
                   free_into(n.arg, scope, out);
                 },
                 [&](const node::Let& n) {
                   free_into(n.rhs, scope, out);
                   scope.push_back(n.name);
                   free_into(n.body, scope, out);
                   scope.pop_back();
                 },
                 [&](const node::LetRec& n) {
                   for (const auto& clause : n.clauses) scope.push_back(clause.first);
                   for (const auto& clause : n.clauses) free_into(clause.second, scope, out);
                   free_into(n.body, scope, out);
                   scope.erase(scope.end() - static_cast<std::ptrdiff_t>(n.clauses.size()), scope.end());
                 },
             },
             static_cast<const AstNode::variant&>(t.node()));
}

// Binder pairs from the root of both trees, innermost last. Two variables
// correspond iff their innermost binders sit at the same stack position, or
// both are free and equal.
using PairedScope = std::vector<std::pair<Name, Name>>;

bool same_variable(const PairedScope& scope, const Name& a, const Name& b) {
  auto ia = scope.rend(), ib = scope.rend();
  for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
    if (ia == scope.rend() && it->first == a) ia = it;
    if (ib == scope.rend() && it->second == b) ib = it;
  }
  if (ia == scope.rend() && ib == scope.rend()) return a == b;
  return ia == ib;
}

bool alpha_rec(const Ast& a, const Ast& b, PairedScope& scope) {
  const AstNode::variant& va = a.node();
  const AstNode::variant& vb = b.node();
  if (va.index() != vb.index()) return false;
  return std::visit(
      overloaded{
          [&](const node::IntLit& n) { return n.value == std::get<node::IntLit>(vb).value; },
          [&](const node::BoolLit& n) { return n.value == std::get<node::BoolLit>(vb).value; },
          [&](const node::Var& n) { return same_variable(scope, n.name, std::get<node::Var>(vb).name); },
          [&](const node::Succ& n) { return alpha_rec(n.arg, std::get<node::Succ>(vb).arg, scope); },
          [&](const node::Binary& n) {
            const auto& m = std::get<node::Binary>(vb);
            return n.op == m.op && alpha_rec(n.lhs, m.lhs, scope) && alpha_rec(n.rhs, m.rhs, scope);
          },
          [&](const node::If& n) {
            const auto& m = std::get<node::If>(vb);
            return alpha_rec(n.cond, m.cond, scope) && alpha_rec(n.then_branch, m.then_branch, scope) &&
                   alpha_rec(n.else_branch, m.else_branch, scope);
          },
          [&](const node::Lam& n) {
            const auto& m = std::get<node::Lam>(vb);
            scope.emplace_back(n.param, m.param);
            const bool ok = alpha_rec(n.body, m.body, scope);
            scope.pop_back();
            return ok;
          },
          [&](const node::App& n) {
            const auto& m = std::get<node::App>(vb);
            return alpha_rec(n.fn, m.fn, scope) && alpha_rec(n.arg, m.arg, scope);
          },
          [&](const node::Let& n) {
            const auto& m = std::get<node::Let>(vb);
            if (!alpha_rec(n.rhs, m.rhs, scope)) return false;
            scope.emplace_back(n.name, m.name);
            const bool ok = alpha_rec(n.body, m.body, scope);
            scope.pop_back();
            return ok;
          },
          [&](const node::LetRec& n) {
            const auto& m = std::get<node::LetRec>(vb);
            if (n.clauses.size() != m.clauses.size()) return false;
            for (std::size_t i = 0; i < n.clauses.size(); ++i) scope.emplace_back(n.clauses[i].first, m.clauses[i].first);
            bool ok = true;
            for (std::size_t i = 0; ok && i < n.clauses.size(); ++i) {
              ok = alpha_rec(n.clauses[i].second, m.clauses[i].second, scope);
            }
            ok = ok && alpha_rec(n.body, m.body, scope);
            scope.erase(scope.end() - static_cast<std::ptrdiff_t>(n.clauses.size()), scope.end());
            return ok;
          },
      },
      va);
}

template <class F>
void walk(const Ast& t, F&& visit_node) {
  visit_node(t);
  std::visit(overloaded{
                 [](const node::IntLit&) {},
                 [](const node::BoolLit&) {},
                 [](const node::Var&) {},
                 [&](const node::Succ& n) { walk(n.arg, visit_node); },
                 [&](const node::Binary& n) {
                   walk(n.lhs, visit_node);
                   walk(n.rhs, visit_node);
                 },
                 [&](const node::If& n) {
                   walk(n.cond, visit_node);
                   walk(n.then_branch, visit_node);
                   walk(n.else_branch, visit_node);
                 },
                 [&](const node::Lam& n) { walk(n.body, visit_node); },
                 [&](const node::App& n) {
                   walk(n.fn, visit_node);
                   walk(n.arg, visit_node);
                 },
                 [&](const node::Let& n) {
                   walk(n.rhs, visit_node);
                   walk(n.body, visit_node);
                 },
                 [&](const node::LetRec& n) {
                   for (const auto& clause : n.clauses) walk(clause.second, visit_node);
                   walk(n.body, visit_node);
                 },
             },
             static_cast<const AstNode::variant&>(t.node()));
}

}  // namespace

bool operator==(const Ast& a, const Ast& b) {
  if (a.node_ == b.node_) return true;
  const AstNode::variant& va = a.node();
  const AstNode::variant& vb = b.node();
  if (va.index() != vb.index()) return false;
  return std::visit(
      overloaded{
          [&](const node::IntLit& n) { return n.value == std::get<node::IntLit>(vb).value; },
          [&](const node::BoolLit& n) { return n.value == std::get<node::BoolLit>(vb).value; },
          [&](const node::Var& n) { return n.name == std::get<node::Var>(vb).name; },
          [&](const node::Succ& n) { return n.arg == std::get<node::Succ>(vb).arg; },
          [&](const node::Binary& n) {
            const auto& m = std::get<node::Binary>(vb);
            return n.op == m.op && n.lhs == m.lhs && n.rhs == m.rhs;
          },
          [&](const node::If& n) {
            const auto& m = std::get<node::If>(vb);
            return n.cond == m.cond && n.then_branch == m.then_branch && n.else_branch == m.else_branch;
          },
          [&](const node::Lam& n) {
            const auto& m = std::get<node::Lam>(vb);
            return n.param == m.param && n.body == m.body;
          },
          [&](const node::App& n) {
            const auto& m = std::get<node::App>(vb);
            return n.fn == m.fn && n.arg == m.arg;
          },
          [&](const node::Let& n) {
            const auto& m = std::get<node::Let>(vb);
            return n.name == m.name && n.rhs == m.rhs && n.body == m.body;
          },
          [&](const node::LetRec& n) {
            const auto& m = std::get<node::LetRec>(vb);
            return n.clauses == m.clauses && n.body == m.body;
          },
      },
      va);
}

namespace ast {

Ast int_lit(std::int64_t value) { return make(node::IntLit{value}); }
Ast bool_lit(bool value) { return make(node::BoolLit{value}); }
Ast var(Name name) { return make(node::Var{std::move(name)}); }
Ast var(const char* source_name) { return var(Name::source(source_name)); }
Ast succ(Ast arg) { return make(node::Succ{std::move(arg)}); }
Ast binary(BinOp op, Ast lhs, Ast rhs) { return make(node::Binary{op, std::move(lhs), std::move(rhs)}); }
Ast add(Ast lhs, Ast rhs) { return binary(BinOp::Add, std::move(lhs), std::move(rhs)); }
Ast sub(Ast lhs, Ast rhs) { return binary(BinOp::Sub, std::move(lhs), std::move(rhs)); }
Ast mul(Ast lhs, Ast rhs) { return binary(BinOp::Mul, std::move(lhs), std::move(rhs)); }
Ast div(Ast lhs, Ast rhs) { return binary(BinOp::Div, std::move(lhs), std::move(rhs)); }
Ast eq(Ast lhs, Ast rhs) { return binary(BinOp::Eq, std::move(lhs), std::move(rhs)); }
Ast if_(Ast cond, Ast then_branch, Ast else_branch) {
  return make(node::If{std::move(cond), std::move(then_branch), std::move(else_branch)});
}
Ast lam(Name param, Ast body) { return make(node::Lam{std::move(param), std::move(body)}); }
Ast app(Ast fn, Ast arg) { return make(node::App{std::move(fn), std::move(arg)}); }
Ast let(Name name, Ast rhs, Ast body) { return make(node::Let{std::move(name), std::move(rhs), std::move(body)}); }

Ast letrec(std::vector<std::pair<Name, Ast>> clauses, Ast body) {
  if (clauses.empty()) throw std::invalid_argument("letrec needs at least one clause");
  std::set<Name> seen;
  for (const auto& clause : clauses) {
    if (!seen.insert(clause.first).second) {
      throw std::invalid_argument("duplicate letrec clause name " + clause.first.render());
    }
  }
  return make(node::LetRec{std::move(clauses), std::move(body)});
}

}  // namespace ast

std::string pretty(const Ast& tree) {
  std::string out;
  pretty_into(tree, out);
  return out;
}

std::string to_sexp(const Ast& tree) {
  std::string out;
  sexp_into(tree, out);
  return out;
}

std::set<Name> free_vars(const Ast& tree) {
  std::set<Name> out;
  Scope scope;
  free_into(tree, scope, out);
  return out;
}

bool alpha_eq(const Ast& a, const Ast& b) {
  PairedScope scope;
  return alpha_rec(a, b, scope);
}

std::size_t count_lets(const Ast& tree) {
  std::size_t count = 0;
  walk(tree, [&](const Ast& t) { count += std::holds_alternative<node::Let>(t.node()) ? 1 : 0; });
  return count;
}

std::vector<Name> binders(const Ast& tree) {
  std::vector<Name> out;
  walk(tree, [&](const Ast& t) {
    if (const auto* l = std::get_if<node::Lam>(&t.node())) out.push_back(l->param);
    if (const auto* l = std::get_if<node::Let>(&t.node())) out.push_back(l->name);
    if (const auto* l = std::get_if<node::LetRec>(&t.node())) {
      for (const auto& clause : l->clauses) out.push_back(clause.first);
    }
  });
  return out;
}

}  // namespace stagelet
