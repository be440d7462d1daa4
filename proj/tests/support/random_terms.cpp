#include "random_terms.hpp"

#include <string>

#include "stagelet/codec.hpp"
#include "stagelet/insertion.hpp"

namespace testgen {

using namespace stagelet;

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

const char* const int_names[] = {"a", "b", "c"};
const char* const fn_names[] = {"f", "g"};

Ast int_term(Rng& rng, int depth, std::vector<Name>& scope) {
  if (depth <= 0 || uniform(rng, 0, 9) < 2) {
    if (!scope.empty() && uniform(rng, 0, 1) == 0) return ast::var(scope[uniform(rng, 0, int(scope.size()) - 1)]);
    return ast::int_lit(uniform(rng, -3, 9));
  }
  switch (uniform(rng, 0, 8)) {
    case 0: return ast::succ(int_term(rng, depth - 1, scope));
    case 1: return ast::add(int_term(rng, depth - 1, scope), int_term(rng, depth - 1, scope));
    case 2: return ast::sub(int_term(rng, depth - 1, scope), int_term(rng, depth - 1, scope));
    case 3: return ast::mul(int_term(rng, depth - 1, scope), int_term(rng, depth - 1, scope));
    case 4: {
      Ast a = int_term(rng, depth - 1, scope);
      Ast b = int_term(rng, depth - 1, scope);
      Ast t = int_term(rng, depth - 1, scope);
      Ast e = int_term(rng, depth - 1, scope);
      return ast::if_(ast::eq(a, b), t, e);
    }
    case 5: {
      Name n = Name::source(int_names[uniform(rng, 0, 2)]);
      Ast rhs = int_term(rng, depth - 1, scope);
      scope.push_back(n);
      Ast body = int_term(rng, depth - 1, scope);
      scope.pop_back();
      return ast::let(n, rhs, body);
    }
    case 6:
    case 7: {
      Name n = Name::source(int_names[uniform(rng, 0, 2)]);
      scope.push_back(n);
      Ast body = int_term(rng, depth - 1, scope);
      scope.pop_back();
      return ast::app(ast::lam(n, body), int_term(rng, depth - 1, scope));
    }
    default: {
      // let rec f = fun n -> if n = 0 then base else step + f (n - 1) in f k
      Name f = Name::source(fn_names[uniform(rng, 0, 1)]);
      Name n = Name::source(int_names[uniform(rng, 0, 2)]);
      scope.push_back(n);
      Ast base = int_term(rng, depth - 2, scope);
      Ast step = int_term(rng, depth - 2, scope);
      scope.pop_back();
      Ast body = ast::if_(ast::eq(ast::var(n), ast::int_lit(0)), base,
                          ast::add(step, ast::app(ast::var(f), ast::sub(ast::var(n), ast::int_lit(1)))));
      return ast::letrec({{f, ast::lam(n, body)}}, ast::app(ast::var(f), ast::int_lit(uniform(rng, 0, 3))));
    }
  }
}

struct Renamer {
  int& counter;
  std::vector<std::pair<Name, Name>> scope;

  Name fresh() { return Name::source("r" + std::to_string(counter++)); }

  Name lookup(const Name& n) const {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
      if (it->first == n) return it->second;
    }
    return n;
  }

  Ast go(const Ast& t) {
    const AstNode::variant& v = t.node();
    if (const auto* n = std::get_if<node::Var>(&v)) return ast::var(lookup(n->name));
    if (const auto* n = std::get_if<node::Succ>(&v)) return ast::succ(go(n->arg));
    if (const auto* n = std::get_if<node::Binary>(&v)) return ast::binary(n->op, go(n->lhs), go(n->rhs));
    if (const auto* n = std::get_if<node::If>(&v)) return ast::if_(go(n->cond), go(n->then_branch), go(n->else_branch));
    if (const auto* n = std::get_if<node::App>(&v)) return ast::app(go(n->fn), go(n->arg));
    if (const auto* n = std::get_if<node::Lam>(&v)) {
      Name r = fresh();
      scope.emplace_back(n->param, r);
      Ast body = go(n->body);
      scope.pop_back();
      return ast::lam(r, body);
    }
    if (const auto* n = std::get_if<node::Let>(&v)) {
      Ast rhs = go(n->rhs);
      Name r = fresh();
      scope.emplace_back(n->name, r);
      Ast body = go(n->body);
      scope.pop_back();
      return ast::let(r, rhs, body);
    }
    if (const auto* n = std::get_if<node::LetRec>(&v)) {
      std::vector<Name> renamed;
      for (const auto& clause : n->clauses) {
        renamed.push_back(fresh());
        scope.emplace_back(clause.first, renamed.back());
      }
      std::vector<std::pair<Name, Ast>> clauses;
      for (std::size_t i = 0; i < n->clauses.size(); ++i) clauses.emplace_back(renamed[i], go(n->clauses[i].second));
      Ast body = go(n->body);
      scope.erase(scope.end() - static_cast<std::ptrdiff_t>(n->clauses.size()), scope.end());
      return ast::letrec(std::move(clauses), body);
    }
    return t;  // literals
  }
};

GenPtr make(GenTerm::Op op, std::int64_t value, std::vector<GenPtr> kids, std::size_t locus = 0) {
  return std::make_shared<const GenTerm>(GenTerm{op, value, locus, std::move(kids)});
}

GenPtr gen_term(Rng& rng, int depth, int vars, int loci, bool with_genlet) {
  using Op = GenTerm::Op;
  if (depth <= 1 || uniform(rng, 0, 9) < 2) {
    if (vars > 0 && uniform(rng, 0, 1) == 0) return make(Op::Var, uniform(rng, 0, vars - 1), {});
    return make(Op::Lit, uniform(rng, -3, 9), {});
  }
  const int choices = with_genlet && loci > 0 ? 11 : (with_genlet ? 8 : 7);
  switch (uniform(rng, 0, choices)) {
    case 0: return make(Op::Succ, 0, {gen_term(rng, depth - 1, vars, loci, with_genlet)});
    case 1:
      return make(Op::Add, 0,
                  {gen_term(rng, depth - 1, vars, loci, with_genlet), gen_term(rng, depth - 1, vars, loci, with_genlet)});
    case 2:
      return make(Op::Sub, 0,
                  {gen_term(rng, depth - 1, vars, loci, with_genlet), gen_term(rng, depth - 1, vars, loci, with_genlet)});
    case 3:
      return make(Op::Mul, 0,
                  {gen_term(rng, depth - 1, vars, loci, with_genlet), gen_term(rng, depth - 1, vars, loci, with_genlet)});
    case 4: {
      // The comparison operands and branches each get depth - 2 so that the
      // ceq node inside still fits within the depth bound.
      std::vector<GenPtr> kids;
      for (int i = 0; i < 4; ++i) kids.push_back(gen_term(rng, depth - 2, vars, loci, with_genlet));
      return make(Op::IfEq, 0, std::move(kids));
    }
    case 5:
    case 6:
      return make(Op::LamApp, 0,
                  {gen_term(rng, depth - 2, vars + 1, loci, with_genlet), gen_term(rng, depth - 1, vars, loci, with_genlet)});
    case 7:
      return make(Op::Clet, 0,
                  {gen_term(rng, depth - 1, vars, loci, with_genlet), gen_term(rng, depth - 1, vars + 1, loci, with_genlet)});
    case 8: return make(Op::Locus, 0, {gen_term(rng, depth - 1, vars, loci + 1, with_genlet)});
    default:
      return make(Op::Genlet, uniform(rng, 0, 2), {gen_term(rng, depth - 1, vars, loci, with_genlet)},
                  static_cast<std::size_t>(uniform(rng, 0, loci - 1)));
  }
}

Code build(const GenPtr& t, const std::vector<Code>& vars, const std::vector<Locus>& loci) {
  using Op = GenTerm::Op;
  switch (t->op) {
    case Op::Lit: return cint(t->value);
    case Op::Var: return vars[static_cast<std::size_t>(t->value)];
    case Op::Succ: return csucc(build(t->kids[0], vars, loci));
    case Op::Add: return cadd(build(t->kids[0], vars, loci), build(t->kids[1], vars, loci));
    case Op::Sub: return csub(build(t->kids[0], vars, loci), build(t->kids[1], vars, loci));
    case Op::Mul: return cmul(build(t->kids[0], vars, loci), build(t->kids[1], vars, loci));
    case Op::IfEq:
      return cif(ceq(build(t->kids[0], vars, loci), build(t->kids[1], vars, loci)), build(t->kids[2], vars, loci),
                 build(t->kids[3], vars, loci));
    case Op::LamApp: {
      GenPtr body = t->kids[0];
      Code fn = clam([body, vars, loci](Code x) {
        auto inner = vars;
        inner.push_back(x);
        return build(body, inner, loci);
      });
      return capp(fn, build(t->kids[1], vars, loci));
    }
    case Op::Clet: {
      GenPtr body = t->kids[1];
      return clet(build(t->kids[0], vars, loci), [body, vars, loci](Code x) {
        auto inner = vars;
        inner.push_back(x);
        return build(body, inner, loci);
      });
    }
    case Op::Genlet: return genlet(loci[t->locus], t->value, build(t->kids[0], vars, loci));
    case Op::Locus: {
      GenPtr body = t->kids[0];
      return with_locus([body, vars, loci](Locus l) {
        auto inner = loci;
        inner.push_back(l);
        return build(body, vars, inner);
      });
    }
  }
  return cint(0);
}

}  // namespace

Ast random_base_term(Rng& rng, int depth) {
  std::vector<Name> scope;
  Ast t = int_term(rng, depth, scope);
  if (uniform(rng, 0, 4) == 0) return ast::eq(t, int_term(rng, depth - 1, scope));
  return t;
}

Ast rename_bound(const Ast& tree, int& counter) { return Renamer{counter, {}}.go(tree); }

GenPtr random_gen_term(Rng& rng, int depth, bool with_genlet) {
  if (!with_genlet) return gen_term(rng, depth, 0, 0, false);
  return make(GenTerm::Op::Locus, 0, {gen_term(rng, depth - 1, 0, 1, true)});
}

Code to_code(const GenPtr& term) { return build(term, {}, {}); }

std::size_t count_genlets(const GenPtr& term) {
  std::size_t n = term->op == GenTerm::Op::Genlet ? 1 : 0;
  for (const auto& k : term->kids) n += count_genlets(k);
  return n;
}

}  // namespace testgen
