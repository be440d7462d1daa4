#include "stagelet/semantics.hpp"

#include <set>
#include <stdexcept>

#include "stagelet/error.hpp"

namespace stagelet {

const Value& as_value(const SemVal& v) {
  if (const auto* value = std::get_if<Value>(&v)) return *value;
  throw Error(ErrorKind::TypeMismatch, "expected a run-semantics value, got generated code");
}

const Ast& as_ast(const SemVal& v) {
  if (const auto* tree = std::get_if<Ast>(&v)) return *tree;
  throw Error(ErrorKind::TypeMismatch, "expected generated code, got a run-semantics value");
}

// ---------------------------------------------------------------- Env

namespace {

struct RecGroup {
  std::vector<std::pair<Name, Denotation>> clauses;
};

}  // namespace

struct Env::Frame {
  struct Rec {
    std::shared_ptr<const RecGroup> group;
    std::size_t clause;
    Env outer;
  };
  struct Redirect {
    Name target;
    Env at;
  };
  struct Hidden {};

  Name name;
  std::variant<SemVal, Rec, Redirect, Hidden> slot;
  std::shared_ptr<const Frame> next;
};

Env Env::metered(Limits limits) { return Env(nullptr, std::make_shared<StepMeter>(limits)); }

Env Env::extend(Name name, SemVal value) const {
  return Env(std::make_shared<const Frame>(Frame{std::move(name), std::move(value), head_}), meter_);
}

Env Env::extend_rec(std::vector<std::pair<Name, Denotation>> clauses) const {
  auto group = std::make_shared<const RecGroup>(RecGroup{std::move(clauses)});
  auto head = head_;
  for (std::size_t i = 0; i < group->clauses.size(); ++i) {
    head = std::make_shared<const Frame>(Frame{group->clauses[i].first, Frame::Rec{group, i, *this}, head});
  }
  return Env(std::move(head), meter_);
}

Env Env::alias(Name alias, Name target) const {
  return Env(std::make_shared<const Frame>(Frame{std::move(alias), Frame::Redirect{std::move(target), *this}, head_}),
             meter_);
}

Env Env::without(Name name) const {
  return Env(std::make_shared<const Frame>(Frame{std::move(name), Frame::Hidden{}, head_}), meter_);
}

Env::Resolved Env::resolve(const Name& name) const {
  for (const Frame* f = head_.get(); f != nullptr; f = f->next.get()) {
    if (f->name != name) continue;
    if (const auto* v = std::get_if<SemVal>(&f->slot)) return {name, *v};
    if (const auto* rec = std::get_if<Frame::Rec>(&f->slot)) {
      auto scope = StepMeter::step(meter_.get(), "recursive binding");
      return {name, rec->group->clauses[rec->clause].second(rec->outer.extend_rec(rec->group->clauses))};
    }
    if (const auto* redirect = std::get_if<Frame::Redirect>(&f->slot)) return redirect->at.resolve(redirect->target);
    return {name, std::nullopt};
  }
  return {name, std::nullopt};
}

// ---------------------------------------------------------------- helpers

namespace {

void check_clauses(const std::vector<std::pair<Name, Denotation>>& clauses) {
  if (clauses.empty()) throw std::invalid_argument("letrec needs at least one clause");
  std::set<Name> seen;
  for (const auto& clause : clauses) {
    if (!seen.insert(clause.first).second) {
      throw std::invalid_argument("duplicate letrec clause name " + clause.first.render());
    }
  }
}

std::int64_t int_of(const SemVal& v) { return as_value(v).as_int(); }

// ---------------------------------------------------------------- R

class RunSemantics final : public Semantics {
public:
  SemanticsKind kind() const noexcept override { return SemanticsKind::Run; }

  Denotation mk_var(Name name) const override {
    return Denotation([name](const Env& env) -> SemVal {
      auto resolved = env.resolve(name);
      if (resolved.value) return *std::move(resolved.value);
      throw Error(ErrorKind::UnboundVariable, resolved.name.render());
    });
  }

  Denotation mk_int(std::int64_t i) const override {
    return Denotation([i](const Env&) -> SemVal { return Value::integer(i); });
  }

  Denotation mk_bool(bool b) const override {
    return Denotation([b](const Env&) -> SemVal { return Value::boolean(b); });
  }

  Denotation mk_succ(Denotation d) const override {
    return Denotation([d](const Env& env) -> SemVal { return Value::integer(arith::add(int_of(d(env)), 1)); });
  }

  Denotation mk_binary(BinOp op, Denotation lhs, Denotation rhs) const override {
    return Denotation([op, lhs, rhs](const Env& env) -> SemVal {
      const std::int64_t a = int_of(lhs(env));
      const std::int64_t b = int_of(rhs(env));
      switch (op) {
        case BinOp::Add: return Value::integer(arith::add(a, b));
        case BinOp::Sub: return Value::integer(arith::sub(a, b));
        case BinOp::Mul: return Value::integer(arith::mul(a, b));
        case BinOp::Div: return Value::integer(arith::div(a, b));
        case BinOp::Eq: return Value::boolean(a == b);
      }
      throw Error(ErrorKind::TypeMismatch, "unknown operator");
    });
  }

  Denotation mk_if(Denotation cond, Denotation then_branch, Denotation else_branch) const override {
    return Denotation([cond, then_branch, else_branch](const Env& env) -> SemVal {
      return as_value(cond(env)).as_bool() ? then_branch(env) : else_branch(env);
    });
  }

  Denotation mk_lam(Name param, Denotation body) const override {
    return Denotation([param, body](const Env& env) -> SemVal {
      return Value::function([param, body, env](const Value& arg) {
        auto scope = StepMeter::step(env.meter(), "application");
        return as_value(body(env.extend(param, arg)));
      });
    });
  }

  Denotation mk_app(Denotation fn, Denotation arg) const override {
    return Denotation([fn, arg](const Env& env) -> SemVal {
      Value f = as_value(fn(env));
      Value a = as_value(arg(env));
      return f.apply(a);
    });
  }

  Denotation mk_let(Name name, Denotation rhs, Denotation body) const override {
    return Denotation([name, rhs, body](const Env& env) -> SemVal {
      SemVal bound = as_value(rhs(env));
      return body(env.extend(name, std::move(bound)));
    });
  }

  Denotation mk_letrec(std::vector<std::pair<Name, Denotation>> clauses, Denotation body) const override {
    check_clauses(clauses);
    return Denotation([clauses = std::move(clauses), body](const Env& env) -> SemVal {
      return body(env.extend_rec(clauses));
    });
  }
};

// ---------------------------------------------------------------- S

class ShowSemantics final : public Semantics {
public:
  SemanticsKind kind() const noexcept override { return SemanticsKind::Show; }

  Denotation mk_var(Name name) const override {
    return Denotation([name](const Env& env) -> SemVal {
      auto resolved = env.resolve(name);
      if (resolved.value) return *std::move(resolved.value);
      return ast::var(resolved.name);
    });
  }

  Denotation mk_int(std::int64_t i) const override {
    return Denotation([i](const Env&) -> SemVal { return ast::int_lit(i); });
  }

  Denotation mk_bool(bool b) const override {
    return Denotation([b](const Env&) -> SemVal { return ast::bool_lit(b); });
  }

  Denotation mk_succ(Denotation d) const override {
    return Denotation([d](const Env& env) -> SemVal { return ast::succ(as_ast(d(env))); });
  }

  Denotation mk_binary(BinOp op, Denotation lhs, Denotation rhs) const override {
    return Denotation([op, lhs, rhs](const Env& env) -> SemVal {
      Ast a = as_ast(lhs(env));
      Ast b = as_ast(rhs(env));
      return ast::binary(op, std::move(a), std::move(b));
    });
  }

  Denotation mk_if(Denotation cond, Denotation then_branch, Denotation else_branch) const override {
    return Denotation([cond, then_branch, else_branch](const Env& env) -> SemVal {
      Ast c = as_ast(cond(env));
      Ast t = as_ast(then_branch(env));
      Ast e = as_ast(else_branch(env));
      return ast::if_(std::move(c), std::move(t), std::move(e));
    });
  }

  Denotation mk_lam(Name param, Denotation body) const override {
    return Denotation([param, body](const Env& env) -> SemVal {
      return ast::lam(param, as_ast(body(env.extend(param, ast::var(param)))));
    });
  }

  Denotation mk_app(Denotation fn, Denotation arg) const override {
    return Denotation([fn, arg](const Env& env) -> SemVal {
      Ast f = as_ast(fn(env));
      Ast a = as_ast(arg(env));
      return ast::app(std::move(f), std::move(a));
    });
  }

  Denotation mk_let(Name name, Denotation rhs, Denotation body) const override {
    return Denotation([name, rhs, body](const Env& env) -> SemVal {
      Ast bound = as_ast(rhs(env));
      return ast::let(name, std::move(bound), as_ast(body(env.extend(name, ast::var(name)))));
    });
  }

  Denotation mk_letrec(std::vector<std::pair<Name, Denotation>> clauses, Denotation body) const override {
    check_clauses(clauses);
    return Denotation([clauses = std::move(clauses), body](const Env& env) -> SemVal {
      Env inner = env;
      for (const auto& clause : clauses) inner = inner.extend(clause.first, ast::var(clause.first));
      std::vector<std::pair<Name, Ast>> trees;
      trees.reserve(clauses.size());
      for (const auto& clause : clauses) trees.emplace_back(clause.first, as_ast(clause.second(inner)));
      return ast::letrec(std::move(trees), as_ast(body(inner)));
    });
  }
};

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

}  // namespace

const Semantics& run_semantics() {
  static const RunSemantics instance;
  return instance;
}

const Semantics& show_semantics() {
  static const ShowSemantics instance;
  return instance;
}

Denotation denote(const Semantics& sem, const Ast& tree) {
  return std::visit(
      overloaded{
          [&](const node::IntLit& n) { return sem.mk_int(n.value); },
          [&](const node::BoolLit& n) { return sem.mk_bool(n.value); },
          [&](const node::Var& n) { return sem.mk_var(n.name); },
          [&](const node::Succ& n) { return sem.mk_succ(denote(sem, n.arg)); },
          [&](const node::Binary& n) { return sem.mk_binary(n.op, denote(sem, n.lhs), denote(sem, n.rhs)); },
          [&](const node::If& n) {
            return sem.mk_if(denote(sem, n.cond), denote(sem, n.then_branch), denote(sem, n.else_branch));
          },
          [&](const node::Lam& n) { return sem.mk_lam(n.param, denote(sem, n.body)); },
          [&](const node::App& n) { return sem.mk_app(denote(sem, n.fn), denote(sem, n.arg)); },
          [&](const node::Let& n) { return sem.mk_let(n.name, denote(sem, n.rhs), denote(sem, n.body)); },
          [&](const node::LetRec& n) {
            std::vector<std::pair<Name, Denotation>> clauses;
            for (const auto& clause : n.clauses) clauses.emplace_back(clause.first, denote(sem, clause.second));
            return sem.mk_letrec(std::move(clauses), denote(sem, n.body));
          },
      },
      static_cast<const AstNode::variant&>(tree.node()));
}

}  // namespace stagelet
