#include <memory>

#include "stagelet/ast.hpp"
#include "stagelet/error.hpp"

namespace stagelet {

namespace {

struct Frame;
using Frames = std::shared_ptr<const Frame>;

// A letrec group: clause i is re-evaluated in the group's own scope each
// time its name is looked up.
struct RecGroup {
  Ast letrec;
  Frames outer;
};

struct RecSlot {
  std::shared_ptr<const RecGroup> group;
  std::size_t clause;
};

struct Frame {
  Name name;
  std::variant<Value, RecSlot> slot;
  Frames next;
};

using Meter = std::shared_ptr<StepMeter>;

Value eval(const Ast& t, const Frames& env, const Meter& meter);

Frames bind_group(const std::shared_ptr<const RecGroup>& group) {
  const auto& rec = std::get<node::LetRec>(group->letrec.node());
  Frames env = group->outer;
  for (std::size_t i = 0; i < rec.clauses.size(); ++i) {
    env = std::make_shared<const Frame>(Frame{rec.clauses[i].first, RecSlot{group, i}, env});
  }
  return env;
}

Value lookup(const Name& n, const Frames& env, const Meter& meter) {
  for (const Frame* f = env.get(); f != nullptr; f = f->next.get()) {
    if (f->name != n) continue;
    if (const auto* v = std::get_if<Value>(&f->slot)) return *v;
    const auto& slot = std::get<RecSlot>(f->slot);
    const auto& rec = std::get<node::LetRec>(slot.group->letrec.node());
    auto scope = meter->step("recursive binding");
    return eval(rec.clauses[slot.clause].second, bind_group(slot.group), meter);
  }
  throw Error(ErrorKind::UnboundVariable, n.render());
}

Frames extend(const Frames& env, const Name& n, Value v) {
  return std::make_shared<const Frame>(Frame{n, std::move(v), env});
}

Value eval(const Ast& t, const Frames& env, const Meter& meter) {
  const AstNode::variant& v = t.node();
  switch (v.index()) {
    case 0: return Value::integer(std::get<node::IntLit>(v).value);
    case 1: return Value::boolean(std::get<node::BoolLit>(v).value);
    case 2: return lookup(std::get<node::Var>(v).name, env, meter);
    case 3: return Value::integer(arith::add(eval(std::get<node::Succ>(v).arg, env, meter).as_int(), 1));
    case 4: {
      const auto& n = std::get<node::Binary>(v);
      const std::int64_t a = eval(n.lhs, env, meter).as_int();
      const std::int64_t b = eval(n.rhs, env, meter).as_int();
      switch (n.op) {
        case BinOp::Add: return Value::integer(arith::add(a, b));
        case BinOp::Sub: return Value::integer(arith::sub(a, b));
        case BinOp::Mul: return Value::integer(arith::mul(a, b));
        case BinOp::Div: return Value::integer(arith::div(a, b));
        case BinOp::Eq: return Value::boolean(a == b);
      }
      break;
    }
    case 5: {
      const auto& n = std::get<node::If>(v);
      return eval(eval(n.cond, env, meter).as_bool() ? n.then_branch : n.else_branch, env, meter);
    }
    case 6:
      // The closure holds `t` so the body outlives the caller's tree.
      return Value::function([t, env, meter](const Value& arg) {
        const auto& lam = std::get<node::Lam>(t.node());
        auto scope = meter->step("application");
        return eval(lam.body, extend(env, lam.param, arg), meter);
      });
    case 7: {
      const auto& n = std::get<node::App>(v);
      Value fn = eval(n.fn, env, meter);
      Value arg = eval(n.arg, env, meter);
      return fn.apply(arg);
    }
    case 8: {
      const auto& n = std::get<node::Let>(v);
      Value rhs = eval(n.rhs, env, meter);
      return eval(n.body, extend(env, n.name, std::move(rhs)), meter);
    }
    case 9: {
      auto group = std::make_shared<const RecGroup>(RecGroup{t, env});
      return eval(std::get<node::LetRec>(v).body, bind_group(group), meter);
    }
  }
  throw Error(ErrorKind::TypeMismatch, "malformed tree");
}

}  // namespace

Value eval_ast(const Ast& tree, const std::map<Name, Value>& env, Limits limits) {
  Frames frames;
  for (const auto& [name, value] : env) frames = extend(frames, name, value);
  return eval(tree, frames, std::make_shared<StepMeter>(limits));
}

}  // namespace stagelet
