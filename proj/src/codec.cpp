#include "stagelet/codec.hpp"

#include <array>

#include "stagelet/error.hpp"
#include "stagelet/insertion.hpp"

namespace stagelet {

namespace {

// Generates children 1..N at `here.child(i)` in the target's visiting order;
// results are indexed by child position either way.
template <std::size_t N>
std::array<std::optional<Generated>, N> children(const std::array<const Code*, N>& codes, const Location& here,
                                                 const Target& target) {
  std::array<std::optional<Generated>, N> out;
  for (std::size_t step = 0; step < N; ++step) {
    const std::size_t i = target.order == ChildOrder::LeftToRight ? step : N - 1 - step;
    out[i] = codes[i]->at(here.child(static_cast<std::uint32_t>(i + 1)), target);
  }
  return out;
}

Code binary(BinOp op, Code a, Code b) {
  return Code([op, a, b](const Location& here, const Target& target) {
    auto gen = children<2>({&a, &b}, here, target);
    return Generated{target.semantics->mk_binary(op, gen[0]->code, gen[1]->code),
                     merge(gen[0]->bindings, gen[1]->bindings)};
  });
}

std::string describe_residual(const VirtualBindings& bindings) {
  std::string out;
  for (const auto& [locus, store] : bindings.stores()) {
    if (!out.empty()) out += "; ";
    out += locus.is_root() ? std::string("locus <root>") : "locus " + locus.to_string();
    out += " (keys";
    for (MemoKey k : store.insertion_seq()) out += " " + std::to_string(k);
    out += ")";
  }
  return "bindings never placed for " + out;
}

Generated complete(const Code& code, const Target& target) {
  Generated g = generate(code, target);
  if (!g.bindings.empty()) throw Error(ErrorKind::ResidualBindings, describe_residual(g.bindings));
  return g;
}

}  // namespace

Code cint(std::int64_t i) {
  return Code([i](const Location&, const Target& target) { return Generated{target.semantics->mk_int(i), {}}; });
}

Code cbool(bool b) {
  return Code([b](const Location&, const Target& target) { return Generated{target.semantics->mk_bool(b), {}}; });
}

Code csucc(Code a) {
  return Code([a](const Location& here, const Target& target) {
    Generated g = a.at(here.child(1), target);
    return Generated{target.semantics->mk_succ(g.code), std::move(g.bindings)};
  });
}

Code cadd(Code a, Code b) { return binary(BinOp::Add, std::move(a), std::move(b)); }
Code csub(Code a, Code b) { return binary(BinOp::Sub, std::move(a), std::move(b)); }
Code cmul(Code a, Code b) { return binary(BinOp::Mul, std::move(a), std::move(b)); }
Code cdiv(Code a, Code b) { return binary(BinOp::Div, std::move(a), std::move(b)); }
Code ceq(Code a, Code b) { return binary(BinOp::Eq, std::move(a), std::move(b)); }

Code cif(Code cond, Code then_branch, Code else_branch) {
  return Code([cond, then_branch, else_branch](const Location& here, const Target& target) {
    auto gen = children<3>({&cond, &then_branch, &else_branch}, here, target);
    return Generated{target.semantics->mk_if(gen[0]->code, gen[1]->code, gen[2]->code),
                     merge(merge(gen[0]->bindings, gen[1]->bindings), gen[2]->bindings)};
  });
}

Code capp(Code fn, Code arg) {
  return Code([fn, arg](const Location& here, const Target& target) {
    auto gen = children<2>({&fn, &arg}, here, target);
    return Generated{target.semantics->mk_app(gen[0]->code, gen[1]->code),
                     merge(gen[0]->bindings, gen[1]->bindings)};
  });
}

Code variable(Name name) {
  return Code([name](const Location&, const Target& target) { return Generated{target.semantics->mk_var(name), {}}; });
}

Code clam(std::function<Code(Code)> body, std::string hint) {
  return Code([body = std::move(body), hint](const Location& here, const Target& target) {
    Name param = Name::fresh(here, hint);
    Generated g = body(variable(param)).at(here.child(1), target);
    return Generated{target.semantics->mk_lam(param, g.code), std::move(g.bindings)};
  });
}

Code clet(Code rhs, std::function<Code(Code)> body, std::string hint) {
  return Code([rhs, body = std::move(body), hint](const Location& here, const Target& target) {
    Name name = Name::fresh(here, hint);
    Code in = body(variable(name));
    auto gen = children<2>({&rhs, &in}, here, target);
    return Generated{target.semantics->mk_let(name, gen[0]->code, gen[1]->code),
                     merge(gen[0]->bindings, gen[1]->bindings)};
  });
}

Code share(Code value, std::function<Code(Code)> body) {
  return Code([value, body = std::move(body)](const Location& here, const Target& target) {
    Generated shared = value.at(here.child(1), target);
    Code same([shared](const Location&, const Target&) { return shared; });
    return body(same).at(here.child(2), target);
  });
}

Generated generate(const Code& code, const Target& target) { return code.at(Location{}, target); }

Value run(const Code& code, Limits limits, std::size_t canon_limit) {
  Generated g = complete(code, Target{&run_semantics(), ChildOrder::LeftToRight, canon_limit});
  return as_value(g.code(Env::metered(limits)));
}

Ast show(const Code& code, ChildOrder order, std::size_t canon_limit) {
  Generated g = complete(code, Target{&show_semantics(), order, canon_limit});
  return as_ast(g.code(Env{}));
}

}  // namespace stagelet
