#ifndef STAGELET_SEMANTICS_HPP
#define STAGELET_SEMANTICS_HPP

#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "stagelet/ast.hpp"
#include "stagelet/name.hpp"
#include "stagelet/value.hpp"

namespace stagelet {

// What a denotation produces: a Value under the run semantics, a tree of
// generated code under the show semantics.
using SemVal = std::variant<Value, Ast>;

// Both throw TypeMismatch when handed the other semantics' result.
const Value& as_value(const SemVal& v);
const Ast& as_ast(const SemVal& v);

class Denotation;

// Persistent finite map from names to semantic values. Extension never
// modifies the receiver; all copies share structure.
class Env {
public:
  Env() = default;
  // An empty environment whose run-semantics evaluation is bounded by `limits`.
  static Env metered(Limits limits);

  Env extend(Name name, SemVal value) const;
  // Binds every clause name; looking one up evaluates its denotation in an
  // environment where all clause names are bound again.
  Env extend_rec(std::vector<std::pair<Name, Denotation>> clauses) const;
  // `alias` resolves to whatever `target` resolves to in *this* environment.
  Env alias(Name alias, Name target) const;
  // Restriction: hides any binding for `name`.
  Env without(Name name) const;

  // Follows aliases: `name` is the last name reached (the alias target when
  // the target itself is unbound), `value` is empty when nothing binds it.
  struct Resolved {
    Name name;
    std::optional<SemVal> value;
  };
  Resolved resolve(const Name& name) const;

  std::optional<SemVal> lookup(const Name& name) const { return resolve(name).value; }

  // Null for environments that were not created by `metered`.
  StepMeter* meter() const noexcept { return meter_.get(); }

private:
  struct Frame;
  Env(std::shared_ptr<const Frame> head, std::shared_ptr<StepMeter> meter)
      : head_(std::move(head)), meter_(std::move(meter)) {}

  std::shared_ptr<const Frame> head_;
  std::shared_ptr<StepMeter> meter_;
};

// A pure map from environments to semantic values.
class Denotation {
public:
  using Fn = std::function<SemVal(const Env&)>;

  explicit Denotation(Fn fn) : fn_(std::make_shared<const Fn>(std::move(fn))) {}

  SemVal operator()(const Env& env) const { return (*fn_)(env); }

  // Identity of the underlying function object.
  bool same_as(const Denotation& other) const noexcept { return fn_ == other.fn_; }

private:
  std::shared_ptr<const Fn> fn_;
};

enum class SemanticsKind { Run, Show };

// One family of strict mk-functions. `run_semantics()` builds evaluating
// denotations, `show_semantics()` builds code-producing ones.
class Semantics {
public:
  virtual ~Semantics() = default;

  virtual SemanticsKind kind() const noexcept = 0;

  // Unbound names are a run-time error under run and print literally under
  // show.
  virtual Denotation mk_var(Name name) const = 0;
  virtual Denotation mk_int(std::int64_t i) const = 0;
  virtual Denotation mk_bool(bool b) const = 0;
  virtual Denotation mk_succ(Denotation d) const = 0;
  virtual Denotation mk_binary(BinOp op, Denotation lhs, Denotation rhs) const = 0;
  virtual Denotation mk_if(Denotation cond, Denotation then_branch, Denotation else_branch) const = 0;
  virtual Denotation mk_lam(Name param, Denotation body) const = 0;
  virtual Denotation mk_app(Denotation fn, Denotation arg) const = 0;
  virtual Denotation mk_let(Name name, Denotation rhs, Denotation body) const = 0;
  // Throws std::invalid_argument on zero clauses or duplicate names.
  virtual Denotation mk_letrec(std::vector<std::pair<Name, Denotation>> clauses, Denotation body) const = 0;

  Denotation mk_add(Denotation a, Denotation b) const { return mk_binary(BinOp::Add, std::move(a), std::move(b)); }
  Denotation mk_sub(Denotation a, Denotation b) const { return mk_binary(BinOp::Sub, std::move(a), std::move(b)); }
  Denotation mk_mul(Denotation a, Denotation b) const { return mk_binary(BinOp::Mul, std::move(a), std::move(b)); }
  Denotation mk_div(Denotation a, Denotation b) const { return mk_binary(BinOp::Div, std::move(a), std::move(b)); }
  Denotation mk_eq(Denotation a, Denotation b) const { return mk_binary(BinOp::Eq, std::move(a), std::move(b)); }
};

const Semantics& run_semantics();
const Semantics& show_semantics();

// The denotation of an existing tree under `sem`: the composition rules
// applied node by node.
Denotation denote(const Semantics& sem, const Ast& tree);

}  // namespace stagelet

#endif  // STAGELET_SEMANTICS_HPP
