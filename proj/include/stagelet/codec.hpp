#ifndef STAGELET_CODEC_HPP
#define STAGELET_CODEC_HPP

#include <functional>
#include <string>

#include "stagelet/code.hpp"

namespace stagelet {

// Code combinators. Each one evaluates its i-th child at
// `location.child(i)`, counting from 1, and merges their virtual bindings
// left to right.

Code cint(std::int64_t i);
Code cbool(bool b);
Code csucc(Code a);
Code cadd(Code a, Code b);
Code csub(Code a, Code b);
Code cmul(Code a, Code b);
Code cdiv(Code a, Code b);
Code ceq(Code a, Code b);
Code cif(Code cond, Code then_branch, Code else_branch);
Code capp(Code fn, Code arg);

// `body` receives the code of the bound variable, named after the
// abstraction's own Location.
Code clam(std::function<Code(Code)> body, std::string hint = {});

// Generates `let v = rhs in body(v)` right here.
Code clet(Code rhs, std::function<Code(Code)> body, std::string hint = {});

// Generator-level let: evaluates `value` once, at child 1, and hands the
// result to `body` (evaluated at child 2) as a code value that yields the
// same denotation and bindings wherever it is used. Emits no binder.
Code share(Code value, std::function<Code(Code)> body);

// A code value that always names `name` and carries no bindings.
Code variable(Name name);

// Applies `code` at the root Location under `target`.
Generated generate(const Code& code, const Target& target);

// Both throw ResidualBindings when bindings reach the root unplaced.
Value run(const Code& code, Limits limits = {}, std::size_t canon_limit = default_canon_limit);
Ast show(const Code& code, ChildOrder order = ChildOrder::LeftToRight, std::size_t canon_limit = default_canon_limit);

}  // namespace stagelet

#endif  // STAGELET_CODEC_HPP
