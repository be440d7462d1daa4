#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "random_terms.hpp"
#include "stagelet/ast.hpp"
#include "stagelet/error.hpp"
#include "stagelet/examples.hpp"

using namespace stagelet;
using namespace stagelet::ast;

namespace {

Name src(const char* n) { return Name::source(n); }

ErrorKind error_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::TypeMismatch;
}

// Every variable occurrence, with the binders in scope at that point.
void occurrences(const Ast& t, std::vector<Name>& bound, std::set<Name>& free) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, node::Var>) {
          if (std::find(bound.begin(), bound.end(), x.name) == bound.end()) free.insert(x.name);
        } else if constexpr (std::is_same_v<T, node::Succ>) {
          occurrences(x.arg, bound, free);
        } else if constexpr (std::is_same_v<T, node::Binary>) {
          occurrences(x.lhs, bound, free);
          occurrences(x.rhs, bound, free);
        } else if constexpr (std::is_same_v<T, node::If>) {
          occurrences(x.cond, bound, free);
          occurrences(x.then_branch, bound, free);
          occurrences(x.else_branch, bound, free);
        } else if constexpr (std::is_same_v<T, node::Lam>) {
          bound.push_back(x.param);
          occurrences(x.body, bound, free);
          bound.pop_back();
        } else if constexpr (std::is_same_v<T, node::App>) {
          occurrences(x.fn, bound, free);
          occurrences(x.arg, bound, free);
        } else if constexpr (std::is_same_v<T, node::Let>) {
          occurrences(x.rhs, bound, free);
          bound.push_back(x.name);
          occurrences(x.body, bound, free);
          bound.pop_back();
        } else if constexpr (std::is_same_v<T, node::LetRec>) {
          for (const auto& c : x.clauses) bound.push_back(c.first);
          for (const auto& c : x.clauses) occurrences(c.second, bound, free);
          occurrences(x.body, bound, free);
          bound.resize(bound.size() - x.clauses.size(), src("_"));
        }
      },
      static_cast<const AstNode::variant&>(t.node()));
}

std::set<Name> scan_free(const Ast& t) {
  std::vector<Name> bound;
  std::set<Name> free;
  occurrences(t, bound, free);
  return free;
}

// Random terms with free variables, for free_vars checks.
Ast open_term(testgen::Rng& rng, int depth) {
  auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
  const char* names[] = {"p", "q", "r", "s"};
  if (depth == 0) return pick(2) ? var(names[pick(4)]) : int_lit(pick(5));
  switch (pick(6)) {
    case 0: return lam(src(names[pick(4)]), open_term(rng, depth - 1));
    case 1: return let(src(names[pick(4)]), open_term(rng, depth - 1), open_term(rng, depth - 1));
    case 2: return app(open_term(rng, depth - 1), open_term(rng, depth - 1));
    case 3: return if_(open_term(rng, depth - 1), open_term(rng, depth - 1), open_term(rng, depth - 1));
    case 4:
      return letrec({{src(names[pick(2)]), open_term(rng, depth - 1)}, {src(names[2 + pick(2)]), open_term(rng, depth - 1)}},
                    open_term(rng, depth - 1));
    default: return add(open_term(rng, depth - 1), succ(open_term(rng, depth - 1)));
  }
}

}  // namespace

TEST_CASE("eval_ast basics") {
  CHECK(eval_ast(add(int_lit(1), int_lit(2))).as_int() == 3);
  CHECK(eval_ast(if_(bool_lit(true), int_lit(1), int_lit(2))).as_int() == 1);
  CHECK(eval_ast(succ(int_lit(41))).as_int() == 42);
  CHECK(eval_ast(eq(int_lit(2), int_lit(2))).as_bool());
  CHECK(eval_ast(div(int_lit(-7), int_lit(2))).as_int() == -3);
  CHECK(eval_ast(var("x"), {{src("x"), Value::integer(5)}}).as_int() == 5);
  CHECK(eval_ast(lam(src("x"), var("x"))).is_function());
}

TEST_CASE("eval_ast on the hand-written programs") {
  CHECK(eval_ast(examples::t1()).as_int() == 3);
  CHECK(apply_ints(eval_ast(examples::sq()), std::vector<std::int64_t>{7}).as_int() == 49);
  for (std::int64_t x = 0; x <= 4; ++x) {
    for (std::int64_t y = 0; y <= 4; ++y) {
      CHECK(apply_ints(eval_ast(examples::gib5()), std::vector<std::int64_t>{x, y}).as_int() == oracle::gib(5, x, y));
    }
  }
  for (std::int64_t n = 0; n <= 6; ++n) {
    CHECK(apply_ints(eval_ast(examples::ack2()), std::vector<std::int64_t>{n}).as_int() == oracle::ackermann(2, n));
  }
}

TEST_CASE("eval_ast shadowing and mutual recursion") {
  CHECK(eval_ast(let(src("x"), int_lit(1), let(src("x"), int_lit(2), var("x")))).as_int() == 2);
  CHECK(eval_ast(app(lam(src("x"), let(src("x"), int_lit(9), var("x"))), int_lit(1))).as_int() == 9);
  // even/odd
  Ast n = var("n");
  Ast even = lam(src("n"), if_(eq(n, int_lit(0)), bool_lit(true), app(var("odd"), sub(n, int_lit(1)))));
  Ast odd = lam(src("n"), if_(eq(n, int_lit(0)), bool_lit(false), app(var("even"), sub(n, int_lit(1)))));
  Ast prog = letrec({{src("even"), even}, {src("odd"), odd}}, app(var("even"), int_lit(7)));
  CHECK_FALSE(eval_ast(prog).as_bool());
}

TEST_CASE("eval_ast errors") {
  CHECK(error_kind([] { eval_ast(var("nope")); }) == ErrorKind::UnboundVariable);
  CHECK(error_kind([] { eval_ast(add(int_lit(1), bool_lit(true))); }) == ErrorKind::TypeMismatch);
  CHECK(error_kind([] { eval_ast(app(int_lit(1), int_lit(2))); }) == ErrorKind::TypeMismatch);
  CHECK(error_kind([] { eval_ast(if_(int_lit(1), int_lit(2), int_lit(3))); }) == ErrorKind::TypeMismatch);
  CHECK(error_kind([] { eval_ast(div(int_lit(1), int_lit(0))); }) == ErrorKind::DivisionByZero);
  // let rec f = fun n -> f n in f 0
  Ast loop = letrec({{src("f"), lam(src("n"), app(var("f"), var("n")))}}, app(var("f"), int_lit(0)));
  CHECK(error_kind([&] { eval_ast(loop, {}, Limits{10'000, 2'000}); }) == ErrorKind::StepLimitExceeded);
  Ast self = letrec({{src("f"), var("f")}}, var("f"));
  CHECK(error_kind([&] { eval_ast(self); }) == ErrorKind::StepLimitExceeded);
}

TEST_CASE("letrec rejects empty and duplicate clauses") {
  CHECK_THROWS_AS(letrec({}, int_lit(0)), std::invalid_argument);
  CHECK_THROWS_AS(letrec({{src("f"), int_lit(1)}, {src("f"), int_lit(2)}}, int_lit(0)), std::invalid_argument);
}

TEST_CASE("pretty and sexp rendering") {
  Ast t = letrec({{src("a"), lam(src("x"), succ(var("x")))}, {src("b"), int_lit(2)}},
                 let(src("y"), if_(eq(var("b"), int_lit(2)), bool_lit(true), bool_lit(false)),
                     app(var("a"), div(mul(var("b"), int_lit(-3)), sub(int_lit(1), int_lit(2))))));
  CHECK(pretty(t) ==
        "(let rec a = (fun x -> (succ x)) and b = 2 in (let y = (if (b = 2) then true else false) in "
        "(a ((b * -3) / (1 - 2)))))");
  CHECK(to_sexp(t) ==
        "(letrec ((a (lam x (succ (var x)))) (b (int 2))) (let y (if (eq (var b) (int 2)) (bool true) (bool false)) "
        "(app (var a) (div (mul (var b) (int -3)) (sub (int 1) (int 2))))))");
  CHECK(pretty(var(Name::fresh(Location{1, 2}))) == "v1_2");
  CHECK(pretty(var(Name::fresh(Location{1, 2}, "x"))) == "x_1_2");
  CHECK(pretty(t) == pretty(t));
  CHECK(to_sexp(t) == to_sexp(t));
}

TEST_CASE("alpha equivalence") {
  CHECK(alpha_eq(lam(src("x"), var("x")), lam(src("y"), var("y"))));
  CHECK_FALSE(alpha_eq(lam(src("x"), var("z")), lam(src("y"), var("y"))));
  CHECK_FALSE(alpha_eq(var("x"), var("y")));
  CHECK(alpha_eq(lam(src("x"), lam(src("y"), var("x"))), lam(src("y"), lam(src("x"), var("y")))));
  CHECK_FALSE(alpha_eq(lam(src("x"), lam(src("y"), var("x"))), lam(src("a"), lam(src("b"), var("b")))));
  CHECK(alpha_eq(letrec({{src("f"), var("g")}, {src("g"), var("f")}}, var("f")),
                 letrec({{src("p"), var("q")}, {src("q"), var("p")}}, var("p"))));
  CHECK_FALSE(alpha_eq(let(src("x"), var("x"), var("x")), let(src("y"), var("y"), var("y"))));
}

TEST_CASE("alpha equivalence is an equivalence relation on random terms") {
  testgen::Rng rng(7);
  int counter = 0;
  std::vector<Ast> corpus;
  for (int i = 0; i < 120; ++i) corpus.push_back(testgen::random_base_term(rng, 4));
  for (const Ast& a : corpus) {
    Ast b = testgen::rename_bound(a, counter);
    Ast c = testgen::rename_bound(b, counter);
    CHECK(alpha_eq(a, a));
    CHECK(alpha_eq(a, b));
    CHECK(alpha_eq(b, a));
    CHECK(alpha_eq(b, c));
    CHECK(alpha_eq(a, c));
    // Alpha-equivalent closed terms evaluate alike.
    Value va = eval_ast(a), vb = eval_ast(b);
    CHECK(va.to_string() == vb.to_string());
  }
  for (std::size_t i = 0; i + 1 < corpus.size(); ++i) {
    if (alpha_eq(corpus[i], corpus[i + 1])) CHECK(alpha_eq(corpus[i + 1], corpus[i]));
  }
}

TEST_CASE("free_vars matches an occurrence scan") {
  testgen::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    Ast t = open_term(rng, 4);
    CHECK(free_vars(t) == scan_free(t));
    std::set<Name> without = free_vars(t);
    without.erase(src("p"));
    CHECK(free_vars(lam(src("p"), t)) == without);
  }
}

TEST_CASE("to_sexp separates distinct trees") {
  testgen::Rng rng(13);
  std::vector<Ast> corpus;
  for (int i = 0; i < 200; ++i) corpus.push_back(open_term(rng, 3));
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = i + 1; j < corpus.size(); ++j) {
      if (to_sexp(corpus[i]) == to_sexp(corpus[j])) CHECK(corpus[i] == corpus[j]);
    }
  }
  CHECK(to_sexp(var(Name::fresh(Location{1}))) != to_sexp(var(Name::fresh(Location{2}))));
}

TEST_CASE("count_lets and binders") {
  Ast t = let(src("a"), let(src("b"), int_lit(1), var("b")), lam(src("c"), letrec({{src("d"), var("d")}}, var("a"))));
  CHECK(count_lets(t) == 2);
  std::vector<Name> want{src("a"), src("b"), src("c"), src("d")};
  CHECK(binders(t) == want);
}
