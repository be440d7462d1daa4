#include "stagelet/examples.hpp"

#include <algorithm>

#include "stagelet/codec.hpp"
#include "stagelet/insertion.hpp"

namespace stagelet {

std::string_view to_string(ExampleKind kind) noexcept {
  switch (kind) {
    case ExampleKind::BaseProgram: return "program";
    case ExampleKind::Generator: return "generator";
    case ExampleKind::GeneratorExpectExtrusion: return "generator-extrudes";
  }
  return "?";
}

namespace examples {

namespace {

Name src(const char* text) { return Name::source(text); }

// Fibonacci-style unrolling shared by cgib5 and its let-inserting variants.
Code unrolled_loop(int n, const Code& x, const Code& y) {
  if (n == 0) return x;
  if (n == 1) return y;
  return cadd(unrolled_loop(n - 1, x, y), unrolled_loop(n - 2, x, y));
}

Code shared_loop(const Locus& l, int n, const Code& x, const Code& y) {
  if (n == 0) return x;
  if (n == 1) return y;
  return cadd(genlet(l, n - 1, shared_loop(l, n - 1, x, y)), genlet(l, n - 2, shared_loop(l, n - 2, x, y)));
}

// The Ackermann generator specialized to a host-level first argument.
Code ack(const Locus& l, std::int64_t m) {
  if (m == 0) return clam([](Code n) { return cadd(n, cint(1)); }, "n");
  return clam(
      [l, m](Code n) {
        return cif(ceq(n, cint(0)), capp(genletrec(l, m - 1, ack(l, m - 1), "ack"), cint(1)),
                   capp(genletrec(l, m - 1, ack(l, m - 1), "ack"),
                        capp(genletrec(l, m, ack(l, m), "ack"), csub(n, cint(1)))));
      },
      "n");
}

}  // namespace

Ast t1() { return ast::add(ast::int_lit(1), ast::int_lit(2)); }

Ast sq() { return ast::lam(src("x"), ast::mul(ast::var("x"), ast::var("x"))); }

Ast gib5() {
  using namespace ast;
  Ast n = var("n");
  Ast loop_body = if_(eq(n, int_lit(0)), var("x"),
                      if_(eq(n, int_lit(1)), var("y"),
                          add(app(var("loop"), sub(n, int_lit(1))), app(var("loop"), sub(n, int_lit(2))))));
  return lam(src("x"), lam(src("y"), letrec({{src("loop"), lam(src("n"), loop_body)}}, app(var("loop"), int_lit(5)))));
}

Ast ack2() {
  using namespace ast;
  Ast m = var("m");
  Ast n = var("n");
  Ast ack = var("ack");
  Ast body = if_(eq(m, int_lit(0)), add(n, int_lit(1)),
                 if_(eq(n, int_lit(0)), app(app(ack, sub(m, int_lit(1))), int_lit(1)),
                     app(app(ack, sub(m, int_lit(1))), app(app(ack, m), sub(n, int_lit(1))))));
  return letrec({{src("ack"), lam(src("m"), lam(src("n"), body))}}, app(ack, int_lit(2)));
}

Code ct1() { return cadd(cint(1), cint(2)); }

Code csq() {
  return clam([](Code x) { return cmul(x, x); }, "x");
}

Code cgib5() {
  return clam([](Code x) { return clam([x](Code y) { return unrolled_loop(5, x, y); }, "y"); }, "x");
}

Code clet_intro() {
  return clam([](Code x) { return clet(ct1(), [x](Code y) { return cadd(x, y); }, "y"); }, "x");
}

Code clgib5() {
  return clam(
      [](Code x) {
        return clam([x](Code y) { return with_locus([x, y](Locus l) { return shared_loop(l, 5, x, y); }); }, "y");
      },
      "x");
}

// The locus sits above the inner abstraction, so bindings mentioning `y`
// escape its scope.
Code clgib5_extruded() {
  return clam(
      [](Code x) {
        return with_locus([x](Locus l) { return clam([x, l](Code y) { return shared_loop(l, 5, x, y); }, "y"); });
      },
      "x");
}

Code shared_sums_plain() {
  return with_locus([](Locus) {
    return share(cadd(cint(6), cint(7)), [](Code x) {
      return cdiv(cmul(cadd(x, cint(20)), cadd(x, cint(30))), cint(100));
    });
  });
}

Code shared_sums() {
  return with_locus([](Locus l) {
    return share(genlet(l, 1, cadd(cint(6), cint(7))), [l](Code x) {
      return cdiv(cmul(genlet(l, 2, cadd(x, cint(20))), genlet(l, 3, cadd(x, cint(30)))), cint(100));
    });
  });
}

Code cack2() {
  return with_locus_rec([](Locus l) { return genletrec(l, 2, ack(l, 2), "ack"); });
}

}  // namespace examples

const std::vector<ExampleEntry>& registry() {
  static const std::vector<ExampleEntry> entries = [] {
    using K = ExampleKind;
    std::vector<ExampleEntry> v = {
        {"t1", K::BaseProgram, 0, "", examples::t1, nullptr},
        {"sq", K::BaseProgram, 1, "", examples::sq, nullptr},
        {"gib5", K::BaseProgram, 2, "", examples::gib5, nullptr},
        {"ack2", K::BaseProgram, 1, "", examples::ack2, nullptr},
        {"ct1", K::Generator, 0, "t1", nullptr, examples::ct1},
        {"csq", K::Generator, 1, "sq", nullptr, examples::csq},
        {"cgib5", K::Generator, 2, "gib5", nullptr, examples::cgib5},
        {"clet-intro", K::Generator, 1, "", nullptr, examples::clet_intro},
        {"clgib5", K::Generator, 2, "gib5", nullptr, examples::clgib5},
        {"clgib5-extruded", K::GeneratorExpectExtrusion, 2, "", nullptr, examples::clgib5_extruded},
        {"shared-sums-plain", K::Generator, 0, "", nullptr, examples::shared_sums_plain},
        {"shared-sums", K::Generator, 0, "", nullptr, examples::shared_sums},
        {"cack2", K::Generator, 1, "ack2", nullptr, examples::cack2},
    };
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    return v;
  }();
  return entries;
}

const ExampleEntry* find_example(std::string_view name) {
  for (const auto& entry : registry()) {
    if (entry.name == name) return &entry;
  }
  return nullptr;
}

Value apply_ints(Value v, std::span<const std::int64_t> args) {
  for (std::int64_t a : args) v = v.apply(Value::integer(a));
  return v;
}

}  // namespace stagelet
