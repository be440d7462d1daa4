#ifndef STAGELET_EXAMPLES_HPP
#define STAGELET_EXAMPLES_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stagelet/ast.hpp"
#include "stagelet/code.hpp"

namespace stagelet {

enum class ExampleKind { BaseProgram, Generator, GeneratorExpectExtrusion };

std::string_view to_string(ExampleKind kind) noexcept;

struct ExampleEntry {
  std::string name;
  ExampleKind kind;
  // Integer arguments the program (or the generated code) takes.
  std::size_t arity;
  // For generators: the hand-written program it should agree with, if any.
  std::string counterpart;
  std::function<Ast()> program;     // BaseProgram only
  std::function<Code()> generator;  // generators only

  bool is_generator() const noexcept { return kind != ExampleKind::BaseProgram; }
};

// Sorted by name.
const std::vector<ExampleEntry>& registry();
const ExampleEntry* find_example(std::string_view name);

// Applies `v` to each argument in turn. Throws TypeMismatch when a
// non-function is applied.
Value apply_ints(Value v, std::span<const std::int64_t> args);

namespace examples {

// Hand-written Base programs.
Ast t1();
Ast sq();
Ast gib5();
Ast ack2();

// Generators.
Code ct1();
Code csq();
Code cgib5();
Code clet_intro();
Code clgib5();
Code clgib5_extruded();
Code shared_sums_plain();
Code shared_sums();
Code cack2();

}  // namespace examples

}  // namespace stagelet

#endif  // STAGELET_EXAMPLES_HPP
