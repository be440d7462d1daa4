#include "stagelet/value.hpp"

#include "stagelet/error.hpp"

namespace stagelet {

namespace {

const char* tag_name(bool is_int, bool is_bool) {
  if (is_int) return "integer";
  if (is_bool) return "boolean";
  return "function";
}

}  // namespace

std::int64_t Value::as_int() const {
  if (const auto* i = std::get_if<std::int64_t>(&v_)) return *i;
  throw Error(ErrorKind::TypeMismatch, std::string("expected integer, got ") + tag_name(is_int(), is_bool()));
}

bool Value::as_bool() const {
  if (const auto* b = std::get_if<bool>(&v_)) return *b;
  throw Error(ErrorKind::TypeMismatch, std::string("expected boolean, got ") + tag_name(is_int(), is_bool()));
}

Value Value::apply(const Value& argument) const {
  if (const auto* f = std::get_if<FunctionPtr>(&v_)) return (**f)(argument);
  throw Error(ErrorKind::TypeMismatch, std::string("cannot apply ") + tag_name(is_int(), is_bool()));
}

std::string Value::to_string() const {
  if (is_int()) return std::to_string(std::get<std::int64_t>(v_));
  if (is_bool()) return std::get<bool>(v_) ? "true" : "false";
  return "<fun>";
}

namespace arith {

std::int64_t add(std::int64_t a, std::int64_t b) noexcept {
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) + static_cast<std::uint64_t>(b));
}

std::int64_t sub(std::int64_t a, std::int64_t b) noexcept {
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) - static_cast<std::uint64_t>(b));
}

std::int64_t mul(std::int64_t a, std::int64_t b) noexcept {
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(b));
}

std::int64_t div(std::int64_t a, std::int64_t b) {
  if (b == 0) throw Error(ErrorKind::DivisionByZero, std::to_string(a) + " / 0");
  if (b == -1) return sub(0, a);  // INT64_MIN / -1 wraps
  return a / b;
}

}  // namespace arith

StepMeter::Scope StepMeter::step(const char* what) {
  const auto taken = steps_.fetch_add(1, std::memory_order_relaxed) + 1;
  if (taken > limits_.steps) {
    throw Error(ErrorKind::StepLimitExceeded,
                std::string(what) + " after " + std::to_string(limits_.steps) + " steps");
  }
  const auto depth = depth_.fetch_add(1, std::memory_order_relaxed) + 1;
  if (depth > limits_.depth) {
    depth_.fetch_sub(1, std::memory_order_relaxed);
    throw Error(ErrorKind::StepLimitExceeded,
                std::string(what) + " nested deeper than " + std::to_string(limits_.depth) + " levels");
  }
  return Scope(this);
}

}  // namespace stagelet
