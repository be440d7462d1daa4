#ifndef STAGELET_VALUE_HPP
#define STAGELET_VALUE_HPP

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <variant>

namespace stagelet {

// Run-time value of the R semantics. Bottom is not a value: divergence
// surfaces as a StepLimitExceeded error instead.
class Value {
public:
  using Function = std::function<Value(const Value&)>;

  static Value integer(std::int64_t i) { return Value(i); }
  static Value boolean(bool b) { return Value(b); }
  static Value function(Function f) { return Value(std::make_shared<const Function>(std::move(f))); }

  bool is_int() const noexcept { return std::holds_alternative<std::int64_t>(v_); }
  bool is_bool() const noexcept { return std::holds_alternative<bool>(v_); }
  bool is_function() const noexcept { return std::holds_alternative<FunctionPtr>(v_); }

  // These throw TypeMismatch on the wrong tag.
  std::int64_t as_int() const;
  bool as_bool() const;
  Value apply(const Value& argument) const;

  // The CLI's printed form; functions print as `<fun>`.
  std::string to_string() const;

  // Functions compare by identity.
  friend bool operator==(const Value& a, const Value& b) { return a.v_ == b.v_; }

private:
  using FunctionPtr = std::shared_ptr<const Function>;
  explicit Value(std::int64_t i) : v_(i) {}
  explicit Value(bool b) : v_(b) {}
  explicit Value(FunctionPtr f) : v_(std::move(f)) {}

  std::variant<std::int64_t, bool, FunctionPtr> v_;
};

// Integer primitives shared by every evaluator. Overflow wraps; division
// truncates toward zero.
namespace arith {
std::int64_t add(std::int64_t a, std::int64_t b) noexcept;
std::int64_t sub(std::int64_t a, std::int64_t b) noexcept;
std::int64_t mul(std::int64_t a, std::int64_t b) noexcept;
std::int64_t div(std::int64_t a, std::int64_t b);  // throws DivisionByZero
}  // namespace arith

struct Limits {
  std::uint64_t steps = 1'000'000;
  // Bounds host recursion so runaway object-level recursion reports
  // StepLimitExceeded instead of exhausting the native stack.
  std::uint32_t depth = 2'000;
};

// Shared budget for one evaluation. Function values keep a reference to the
// meter of the evaluation that created them.
class StepMeter {
public:
  explicit StepMeter(Limits limits) : limits_(limits) {}

  class Scope {
  public:
    explicit Scope(StepMeter* meter) : meter_(meter) {}
    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;
    ~Scope() {
      if (meter_ != nullptr) meter_->depth_.fetch_sub(1, std::memory_order_relaxed);
    }

  private:
    StepMeter* meter_;
  };

  // Counts one beta or recursive-binding step and one level of nesting for
  // the lifetime of the returned scope.
  [[nodiscard]] Scope step(const char* what);
  // As `step`, but a null meter counts nothing.
  [[nodiscard]] static Scope step(StepMeter* meter, const char* what) {
    return meter == nullptr ? Scope(nullptr) : meter->step(what);
  }

  std::uint64_t steps_taken() const noexcept { return steps_.load(std::memory_order_relaxed); }
  const Limits& limits() const noexcept { return limits_; }

private:
  Limits limits_;
  std::atomic<std::uint64_t> steps_{0};
  std::atomic<std::uint32_t> depth_{0};
};

}  // namespace stagelet

#endif  // STAGELET_VALUE_HPP
