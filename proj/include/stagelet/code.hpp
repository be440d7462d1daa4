#ifndef STAGELET_CODE_HPP
#define STAGELET_CODE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <utility>
#include <variant>
#include <vector>

#include "stagelet/name.hpp"
#include "stagelet/semantics.hpp"

namespace stagelet {

// Order in which a combinator evaluates its children. Generation is pure, so
// the choice is never observable in the result; it exists to test that.
enum class ChildOrder { LeftToRight, RightToLeft };

inline constexpr std::size_t default_canon_limit = 10'000;

// How a code value is being interpreted. `semantics` builds the
// denotations; `order` is the order children are visited in; `canon_limit`
// bounds the forcings a letrec locus may take to canonicalize.
struct Target {
  const Semantics* semantics = &show_semantics();
  ChildOrder order = ChildOrder::LeftToRight;
  std::size_t canon_limit = default_canon_limit;
};

struct Generated;

// A code value: a deterministic map from a tree Location to a denotation
// paired with the virtual bindings it still carries.
class Code {
public:
  using Fn = std::function<Generated(const Location&, const Target&)>;

  explicit Code(Fn fn);

  Generated at(const Location& location, const Target& target) const;

private:
  std::shared_ptr<const Fn> fn_;
};

using MemoKey = std::int64_t;

// A right-hand side that was already generated.
struct Canonical {
  Denotation code;
};

// A letrec right-hand side that has not been generated yet: the generator
// together with the Location and Target it will be forced at.
struct Pending {
  Code generator;
  Location anchor;
  Target target;

  Generated force() const;
};

using BindingRhs = std::variant<Canonical, Pending>;

// One equivalence class of virtual bindings: the representative name, the
// right-hand side, and the other names that must be replaced by it.
struct BindingClass {
  Name name;
  BindingRhs rhs;
  std::set<Name> aliases;

  bool is_canonical() const noexcept { return std::holds_alternative<Canonical>(rhs); }
};

// Virtual bindings destined for one locus.
class PerLocus {
public:
  using Order = std::set<std::pair<MemoKey, MemoKey>>;

  PerLocus() = default;

  // Builds a store from raw parts. Throws std::invalid_argument unless
  // `order` is a preorder over exactly the keys of `classes`, no class lists
  // its representative among its aliases, and `insertion_seq` is a
  // permutation of those keys.
  static PerLocus from_parts(Order order, std::map<MemoKey, BindingClass> classes,
                             std::vector<MemoKey> insertion_seq);

  const Order& order() const noexcept { return order_; }
  const std::map<MemoKey, BindingClass>& classes() const noexcept { return classes_; }
  const std::vector<MemoKey>& insertion_seq() const noexcept { return insertion_seq_; }

  bool empty() const noexcept { return classes_.empty(); }
  bool contains(MemoKey k) const { return classes_.count(k) != 0; }
  bool all_canonical() const;

  // Insertion-sequence position of `k`; `k` must be present.
  std::size_t position(MemoKey k) const;

private:
  friend PerLocus addb(MemoKey, Name, BindingRhs, PerLocus);
  friend PerLocus with_rhs(PerLocus, MemoKey, BindingRhs);
  friend PerLocus merge_class(PerLocus, MemoKey, const BindingClass&);

  Order order_;
  std::map<MemoKey, BindingClass> classes_;
  std::vector<MemoKey> insertion_seq_;
};

// Per-locus stores, keyed by the locus Location. Absent loci read as empty;
// empty stores are never kept.
class VirtualBindings {
public:
  VirtualBindings() = default;

  static VirtualBindings singleton(const Location& locus, PerLocus store);

  const PerLocus& at(const Location& locus) const;
  bool empty() const noexcept { return stores_.empty(); }
  const std::map<Location, PerLocus>& stores() const noexcept { return stores_; }

  // Replaces the store for `locus` (erasing it when `store` is empty).
  VirtualBindings with(const Location& locus, PerLocus store) const;
  // ν restricted to every locus other than `locus`.
  VirtualBindings without(const Location& locus) const;

private:
  std::map<Location, PerLocus> stores_;
};

struct Generated {
  Denotation code;
  VirtualBindings bindings;
};

inline Code::Code(Fn fn) : fn_(std::make_shared<const Fn>(std::move(fn))) {}

inline Generated Code::at(const Location& location, const Target& target) const { return (*fn_)(location, target); }

inline Generated Pending::force() const { return generator.at(anchor, target); }

}  // namespace stagelet

#endif  // STAGELET_CODE_HPP
