#ifndef STAGELET_INSERTION_HPP
#define STAGELET_INSERTION_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "stagelet/code.hpp"

namespace stagelet {

// Adds the binding of `name` to `rhs` to class `key`. An existing class
// keeps its right-hand side and gains `name` as an alias; a new class
// becomes the latest in the preorder.
PerLocus addb(MemoKey key, Name name, BindingRhs rhs, PerLocus store);

// Replaces the right-hand side of class `key`, which must exist.
PerLocus with_rhs(PerLocus store, MemoKey key, BindingRhs rhs);

// Adds a whole class into `store`. On a key collision the alias sets are
// united (the incoming representative joins them) and the kept right-hand
// side is the first Canonical one, else the existing Pending one.
PerLocus merge_class(PerLocus store, MemoKey key, const BindingClass& incoming);

// Adds every class of `right` into `left`, per locus, in `ordered` order.
VirtualBindings merge(const VirtualBindings& left, const VirtualBindings& right);

// The classes in an order consistent with the preorder; incomparable and
// mutually ordered keys keep their insertion order.
std::vector<BindingClass> ordered(const PerLocus& store);

// The keys of `ordered(store)`.
std::vector<MemoKey> ordered_keys(const PerLocus& store);

// `body` applied to the environment where every alias means what `rep`
// means.
Denotation subst(Name rep, std::set<Name> aliases, Denotation body);

// Nested lets, first class outermost. Throws PendingBinding on a Pending
// class.
Denotation bind_lets(const Semantics& sem, const std::vector<BindingClass>& classes, Denotation body);

// A single letrec over all classes. Throws PendingBinding on a Pending
// class; returns `body` untouched when there are no classes.
Denotation bind_letrec(const Semantics& sem, const std::vector<BindingClass>& classes, Denotation body);

// Forces Pending classes at `locus`, earliest first, merging whatever
// bindings they produce, until every class there is Canonical. Throws
// CanonLimitExceeded after `round_limit` forcings.
VirtualBindings canon(VirtualBindings bindings, const Location& locus, std::size_t round_limit = default_canon_limit);

// A place in the generated code where requested bindings materialize.
// Only with_locus / with_locus_rec create one.
class Locus {
public:
  const Location& location() const noexcept { return location_; }
  bool recursive() const noexcept { return recursive_; }

private:
  friend Code with_locus(std::function<Code(Locus)>);
  friend Code with_locus_rec(std::function<Code(Locus)>, std::optional<std::size_t>);
  Locus(Location location, bool recursive) : location_(std::move(location)), recursive_(recursive) {}

  Location location_;
  bool recursive_;
};

// Requests `let v = code in` at `locus`, shared with every earlier request
// for the same key there, and yields the code of `v`.
Code genlet(const Locus& locus, MemoKey key, Code code, std::string hint = {});

// Places every binding requested for its locus as nested lets around the
// body.
Code with_locus(std::function<Code(Locus)> body);

// Like genlet, but `code` is not generated until the enclosing
// with_locus_rec canonicalizes, so it may request itself.
Code genletrec(const Locus& locus, MemoKey key, Code code, std::string hint = {});

// Canonicalizes the bindings for its locus and places them as one letrec
// around the body. Without an explicit limit, the target's applies.
Code with_locus_rec(std::function<Code(Locus)> body, std::optional<std::size_t> canon_limit = std::nullopt);

}  // namespace stagelet

#endif  // STAGELET_INSERTION_HPP
