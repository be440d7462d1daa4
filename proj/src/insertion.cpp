#include "stagelet/insertion.hpp"

#include <algorithm>
#include <stdexcept>

#include "stagelet/error.hpp"

namespace stagelet {

namespace {

std::string describe_locus(const Location& locus) {
  return locus.is_root() ? std::string("locus <root>") : "locus " + locus.to_string();
}

std::string join_keys(const std::vector<MemoKey>& keys) {
  std::string out;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (i != 0) out += ", ";
    out += std::to_string(keys[i]);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- PerLocus

PerLocus PerLocus::from_parts(Order order, std::map<MemoKey, BindingClass> classes,
                              std::vector<MemoKey> insertion_seq) {
  for (const auto& [a, b] : order) {
    if (!classes.count(a) || !classes.count(b)) throw std::invalid_argument("order mentions an unknown key");
  }
  for (const auto& [k, cls] : classes) {
    if (!order.count({k, k})) throw std::invalid_argument("order is not reflexive at " + std::to_string(k));
    if (cls.aliases.count(cls.name)) throw std::invalid_argument("representative listed among its aliases");
  }
  for (const auto& [a, b] : order) {
    for (const auto& [c, d] : order) {
      if (b == c && !order.count({a, d})) throw std::invalid_argument("order is not transitive");
    }
  }
  std::vector<MemoKey> sorted = insertion_seq;
  std::sort(sorted.begin(), sorted.end());
  std::vector<MemoKey> keys;
  for (const auto& entry : classes) keys.push_back(entry.first);
  if (sorted != keys) throw std::invalid_argument("insertion sequence is not a permutation of the keys");

  PerLocus store;
  store.order_ = std::move(order);
  store.classes_ = std::move(classes);
  store.insertion_seq_ = std::move(insertion_seq);
  return store;
}

bool PerLocus::all_canonical() const {
  return std::all_of(classes_.begin(), classes_.end(), [](const auto& entry) { return entry.second.is_canonical(); });
}

std::size_t PerLocus::position(MemoKey k) const {
  return static_cast<std::size_t>(std::find(insertion_seq_.begin(), insertion_seq_.end(), k) - insertion_seq_.begin());
}

// ---------------------------------------------------------------- VirtualBindings

VirtualBindings VirtualBindings::singleton(const Location& locus, PerLocus store) {
  return VirtualBindings().with(locus, std::move(store));
}

const PerLocus& VirtualBindings::at(const Location& locus) const {
  static const PerLocus empty;
  auto it = stores_.find(locus);
  return it == stores_.end() ? empty : it->second;
}

VirtualBindings VirtualBindings::with(const Location& locus, PerLocus store) const {
  VirtualBindings out = *this;
  if (store.empty()) {
    out.stores_.erase(locus);
  } else {
    out.stores_.insert_or_assign(locus, std::move(store));
  }
  return out;
}

VirtualBindings VirtualBindings::without(const Location& locus) const {
  VirtualBindings out = *this;
  out.stores_.erase(locus);
  return out;
}

// ---------------------------------------------------------------- addb / merge

PerLocus addb(MemoKey key, Name name, BindingRhs rhs, PerLocus store) {
  auto it = store.classes_.find(key);
  if (it != store.classes_.end()) {
    if (name != it->second.name) it->second.aliases.insert(std::move(name));
    return store;
  }
  for (const auto& entry : store.classes_) store.order_.emplace(entry.first, key);
  store.order_.emplace(key, key);
  store.classes_.emplace(key, BindingClass{std::move(name), std::move(rhs), {}});
  store.insertion_seq_.push_back(key);
  return store;
}

PerLocus with_rhs(PerLocus store, MemoKey key, BindingRhs rhs) {
  auto it = store.classes_.find(key);
  if (it == store.classes_.end()) throw std::invalid_argument("no class for key " + std::to_string(key));
  it->second.rhs = std::move(rhs);
  return store;
}

PerLocus merge_class(PerLocus store, MemoKey key, const BindingClass& incoming) {
  auto it = store.classes_.find(key);
  if (it == store.classes_.end()) {
    store = addb(key, incoming.name, incoming.rhs, std::move(store));
    store.classes_.at(key).aliases = incoming.aliases;
    return store;
  }
  BindingClass& existing = it->second;
  existing.aliases.insert(incoming.name);
  existing.aliases.insert(incoming.aliases.begin(), incoming.aliases.end());
  existing.aliases.erase(existing.name);
  if (!existing.is_canonical() && incoming.is_canonical()) existing.rhs = incoming.rhs;
  return store;
}

VirtualBindings merge(const VirtualBindings& left, const VirtualBindings& right) {
  if (right.empty()) return left;
  if (left.empty()) return right;
  VirtualBindings out = left;
  for (const auto& [locus, store] : right.stores()) {
    PerLocus target = out.at(locus);
    for (MemoKey k : ordered_keys(store)) target = merge_class(std::move(target), k, store.classes().at(k));
    out = out.with(locus, std::move(target));
  }
  return out;
}

// ---------------------------------------------------------------- ordered

std::vector<MemoKey> ordered_keys(const PerLocus& store) {
  const auto& order = store.order();
  const auto& seq = store.insertion_seq();
  auto strictly_before = [&](MemoKey a, MemoKey b) { return order.count({a, b}) && !order.count({b, a}); };

  std::vector<MemoKey> out;
  std::vector<bool> emitted(seq.size(), false);
  while (out.size() < seq.size()) {
    bool progressed = false;
    for (std::size_t i = 0; i < seq.size() && !progressed; ++i) {
      if (emitted[i]) continue;
      bool ready = true;
      for (std::size_t j = 0; j < seq.size() && ready; ++j) {
        if (!emitted[j] && j != i && strictly_before(seq[j], seq[i])) ready = false;
      }
      if (ready) {
        emitted[i] = true;
        out.push_back(seq[i]);
        progressed = true;
      }
    }
    // Unreachable for a transitively closed preorder.
    if (!progressed) throw std::logic_error("cyclic strict order among virtual bindings");
  }
  return out;
}

std::vector<BindingClass> ordered(const PerLocus& store) {
  std::vector<BindingClass> out;
  for (MemoKey k : ordered_keys(store)) out.push_back(store.classes().at(k));
  return out;
}

// ---------------------------------------------------------------- subst / bind

Denotation subst(Name rep, std::set<Name> aliases, Denotation body) {
  if (aliases.empty()) return body;
  return Denotation([rep = std::move(rep), aliases = std::move(aliases), body](const Env& env) {
    Env inner = env;
    for (const Name& alias : aliases) inner = inner.alias(alias, rep);
    return body(inner);
  });
}

namespace {

const Denotation& canonical_rhs(const BindingClass& cls) {
  if (const auto* c = std::get_if<Canonical>(&cls.rhs)) return c->code;
  throw Error(ErrorKind::PendingBinding,
              cls.name.render() + " still has an ungenerated right-hand side (genletrec needs with_locus_rec)");
}

}  // namespace

Denotation bind_lets(const Semantics& sem, const std::vector<BindingClass>& classes, Denotation body) {
  for (const auto& cls : classes) canonical_rhs(cls);
  for (auto it = classes.rbegin(); it != classes.rend(); ++it) {
    body = sem.mk_let(it->name, canonical_rhs(*it), subst(it->name, it->aliases, std::move(body)));
  }
  return body;
}

Denotation bind_letrec(const Semantics& sem, const std::vector<BindingClass>& classes, Denotation body) {
  if (classes.empty()) return body;
  auto with_aliases = [&](Denotation d) {
    for (auto it = classes.rbegin(); it != classes.rend(); ++it) d = subst(it->name, it->aliases, std::move(d));
    return d;
  };
  std::vector<std::pair<Name, Denotation>> clauses;
  clauses.reserve(classes.size());
  for (const auto& cls : classes) clauses.emplace_back(cls.name, with_aliases(canonical_rhs(cls)));
  return sem.mk_letrec(std::move(clauses), with_aliases(std::move(body)));
}

// ---------------------------------------------------------------- canon

VirtualBindings canon(VirtualBindings bindings, const Location& locus, std::size_t round_limit) {
  for (std::size_t rounds = 0;; ++rounds) {
    const PerLocus& store = bindings.at(locus);
    std::optional<MemoKey> next;
    std::vector<MemoKey> pending;
    for (MemoKey k : store.insertion_seq()) {
      if (store.classes().at(k).is_canonical()) continue;
      if (!next) next = k;
      pending.push_back(k);
    }
    if (!next) return bindings;
    if (rounds == round_limit) {
      throw Error(ErrorKind::CanonLimitExceeded, describe_locus(locus) + " still pending after " +
                                                     std::to_string(round_limit) + " rounds (keys " +
                                                     join_keys(pending) + ")");
    }
    const Generated forced = std::get<Pending>(store.classes().at(*next).rhs).force();
    PerLocus updated = with_rhs(store, *next, Canonical{forced.code});
    bindings = merge(bindings.with(locus, std::move(updated)), forced.bindings);
  }
}

// ---------------------------------------------------------------- operators

Code genlet(const Locus& locus, MemoKey key, Code code, std::string hint) {
  return Code([l = locus.location(), key, code, hint](const Location& here, const Target& target) {
    Generated rhs = code.at(here.child(2), target);
    Name name = Name::fresh(here, hint);
    PerLocus store = addb(key, name, Canonical{rhs.code}, rhs.bindings.at(l));
    return Generated{target.semantics->mk_var(name), rhs.bindings.with(l, std::move(store))};
  });
}

Code with_locus(std::function<Code(Locus)> body) {
  return Code([body = std::move(body)](const Location& here, const Target& target) {
    Generated inner = body(Locus(here, false)).at(here.child(1), target);
    Denotation placed = bind_lets(*target.semantics, ordered(inner.bindings.at(here)), inner.code);
    return Generated{std::move(placed), inner.bindings.without(here)};
  });
}

Code genletrec(const Locus& locus, MemoKey key, Code code, std::string hint) {
  return Code([l = locus.location(), key, code, hint](const Location& here, const Target& target) {
    Name name = Name::fresh(here, hint);
    PerLocus store = addb(key, name, Pending{code, here.child(2), target}, PerLocus{});
    return Generated{target.semantics->mk_var(name), VirtualBindings::singleton(l, std::move(store))};
  });
}

Code with_locus_rec(std::function<Code(Locus)> body, std::optional<std::size_t> canon_limit) {
  return Code([body = std::move(body), canon_limit](const Location& here, const Target& target) {
    Generated inner = body(Locus(here, true)).at(here.child(1), target);
    VirtualBindings settled = canon(inner.bindings, here, canon_limit.value_or(target.canon_limit));
    const PerLocus& store = settled.at(here);
    std::vector<BindingClass> classes;
    for (MemoKey k : store.insertion_seq()) classes.push_back(store.classes().at(k));
    Denotation placed = bind_letrec(*target.semantics, classes, inner.code);
    return Generated{std::move(placed), settled.without(here)};
  });
}

}  // namespace stagelet
