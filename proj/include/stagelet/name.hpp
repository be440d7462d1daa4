#ifndef STAGELET_NAME_HPP
#define STAGELET_NAME_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <variant>
#include <vector>

namespace stagelet {

// A position in the generator's evaluation tree: the sequence of child
// indices from the root. Stored root-to-leaf; `child(i)` extends the path
// by one step.
class Location {
public:
  Location() = default;
  Location(std::initializer_list<std::uint32_t> root_to_leaf) : path_(root_to_leaf) {}
  explicit Location(std::vector<std::uint32_t> root_to_leaf) : path_(std::move(root_to_leaf)) {}

  Location child(std::uint32_t index) const;

  const std::vector<std::uint32_t>& path() const noexcept { return path_; }
  bool is_root() const noexcept { return path_.empty(); }

  // Path elements joined by '_', e.g. "1_2". Empty for the root.
  std::string to_string() const;

  friend bool operator==(const Location&, const Location&) = default;
  friend auto operator<=>(const Location&, const Location&) = default;

private:
  std::vector<std::uint32_t> path_;
};

// A generator-created name. Identity is the Location alone; the hint only
// affects rendering.
struct FreshName {
  Location location;
  std::string hint;

  friend bool operator==(const FreshName& a, const FreshName& b) { return a.location == b.location; }
  friend auto operator<=>(const FreshName& a, const FreshName& b) { return a.location <=> b.location; }
};

class Name {
public:
  static Name source(std::string text) { return Name(std::move(text)); }
  static Name fresh(Location location, std::string hint = {}) {
    return Name(FreshName{std::move(location), std::move(hint)});
  }

  bool is_fresh() const noexcept { return std::holds_alternative<FreshName>(value_); }
  bool is_source() const noexcept { return !is_fresh(); }

  const std::string& source_text() const { return std::get<std::string>(value_); }
  const FreshName& fresh_name() const { return std::get<FreshName>(value_); }

  // Source names render verbatim; fresh names as `v1_2` or `hint_1_2`.
  std::string render() const;

  friend bool operator==(const Name&, const Name&) = default;
  // Source names order before fresh names.
  friend auto operator<=>(const Name&, const Name&) = default;

private:
  explicit Name(std::string text) : value_(std::move(text)) {}
  explicit Name(FreshName fresh) : value_(std::move(fresh)) {}

  std::variant<std::string, FreshName> value_;
};

}  // namespace stagelet

#endif  // STAGELET_NAME_HPP
