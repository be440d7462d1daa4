#include "stagelet/name.hpp"

namespace stagelet {

Location Location::child(std::uint32_t index) const {
  std::vector<std::uint32_t> path = path_;
  path.push_back(index);
  return Location(std::move(path));
}

std::string Location::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < path_.size(); ++i) {
    if (i != 0) out += '_';
    out += std::to_string(path_[i]);
  }
  return out;
}

std::string Name::render() const {
  if (is_source()) return source_text();
  const FreshName& fresh = fresh_name();
  std::string path = fresh.location.to_string();
  if (fresh.hint.empty()) return "v" + path;
  if (path.empty()) return fresh.hint;
  return fresh.hint + "_" + path;
}

}  // namespace stagelet
