#pragma once

#include <algorithm>
#include <string>

#include "json.hpp"

namespace plstab {

namespace detail {

inline bool flat_json(const nlohmann::ordered_json& j) {
  if (j.is_object()) return j.empty();
  if (!j.is_array()) return true;
  return std::all_of(j.begin(), j.end(), [](const auto& e) { return !e.is_object() && flat_json(e); });
}

// Objects one key per line; arrays without objects inside stay on one line.
inline void pretty_json(const nlohmann::ordered_json& j, std::string& out, int depth) {
  const std::string pad(2 * (depth + 1), ' ');
  if (flat_json(j)) {
    out += j.dump();
  } else if (j.is_object()) {
    out += "{\n";
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      if (!first) out += ",\n";
      first = false;
      out += pad + nlohmann::ordered_json(k).dump() + ": ";
      pretty_json(v, out, depth + 1);
    }
    out += "\n" + std::string(2 * depth, ' ') + "}";
  } else {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ",\n";
      out += pad;
      pretty_json(j[i], out, depth + 1);
    }
    out += "\n" + std::string(2 * depth, ' ') + "]";
  }
}

}  // namespace detail

/// Newline-terminated.
inline std::string pretty_json(const nlohmann::ordered_json& j) {
  std::string out;
  detail::pretty_json(j, out, 0);
  return out + "\n";
}

}  // namespace plstab
