#include "bck/caps.hpp"

#include <fstream>
#include <sstream>

#include "bck/errors.hpp"

namespace bck {

Caps parse_caps(const std::string& text) {
  Caps caps;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw FormatError("caps line " + std::to_string(lineno) +
                        ": expected key=value");
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    auto strip = [](std::string s) {
      auto a = s.find_first_not_of(" \t");
      auto b = s.find_last_not_of(" \t");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    key = strip(key);
    value = strip(value);
    long long parsed = 0;
    try {
      size_t used = 0;
      parsed = std::stoll(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw FormatError("caps line " + std::to_string(lineno) +
                        ": value for " + key + " is not an integer");
    }
    if (parsed <= 0)
      throw FormatError("caps line " + std::to_string(lineno) +
                        ": " + key + " must be positive");
    if (key == "max_order")
      caps.max_order = static_cast<int>(parsed);
    else if (key == "max_subset_order")
      caps.max_subset_order = static_cast<int>(parsed);
    else if (key == "max_map_candidates")
      caps.max_map_candidates = parsed;
    else if (key == "max_enum_order")
      caps.max_enum_order = static_cast<int>(parsed);
    else
      throw FormatError("caps line " + std::to_string(lineno) +
                        ": unknown key " + key);
  }
  return caps;
}

Caps load_caps_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open caps file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_caps(buf.str());
}

}  // namespace bck
