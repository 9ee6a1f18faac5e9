#include "bck/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace bck {

namespace {

// Line-oriented reader that skips blank lines and strips trailing CR.
class Lines {
 public:
  explicit Lines(const std::string& text) : in_(text) {}

  bool next(std::string& out) {
    std::string line;
    while (std::getline(in_, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") == std::string::npos) continue;
      out = line;
      return true;
    }
    return false;
  }

 private:
  std::istringstream in_;
};

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

int parse_int(const std::string& t, const std::string& what) {
  try {
    size_t used = 0;
    int v = std::stoi(t, &used);
    if (used != t.size()) throw std::invalid_argument(t);
    return v;
  } catch (const std::exception&) {
    throw FormatError("expected an integer for " + what + ", got '" + t + "'");
  }
}

std::vector<int> parse_row(const std::string& line, int n, const std::string& what) {
  auto ts = tokens(line);
  if (static_cast<int>(ts.size()) != n)
    throw FormatError(what + ": expected " + std::to_string(n) +
                      " entries, got " + std::to_string(ts.size()));
  std::vector<int> row(n);
  for (int i = 0; i < n; ++i) row[i] = parse_int(ts[i], what);
  return row;
}

// Shared header handling for the two table formats ("bck" / "mv").
struct Header {
  int order = 0;
  std::string name;
};

Header parse_header(Lines& lines, const std::string& magic, std::string& first_row) {
  std::string line;
  if (!lines.next(line)) throw FormatError("empty input");
  auto ts = tokens(line);
  if (ts.size() != 2 || ts[0] != magic || ts[1] != "1")
    throw FormatError("expected magic line '" + magic + " 1'");
  if (!lines.next(line)) throw FormatError("missing order line");
  ts = tokens(line);
  if (ts.size() != 2 || ts[0] != "order")
    throw FormatError("expected 'order <n>'");
  Header h;
  h.order = parse_int(ts[1], "order");
  if (h.order <= 0) throw FormatError("order must be positive");
  if (!lines.next(line)) throw FormatError("missing table rows");
  if (tokens(line)[0] == "name") {
    h.name = line.substr(line.find("name") + 4);
    auto a = h.name.find_first_not_of(" \t");
    h.name = a == std::string::npos ? std::string() : h.name.substr(a);
    if (!lines.next(line)) throw FormatError("missing table rows");
  }
  first_row = line;
  return h;
}

}  // namespace

RawTable parse_algebra_text(const std::string& text) {
  Lines lines(text);
  std::string row_line;
  Header h = parse_header(lines, "bck", row_line);
  RawTable raw;
  raw.order = h.order;
  raw.name = h.name;
  raw.table.reserve(h.order * h.order);
  for (int r = 0; r < h.order; ++r) {
    if (r > 0 && !lines.next(row_line))
      throw FormatError("table row " + std::to_string(r) + " missing");
    auto row = parse_row(row_line, h.order, "table row " + std::to_string(r));
    raw.table.insert(raw.table.end(), row.begin(), row.end());
  }
  std::string extra;
  if (lines.next(extra)) throw FormatError("unexpected trailing line: " + extra);
  return raw;
}

std::string emit_algebra_text(const RawTable& raw) {
  std::ostringstream os;
  os << "bck 1\norder " << raw.order << "\n";
  if (!raw.name.empty()) os << "name " << raw.name << "\n";
  for (int x = 0; x < raw.order; ++x) {
    for (int y = 0; y < raw.order; ++y) os << (y ? " " : "") << raw.at(x, y);
    os << "\n";
  }
  return os.str();
}

RawTable parse_algebra_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("order") || !j.contains("table"))
    throw FormatError("JSON algebra needs 'order' and 'table'");
  RawTable raw;
  try {
    raw.order = j.at("order").get<int>();
    if (j.contains("name")) raw.name = j.at("name").get<std::string>();
    const auto& t = j.at("table");
    if (!t.is_array()) throw FormatError("'table' must be an array");
    if (!t.empty() && t[0].is_array()) {
      for (const auto& row : t)
        for (const auto& v : row) raw.table.push_back(v.get<int>());
    } else {
      for (const auto& v : t) raw.table.push_back(v.get<int>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad JSON algebra: ") + e.what());
  }
  return raw;
}

std::string emit_algebra_json(const RawTable& raw) {
  nlohmann::json j;
  j["order"] = raw.order;
  auto rows = nlohmann::json::array();
  for (int x = 0; x < raw.order; ++x) {
    auto row = nlohmann::json::array();
    for (int y = 0; y < raw.order; ++y) row.push_back(raw.at(x, y));
    rows.push_back(row);
  }
  j["table"] = rows;
  if (!raw.name.empty()) j["name"] = raw.name;
  return j.dump(2) + "\n";
}

RawTable parse_algebra_auto(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return parse_algebra_json(text);
  return parse_algebra_text(text);
}

UnaryMap parse_map_text(const std::string& text) {
  Lines lines(text);
  std::string line;
  if (!lines.next(line)) throw FormatError("empty map input");
  auto ts = tokens(line);
  if (ts.size() < 2 || ts[0] != "map")
    throw FormatError("expected 'map <n> v0 ... v(n-1)'");
  int n = parse_int(ts[1], "map size");
  if (n <= 0) throw FormatError("map size must be positive");
  if (static_cast<int>(ts.size()) != n + 2)
    throw FormatError("map line: expected " + std::to_string(n) +
                      " values, got " + std::to_string(ts.size() - 2));
  std::vector<int> values(n);
  for (int i = 0; i < n; ++i) values[i] = parse_int(ts[i + 2], "map value");
  std::string extra;
  if (lines.next(extra)) throw FormatError("unexpected trailing line: " + extra);
  return UnaryMap(std::move(values));
}

std::string emit_map_text(const UnaryMap& map) {
  std::ostringstream os;
  os << "map " << map.domain();
  for (int v : map.values) os << " " << v;
  os << "\n";
  return os.str();
}

RawMv parse_mv_text(const std::string& text) {
  Lines lines(text);
  std::string row_line;
  Header h = parse_header(lines, "mv", row_line);
  RawMv raw;
  raw.order = h.order;
  raw.name = h.name;
  for (int r = 0; r < h.order; ++r) {
    if (r > 0 && !lines.next(row_line))
      throw FormatError("oplus row " + std::to_string(r) + " missing");
    auto row = parse_row(row_line, h.order, "oplus row " + std::to_string(r));
    raw.oplus.insert(raw.oplus.end(), row.begin(), row.end());
  }
  std::string line;
  if (!lines.next(line)) throw FormatError("missing 'neg' row");
  auto ts = tokens(line);
  if (ts.empty() || ts[0] != "neg")
    throw FormatError("expected 'neg v0 ... v(n-1)'");
  if (static_cast<int>(ts.size()) != h.order + 1)
    throw FormatError("neg row: expected " + std::to_string(h.order) + " values");
  for (int i = 0; i < h.order; ++i)
    raw.neg.push_back(parse_int(ts[i + 1], "neg value"));
  std::string extra;
  if (lines.next(extra)) throw FormatError("unexpected trailing line: " + extra);
  return raw;
}

std::string emit_mv_text(const RawMv& raw) {
  std::ostringstream os;
  os << "mv 1\norder " << raw.order << "\n";
  if (!raw.name.empty()) os << "name " << raw.name << "\n";
  for (int x = 0; x < raw.order; ++x) {
    for (int y = 0; y < raw.order; ++y) os << (y ? " " : "") << raw.at(x, y);
    os << "\n";
  }
  os << "neg";
  for (int v : raw.neg) os << " " << v;
  os << "\n";
  return os.str();
}

std::string emit_ideal_line(const ElementSet& s) {
  std::ostringstream os;
  os << "ideal " << s.size();
  for (int e : s.elements()) os << " " << e;
  os << "\n";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write file: " + path);
  out << content;
}

RawTable load_algebra_file(const std::string& path) {
  return parse_algebra_auto(read_file(path));
}

UnaryMap load_map_file(const std::string& path) {
  return parse_map_text(read_file(path));
}

RawMv load_mv_file(const std::string& path) {
  return parse_mv_text(read_file(path));
}

}  // namespace bck
