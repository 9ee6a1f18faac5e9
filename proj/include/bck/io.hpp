#pragma once

#include <string>

#include "bck/core.hpp"

namespace bck {

// Unchecked MV-style table: a binary "oplus" plus a unary negation.
struct RawMv {
  int order = 0;
  std::vector<int> oplus;  // row-major
  std::vector<int> neg;
  std::string name;

  int at(int x, int y) const { return oplus[x * order + y]; }
  int& at(int x, int y) { return oplus[x * order + y]; }
};

// Text format, one algebra per file:
//   bck 1
//   order <n>
//   name <label>        (optional)
//   <n rows of n integers>
RawTable parse_algebra_text(const std::string& text);
std::string emit_algebra_text(const RawTable& raw);

// JSON mirror: {"order": n, "table": [[...], ...], "name": "..."} with the
// name optional; a flat table of n^2 entries is also accepted.
RawTable parse_algebra_json(const std::string& text);
std::string emit_algebra_json(const RawTable& raw);

// Dispatches on the leading token ("{" selects JSON).
RawTable parse_algebra_auto(const std::string& text);

// Unary maps serialize as a single line:  map <n> v0 v1 ... v(n-1)
UnaryMap parse_map_text(const std::string& text);
std::string emit_map_text(const UnaryMap& map);

// MV text format:
//   mv 1
//   order <n>
//   name <label>        (optional)
//   <n rows of n integers>       (the oplus table)
//   neg v0 v1 ... v(n-1)
RawMv parse_mv_text(const std::string& text);
std::string emit_mv_text(const RawMv& raw);

// Ideal list line:  ideal <k> e1 ... ek   (ascending members)
std::string emit_ideal_line(const ElementSet& s);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

RawTable load_algebra_file(const std::string& path);
UnaryMap load_map_file(const std::string& path);
RawMv load_mv_file(const std::string& path);

}  // namespace bck
