#pragma once

#include <string>

namespace bck {

// Resource caps for the exhaustive scans. Every cap-gated operation takes a
// Caps argument; defaults keep all loops at desk scale.
struct Caps {
  int max_order = 4096;                       // largest constructible carrier (products, diagonals)
  int max_subset_order = 20;                  // largest order for 2^(n-1) subset scans
  long long max_map_candidates = 100000000;   // largest n^n candidate space for operator search
  int max_enum_order = 6;                     // largest order for exhaustive table enumeration
};

// Flat key=value format, one pair per line; '#' starts a comment.
// Unknown keys are rejected so typos cannot silently leave a default in place.
Caps parse_caps(const std::string& text);
Caps load_caps_file(const std::string& path);

}  // namespace bck
