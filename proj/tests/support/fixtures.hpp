#pragma once

#include "posethom/space.hpp"

#include <string>

namespace fixture {

// {a,b,c; U1={a,c}, U2={b,c}}
inline posethom::RawSpace e1_raw() { return {{"a", "b", "c"}, {{"U1", {"a", "c"}}, {"U2", {"b", "c"}}}}; }

// One point p_S per nonempty S of {1,2,3}, U_i = {p_S : i in S}.
inline posethom::RawSpace e3_raw() {
  posethom::RawSpace raw;
  raw.cover = {{"U1", {}}, {"U2", {}}, {"U3", {}}};
  for (int m = 1; m < 8; ++m) {
    std::string name = "p";
    for (int i = 0; i < 3; ++i) {
      if (m >> i & 1) name += std::to_string(i + 1);
    }
    raw.points.push_back(name);
    for (int i = 0; i < 3; ++i) {
      if (m >> i & 1) raw.cover[static_cast<std::size_t>(i)].second.push_back(name);
    }
  }
  return raw;
}

inline posethom::StructuredSpace e1() { return posethom::validate_space(e1_raw()); }
inline posethom::StructuredSpace e3() { return posethom::validate_space(e3_raw()); }

// Proper part of the Boolean lattice on three atoms.
inline posethom::Poset hexagon() {
  return posethom::folkman_trim(posethom::quotient_poset(e3()).poset, posethom::Extremum::Max);
}

inline posethom::Poset chain_poset(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> less;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::string(1, static_cast<char>('a' + i)));
    if (i > 0) less.emplace_back(i - 1, i);
  }
  return posethom::Poset::from_relations(names, less);
}

inline posethom::Poset antichain(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return posethom::Poset::from_relations(names, {});
}

// x < 1
inline posethom::Poset two_chain() { return posethom::Poset::from_relations({"x", "1"}, {{0, 1}}); }

}  // namespace fixture
