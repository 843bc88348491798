#pragma once

#include "p3hc/graph.hpp"

#include <cstdint>
#include <vector>

namespace p3hc {

// The eight vertex-star types of a P3 tiling, plus Incomplete for stars
// clipped by the patch boundary. Sun and star share the corner geometry
// (five 72-degree thick corners) and are told apart by the decoration.
enum class AtlasClass : std::uint8_t {
  Incomplete,
  Kite,
  Deuce,
  Jack,
  Ace,
  King,
  Queen,
  Star,
  Sun,
};

const char* to_string(AtlasClass c);

// Canonical representative of a cyclic sequence under rotation + reflection.
std::vector<int> canonical_cycle(std::vector<int> s);

// Corner angles of the rhombi around v in counterclockwise order, in units
// of 36 degrees (1=thin narrow, 2=thick wide, 3=thick obtuse, 4=thin broad).
// Empty when the star is clipped.
std::vector<int> corner_sequence(const SiteGraph& g, int v);

AtlasClass classify_vertex(const SiteGraph& g, int v);
std::vector<AtlasClass> classify_all(const SiteGraph& g);

}  // namespace p3hc
