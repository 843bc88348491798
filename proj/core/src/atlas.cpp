#include "p3hc/atlas.hpp"

#include "p3hc/errors.hpp"

#include <algorithm>
#include <map>

namespace p3hc {

const char* to_string(AtlasClass c) {
  switch (c) {
    case AtlasClass::Incomplete: return "incomplete";
    case AtlasClass::Kite: return "kite";
    case AtlasClass::Deuce: return "deuce";
    case AtlasClass::Jack: return "jack";
    case AtlasClass::Ace: return "ace";
    case AtlasClass::King: return "king";
    case AtlasClass::Queen: return "queen";
    case AtlasClass::Star: return "star";
    case AtlasClass::Sun: return "sun";
  }
  return "?";
}

std::vector<int> canonical_cycle(std::vector<int> s) {
  std::vector<int> best;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      std::vector<int> rot(s.begin() + i, s.end());
      rot.insert(rot.end(), s.begin(), s.begin() + i);
      if (best.empty() || rot < best) best = std::move(rot);
    }
    std::reverse(s.begin(), s.end());
  }
  return best;
}

namespace {

struct Wedge {
  Cyclo start;   // CCW-first boundary ray of the rhombus corner
  int units;     // corner angle in 36-degree units
  bool at_v1;    // v is the rhombus's shared base label v1
};

// Rhombus corners around an interior vertex, as wedges in CCW order.
std::vector<Wedge> wedges_around(const SiteGraph& g, int v) {
  const Generation& gen = g.generation();
  std::map<int, std::vector<std::pair<int, int>>> groups;  // rhombus rep -> corners
  for (auto [hi, j] : g.corners(v)) {
    int m = g.mirror(hi);
    groups[(m >= 0 && m < hi) ? m : hi].push_back({hi, j});
  }
  std::vector<Wedge> ws;
  ws.reserve(groups.size());
  for (auto& [rep, cs] : groups) {
    Wedge w{};
    // Boundary rays are the rhombus edges at v: both legs when v is the
    // apex, otherwise one leg per mirror half (the shared diagonal is
    // interior to the wedge).
    Cyclo rays[2];
    int nrays = 0;
    for (auto [hi, j] : cs) {
      const Half& h = gen.halves[hi];
      w.units += h.corner_units(j);
      if (j == 0) {
        rays[nrays++] = h.v[1] - h.v[0];
        rays[nrays++] = h.v[2] - h.v[0];
      } else {
        require(nrays < 2, "more than two boundary rays at a rhombus corner");
        rays[nrays++] = h.v[0] - h.v[j];
        w.at_v1 = j == 1;
      }
    }
    require(nrays == 2, "rhombus corner without two boundary rays");
    w.start = cross_coeff(rays[0], rays[1]).sign() > 0 ? rays[0] : rays[1];
    ws.push_back(std::move(w));
  }
  std::sort(ws.begin(), ws.end(),
            [](const Wedge& a, const Wedge& b) { return ccw_less(a.start, b.start); });
  return ws;
}

const std::vector<int>& signature(AtlasClass c) {
  static const std::map<AtlasClass, std::vector<int>> table = {
      {AtlasClass::Kite, {3, 3, 4}},          {AtlasClass::Deuce, {2, 4, 4}},
      {AtlasClass::Jack, {2, 2, 2, 4}},       {AtlasClass::Ace, {1, 2, 1, 3, 3}},
      {AtlasClass::King, {1, 1, 2, 1, 1, 2, 2}},
      {AtlasClass::Queen, {1, 1, 2, 2, 2, 2}},
  };
  return table.at(c);
}

}  // namespace

std::vector<int> corner_sequence(const SiteGraph& g, int v) {
  if (!g.star_complete(v)) return {};
  std::vector<int> seq;
  for (const Wedge& w : wedges_around(g, v)) seq.push_back(w.units);
  return seq;
}

AtlasClass classify_vertex(const SiteGraph& g, int v) {
  if (!g.star_complete(v)) return AtlasClass::Incomplete;
  std::vector<Wedge> ws = wedges_around(g, v);
  std::vector<int> seq;
  for (const Wedge& w : ws) seq.push_back(w.units);
  std::vector<int> c = canonical_cycle(seq);

  if (c == std::vector<int>{2, 2, 2, 2, 2}) {
    // Five thick corners: the decoration decides. A star anchors every
    // incident rhombus's shared base label at v, a sun anchors all away.
    int anchored = 0;
    for (const Wedge& w : ws) anchored += w.at_v1;
    if (anchored == 5) return AtlasClass::Star;
    if (anchored == 0) return AtlasClass::Sun;
    throw InvariantError("five-fold vertex with mixed decoration anchors");
  }
  for (AtlasClass cls : {AtlasClass::Kite, AtlasClass::Deuce, AtlasClass::Jack,
                         AtlasClass::Ace, AtlasClass::King, AtlasClass::Queen}) {
    if (c == signature(cls)) return cls;
  }
  throw InvariantError("complete star matches no atlas element at vertex " +
                       std::to_string(v));
}

std::vector<AtlasClass> classify_all(const SiteGraph& g) {
  std::vector<AtlasClass> out(g.n());
  for (int v = 0; v < g.n(); ++v) out[v] = classify_vertex(g, v);
  return out;
}

}  // namespace p3hc
