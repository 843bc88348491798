#pragma once

#include "p3hc/atlas.hpp"
#include "p3hc/graph.hpp"
#include "p3hc/tiling.hpp"

#include <array>
#include <vector>

namespace p3hc {

// The tiling four substitution steps up, as a graph in its own units, with
// the exact correspondence onto the current tiling's vertex set. Rebuilding
// the step-(k-4) generation at scale phi^4 reproduces a subset of the final
// vertices, so every supertile corner is also an original vertex.
struct SupertilingGraph {
  SiteGraph graph;                      // lives on t.gen(t.k() - 4)
  std::vector<int> to_original;         // supertile vertex -> original vertex
  std::vector<int> from_original;       // inverse map, -1 where undefined
};

// `original` must be the graph of t's final generation; t must outlive the
// result (the embedded SiteGraph references t's stored generation).
SupertilingGraph build_supertiling(const Tiling& t, const SiteGraph& original);

inline Cyclo scale_phi4(Cyclo z) {
  for (int i = 0; i < 4; ++i) z = z.mul_phi();
  return z;
}

// Faces of the reduced graph. Removing every kite-class vertex and prolonging
// the thick|thick edge across each removal leaves quadrilaterals only: the
// untouched thick rhombi, kite-shaped cells with two adjacent phi-length
// sides meeting at the apex, and trapezes with one phi-length side. Thin
// rhombi never survive whole: one of the two wide corners is always a kite
// center, so every thin is cut along its short diagonal. The trapeze shape
// is isosceles, but the removed vertex splits its phi side at 1 : 1/phi, so
// the decorated tile comes in two mirror forms: L when the counterclockwise
// face walk passes the removed vertex before the thin tip, R when after.
enum class FaceKind : std::uint8_t { Rhombus, Kite, TrapezeL, TrapezeR };

const char* to_string(FaceKind k);

struct RkttFace {
  std::array<int, 4> verts;  // corner cycle, counterclockwise
  FaceKind kind;
  bool complete;             // all four corners carry a full atlas star
};

struct StarCensus {
  int rhombus = 0;
  int kite = 0;
  int trapeze = 0;
  friend bool operator==(const StarCensus&, const StarCensus&) = default;
};

// The five basic patterns, keyed by the reduced-graph star of their center.
enum class PatternKind : std::uint8_t { Urchin, Starfish, Snail, Turtle, Bat };

const char* to_string(PatternKind k);
// Particle count of the pattern's unique densest interior configuration.
int perfect_count(PatternKind k);

// Reduced graph over a tiling graph: kite-class centers removed, their
// thick|thick edges prolonged to the facing thin-rhombus corner. Vertex ids
// are those of the base graph; removed vertices keep empty adjacency.
struct RkttGraph {
  const SiteGraph* base = nullptr;
  std::vector<AtlasClass> cls;               // atlas labels of the base graph
  std::vector<char> removed;                 // 1 on kite-class centers
  std::vector<std::vector<int>> adj;         // counterclockwise, like the base
  std::vector<std::array<int, 2>> prolonged; // the lengthened edges (p, w)
  std::vector<RkttFace> faces;               // bounded faces only
  std::vector<std::vector<int>> faces_at;    // vertex -> incident face ids
  std::vector<StarCensus> census;            // complete incident faces by kind
  std::vector<char> star_complete;           // census covers the whole degree

  int degree(int v) const { return static_cast<int>(adj[v].size()); }
};

RkttGraph derive_rktt(const SiteGraph& g);
RkttGraph derive_rktt(const SiteGraph& g, std::vector<AtlasClass> cls);

// The seven canonical star censuses and their patterns; throws InvariantError
// on any other census. Centers adjacent to a five-kite ring can carry extra
// kite faces in place of trapezes or rhombi, so this map is partial on real
// patches: it is the cross-check, not the partition driver.
PatternKind map_star_to_pattern(const StarCensus& c);

// Total map from the center's star class to its pattern. Every non-kite
// class determines the pattern outright; kite centers are removed and carry
// no pattern. Throws InvariantError for Kite and Incomplete.
PatternKind pattern_of_class(AtlasClass c);

// pattern_of_class applied to the reduced graph's center label; requires a
// surviving vertex with a complete star.
PatternKind pattern_at(const RkttGraph& r, int v);

}  // namespace p3hc
