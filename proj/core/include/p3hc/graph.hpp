#pragma once

#include "p3hc/cyclo.hpp"
#include "p3hc/tiling.hpp"

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace p3hc {

// Adjacency structure of one tiling generation. Vertices are the rhombus
// corners, edges the unit rhombus sides (half-tile legs); diagonals are not
// edges. The caller keeps the generation alive for the graph's lifetime.
class SiteGraph {
 public:
  static SiteGraph build(const Generation& gen);

  int n() const { return static_cast<int>(pos_.size()); }
  const Cyclo& pos(int v) const { return pos_[v]; }
  int index_of(const Cyclo& p) const {
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
  }

  // Neighbors in counterclockwise angular order around v.
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  // Two-coloring from a breadth-first search rooted at the coordinate-wise
  // smallest vertex; parity 0 is the root's side. Construction fails loudly
  // if the graph is not connected and bipartite.
  int parity(int v) const { return parity_[v]; }

  // Sum of incident corner angles in units of 36 degrees (10 = full turn).
  int star_units(int v) const { return star_units_[v]; }
  // True when v is interior: full angle and every incident rhombus whole.
  bool star_complete(int v) const { return star_complete_[v] != 0; }

  // Incident (half index, corner index 0..2) pairs, in discovery order.
  const std::vector<std::pair<int, int>>& corners(int v) const {
    return corners_[v];
  }
  // Mirror partner of a half across its base, or -1 if clipped.
  int mirror(int half) const { return mirror_[half]; }

  const Generation& generation() const { return *gen_; }

 private:
  const Generation* gen_ = nullptr;
  std::vector<Cyclo> pos_;
  std::unordered_map<Cyclo, int, CycloHash> index_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> parity_;
  std::vector<int> star_units_;
  std::vector<char> star_complete_;
  std::vector<std::vector<std::pair<int, int>>> corners_;
  std::vector<int> mirror_;
};

}  // namespace p3hc
