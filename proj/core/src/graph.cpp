#include "p3hc/graph.hpp"

#include "p3hc/errors.hpp"

#include <boost/functional/hash.hpp>

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace p3hc {

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<Cyclo, Cyclo>& e) const {
    std::size_t seed = hash_value(e.first);
    boost::hash_combine(seed, hash_value(e.second));
    return seed;
  }
};

}  // namespace

SiteGraph SiteGraph::build(const Generation& gen) {
  SiteGraph g;
  g.gen_ = &gen;

  auto intern = [&g](const Cyclo& p) {
    auto [it, fresh] = g.index_.try_emplace(p, g.n());
    if (fresh) {
      g.pos_.push_back(p);
      g.adj_.emplace_back();
      g.corners_.emplace_back();
    }
    return it->second;
  };

  // Vertices, corner incidences, and deduplicated leg edges, all in half
  // scan order so every downstream structure is deterministic.
  std::unordered_set<std::pair<Cyclo, Cyclo>, PairHash> seen;
  for (std::size_t i = 0; i < gen.halves.size(); ++i) {
    const Half& h = gen.halves[i];
    int vid[3];
    for (int j = 0; j < 3; ++j) {
      vid[j] = intern(h.v[j]);
      g.corners_[vid[j]].emplace_back(static_cast<int>(i), j);
    }
    for (int l = 1; l <= 2; ++l) {
      Cyclo a = h.v[0], b = h.v[l];
      if (b < a) std::swap(a, b);
      if (seen.emplace(a, b).second) {
        int ia = g.index_.at(a), ib = g.index_.at(b);
        g.edges_.emplace_back(ia, ib);
        g.adj_[ia].push_back(ib);
        g.adj_[ib].push_back(ia);
      }
    }
  }

  for (int v = 0; v < g.n(); ++v) {
    std::sort(g.adj_[v].begin(), g.adj_[v].end(), [&](int x, int y) {
      return ccw_less(g.pos_[x] - g.pos_[v], g.pos_[y] - g.pos_[v]);
    });
  }

  // Mirror pairing: two halves of one rhombus share their base segment.
  g.mirror_.assign(gen.halves.size(), -1);
  std::unordered_map<std::pair<Cyclo, Cyclo>, int, PairHash> base_owner;
  for (std::size_t i = 0; i < gen.halves.size(); ++i) {
    const Half& h = gen.halves[i];
    Cyclo a = h.v[1], b = h.v[2];
    if (b < a) std::swap(a, b);
    auto [it, fresh] = base_owner.try_emplace({a, b}, static_cast<int>(i));
    if (!fresh) {
      int j = it->second;
      require(j >= 0, "three halves share one base");
      require(gen.halves[j].kind == h.kind, "mirror halves of different kind");
      g.mirror_[i] = j;
      g.mirror_[j] = static_cast<int>(i);
      it->second = -1;
    }
  }

  // Corner angle budget and interiorness.
  g.star_units_.assign(g.n(), 0);
  g.star_complete_.assign(g.n(), 1);
  for (int v = 0; v < g.n(); ++v)
    for (auto [hi, j] : g.corners_[v])
      g.star_units_[v] += gen.halves[hi].corner_units(j);
  for (std::size_t i = 0; i < gen.halves.size(); ++i) {
    if (g.mirror_[i] >= 0) continue;
    const Half& h = gen.halves[i];
    g.star_complete_[g.index_.at(h.v[1])] = 0;
    g.star_complete_[g.index_.at(h.v[2])] = 0;
  }
  for (int v = 0; v < g.n(); ++v)
    if (g.star_units_[v] != 10) g.star_complete_[v] = 0;

  // Parity by breadth-first search from the coordinate-wise smallest vertex.
  int root = 0;
  for (int v = 1; v < g.n(); ++v)
    if (g.pos_[v] < g.pos_[root]) root = v;
  g.parity_.assign(g.n(), -1);
  std::deque<int> queue{root};
  g.parity_[root] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : g.adj_[v]) {
      if (g.parity_[u] == -1) {
        g.parity_[u] = 1 - g.parity_[v];
        queue.push_back(u);
      } else {
        require(g.parity_[u] != g.parity_[v],
                "odd cycle: tiling graph must be bipartite");
      }
    }
  }
  for (int v = 0; v < g.n(); ++v)
    require(g.parity_[v] != -1, "tiling graph is disconnected");

  return g;
}

}  // namespace p3hc
