#include "p3hc/rktt.hpp"

#include "p3hc/errors.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <utility>

namespace p3hc {

SupertilingGraph build_supertiling(const Tiling& t, const SiteGraph& original) {
  require(t.k() >= 4, "supertiling needs at least four substitution steps");
  SupertilingGraph sg;
  sg.graph = SiteGraph::build(t.gen(t.k() - 4));
  sg.to_original.resize(sg.graph.n());
  sg.from_original.assign(original.n(), -1);
  for (int v = 0; v < sg.graph.n(); ++v) {
    int o = original.index_of(scale_phi4(sg.graph.pos(v)));
    require(o >= 0, "supertile corner is not an original vertex");
    sg.to_original[v] = o;
    sg.from_original[o] = v;
  }
  return sg;
}

const char* to_string(FaceKind k) {
  switch (k) {
    case FaceKind::Rhombus: return "rhombus";
    case FaceKind::Kite: return "kite";
    case FaceKind::TrapezeL: return "trapeze-l";
    case FaceKind::TrapezeR: return "trapeze-r";
  }
  return "?";
}

const char* to_string(PatternKind k) {
  switch (k) {
    case PatternKind::Urchin: return "urchin";
    case PatternKind::Starfish: return "starfish";
    case PatternKind::Snail: return "snail";
    case PatternKind::Turtle: return "turtle";
    case PatternKind::Bat: return "bat";
  }
  return "?";
}

int perfect_count(PatternKind k) {
  switch (k) {
    case PatternKind::Urchin: return 16;
    case PatternKind::Starfish: return 51;
    case PatternKind::Snail: return 23;
    case PatternKind::Turtle: return 63;
    case PatternKind::Bat: return 75;
  }
  throw InvariantError("bad pattern kind");
}

namespace {

// For a removed kite center c, locate the prolongation pair: p, the neighbor
// across the edge flanked by both thick rhombi, and w, the far corner of the
// short diagonal of c's thin rhombus. p, c, w are collinear and |p - w| = phi.
std::array<int, 2> prolongation(const SiteGraph& g, int c) {
  const Generation& gen = g.generation();
  int p = -1, w = -1;
  // Count, per neighbor, how many thick halves the connecting leg borders.
  std::vector<std::pair<int, int>> thick_legs;  // (neighbor, count)
  auto bump = [&](int u, bool thick) {
    if (!thick) return;
    for (auto& [v, n] : thick_legs)
      if (v == u) {
        ++n;
        return;
      }
    thick_legs.push_back({u, 1});
  };
  for (auto [hi, j] : g.corners(c)) {
    const Half& h = gen.halves[hi];
    bool thick = h.kind == HalfKind::Thick;
    if (j == 0) {
      bump(g.index_of(h.v[1]), thick);
      bump(g.index_of(h.v[2]), thick);
    } else {
      bump(g.index_of(h.v[0]), thick);
      if (!thick) {
        int other = g.index_of(h.v[j == 1 ? 2 : 1]);
        require(w < 0 || w == other, "kite thin halves disagree on partner");
        w = other;
      }
    }
  }
  for (auto [u, n] : thick_legs)
    if (n == 2) {
      require(p < 0, "kite center with two thick|thick edges");
      p = u;
    }
  require(p >= 0 && w >= 0, "kite center missing prolongation endpoints");

  Cyclo step = g.pos(c) - g.pos(p);
  Cyclo tail = g.pos(w) - g.pos(c);
  require(cross_coeff(step, tail).is_zero() && dot_exact(step, tail).sign() > 0,
          "prolonged edge is not collinear");
  require((g.pos(w) - g.pos(p)).norm2() == Golden(1, 1),
          "prolonged edge has wrong length");
  return {p, w};
}

// Ordered endpoints (p, w) of every prolonged edge, keyed without order.
class ProlongedLookup {
 public:
  ProlongedLookup(const std::vector<std::array<int, 2>>& edges, int n) : n_(n) {
    for (const auto& e : edges) dir_.emplace(key(e[0], e[1]), e);
  }
  // Null when (a, b) is not a prolonged edge.
  const std::array<int, 2>* find(int a, int b) const {
    auto it = dir_.find(key(a, b));
    return it == dir_.end() ? nullptr : &it->second;
  }

 private:
  long long key(int a, int b) const {
    auto [lo, hi] = std::minmax(a, b);
    return static_cast<long long>(lo) * n_ + hi;
  }
  std::unordered_map<long long, std::array<int, 2>> dir_;
  long long n_;
};

struct FaceShape {
  FaceKind kind;
  bool thin = false;  // a whole thin rhombus, possible only on clipped rims
};

FaceShape classify_face(const SiteGraph& g, const std::array<int, 4>& q,
                        const ProlongedLookup& prol) {
  static const Golden kUnit(1), kPhi2(1, 1);
  std::array<Golden, 4> s2;
  std::array<int, 2> phis{-1, -1};
  int phi_sides = 0;
  for (int i = 0; i < 4; ++i) {
    s2[i] = (g.pos(q[(i + 1) % 4]) - g.pos(q[i])).norm2();
    if (s2[i] == kPhi2) {
      require(phi_sides < 2, "face with more than two phi sides");
      phis[phi_sides++] = i;
    } else {
      require(s2[i] == kUnit, "face side is neither unit nor phi");
    }
  }
  if (phi_sides == 0) {
    Golden d2 = (g.pos(q[2]) - g.pos(q[0])).norm2();
    if (d2 == Golden(2, -1) || d2 == Golden(2, 1))
      return {FaceKind::Rhombus, true};
    if (d2 == Golden(3, -1) || d2 == kPhi2) return {FaceKind::Rhombus, false};
    throw InvariantError("unit rhombus face with impossible diagonal");
  }
  if (phi_sides == 1) {
    const auto* e = prol.find(q[phis[0]], q[(phis[0] + 1) % 4]);
    require(e != nullptr, "phi-length face side is not a prolonged edge");
    bool forward = (*e)[0] == q[phis[0]];
    return {forward ? FaceKind::TrapezeL : FaceKind::TrapezeR, false};
  }
  require(phis[1] - phis[0] != 2, "parallelogram face: phi sides must be adjacent");
  int apex = phis[1] == phis[0] + 1 ? q[phis[1]] : q[0];
  for (int i : phis) {
    const auto* e = prol.find(q[i], q[(i + 1) % 4]);
    require(e != nullptr && (*e)[0] == apex,
            "kite phi sides must radiate from the apex");
  }
  return {FaceKind::Kite, false};
}

}  // namespace

RkttGraph derive_rktt(const SiteGraph& g) {
  return derive_rktt(g, classify_all(g));
}

RkttGraph derive_rktt(const SiteGraph& g, std::vector<AtlasClass> cls) {
  RkttGraph r;
  r.base = &g;
  r.cls = std::move(cls);
  int n = g.n();
  r.removed.assign(n, 0);
  for (int v = 0; v < n; ++v)
    if (r.cls[v] == AtlasClass::Kite) r.removed[v] = 1;

  r.adj.assign(n, {});
  for (auto [a, b] : g.edges()) {
    if (r.removed[a] || r.removed[b]) continue;
    r.adj[a].push_back(b);
    r.adj[b].push_back(a);
  }
  for (int c = 0; c < n; ++c) {
    if (!r.removed[c]) continue;
    auto [p, w] = prolongation(g, c);
    require(!r.removed[p] && !r.removed[w],
            "prolongation endpoint is itself removed");
    r.prolonged.push_back({p, w});
    r.adj[p].push_back(w);
    r.adj[w].push_back(p);
  }
  for (int v = 0; v < n; ++v) {
    std::sort(r.adj[v].begin(), r.adj[v].end(), [&](int x, int y) {
      return ccw_less(g.pos(x) - g.pos(v), g.pos(y) - g.pos(v));
    });
  }
  ProlongedLookup prol(r.prolonged, n);

  // Face tracing in the planar embedding: from the directed edge (v, u) the
  // face continues along (u, x) with x the clockwise predecessor of v around
  // u, which walks bounded faces counterclockwise. Each bounded face of the
  // reduced graph must close after exactly four corners; the walks with
  // negative circulation are the outer boundaries and are dropped.
  std::vector<std::vector<char>> seen(n);
  for (int v = 0; v < n; ++v) seen[v].assign(r.adj[v].size(), 0);
  auto index_in = [&](int u, int x) {
    for (std::size_t i = 0; i < r.adj[u].size(); ++i)
      if (r.adj[u][i] == x) return static_cast<int>(i);
    throw InvariantError("adjacency lists are not symmetric");
  };
  std::vector<int> walk;
  for (int v0 = 0; v0 < n; ++v0) {
    for (std::size_t i0 = 0; i0 < r.adj[v0].size(); ++i0) {
      if (seen[v0][i0]) continue;
      walk.clear();
      int v = v0, i = static_cast<int>(i0);
      do {
        seen[v][i] = 1;
        walk.push_back(v);
        int u = r.adj[v][i];
        int back = index_in(u, v);
        i = (back + static_cast<int>(r.adj[u].size()) - 1) %
            static_cast<int>(r.adj[u].size());
        v = u;
      } while (!(v == v0 && i == static_cast<int>(i0)));

      Golden circ;
      for (std::size_t j = 0; j < walk.size(); ++j)
        circ += cross_coeff(g.pos(walk[j]), g.pos(walk[(j + 1) % walk.size()]));
      int s = circ.sign();
      require(s != 0, "face walk with zero circulation");
      if (s < 0) continue;
      require(walk.size() == 4, "bounded face is not a quadrilateral");
      RkttFace f;
      std::copy_n(walk.begin(), 4, f.verts.begin());
      FaceShape shape = classify_face(g, f.verts, prol);
      f.kind = shape.kind;
      f.complete = true;
      for (int q : f.verts)
        if (r.cls[q] == AtlasClass::Incomplete) f.complete = false;
      // One wide corner of every thin rhombus is a kite center, so a thin
      // face can only survive whole where that corner fell outside the
      // classified patch and could not be removed.
      if (shape.thin)
        require(!f.complete, "complete thin rhombus face in the reduced graph");
      r.faces.push_back(f);
    }
  }

  r.faces_at.assign(n, {});
  for (std::size_t fi = 0; fi < r.faces.size(); ++fi)
    for (int q : r.faces[fi].verts)
      r.faces_at[q].push_back(static_cast<int>(fi));

  r.census.assign(n, {});
  r.star_complete.assign(n, 0);
  for (int v = 0; v < n; ++v) {
    if (r.removed[v] || r.cls[v] == AtlasClass::Incomplete) continue;
    int complete_faces = 0;
    for (int fi : r.faces_at[v]) {
      const RkttFace& f = r.faces[fi];
      if (!f.complete) continue;
      ++complete_faces;
      switch (f.kind) {
        case FaceKind::Rhombus: r.census[v].rhombus++; break;
        case FaceKind::Kite: r.census[v].kite++; break;
        case FaceKind::TrapezeL:
        case FaceKind::TrapezeR: r.census[v].trapeze++; break;
      }
    }
    if (r.degree(v) > 0 && complete_faces == r.degree(v))
      r.star_complete[v] = 1;
    else
      r.census[v] = {};
  }
  return r;
}

PatternKind map_star_to_pattern(const StarCensus& c) {
  if (c == StarCensus{0, 5, 0}) return PatternKind::Starfish;
  if (c == StarCensus{5, 0, 0}) return PatternKind::Urchin;
  if (c == StarCensus{2, 0, 2}) return PatternKind::Urchin;
  if (c == StarCensus{0, 1, 2}) return PatternKind::Urchin;
  if (c == StarCensus{2, 1, 0}) return PatternKind::Snail;
  if (c == StarCensus{0, 1, 4}) return PatternKind::Turtle;
  if (c == StarCensus{1, 2, 2}) return PatternKind::Bat;
  throw InvariantError("reduced-graph star census {" +
                       std::to_string(c.rhombus) + " rhombi, " +
                       std::to_string(c.kite) + " kites, " +
                       std::to_string(c.trapeze) +
                       " trapezes} matches no pattern");
}

PatternKind pattern_of_class(AtlasClass c) {
  switch (c) {
    case AtlasClass::Sun: return PatternKind::Starfish;
    case AtlasClass::Star:
    case AtlasClass::King:
    case AtlasClass::Queen: return PatternKind::Urchin;
    case AtlasClass::Ace: return PatternKind::Snail;
    case AtlasClass::Jack: return PatternKind::Turtle;
    case AtlasClass::Deuce: return PatternKind::Bat;
    case AtlasClass::Kite:
    case AtlasClass::Incomplete: break;
  }
  throw InvariantError(std::string("no pattern for atlas class ") +
                       to_string(c));
}

PatternKind pattern_at(const RkttGraph& r, int v) {
  require(!r.removed[v] && r.star_complete[v],
          "pattern center must be a surviving vertex with a complete star");
  return pattern_of_class(r.cls[v]);
}

}  // namespace p3hc
