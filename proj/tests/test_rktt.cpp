#include "p3hc/rktt.hpp"

#include "p3hc/errors.hpp"
#include "p3hc/graph.hpp"
#include "p3hc/tiling.hpp"

#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

using namespace p3hc;

TEST_SUITE("rktt") {

TEST_CASE("supertiling of the plain thick seed is one thick rhombus") {
  Tiling t = Tiling::make("one-thick", 4);
  SiteGraph g = SiteGraph::build(t.final_gen());
  SupertilingGraph sg = build_supertiling(t, g);
  CHECK(sg.graph.n() == 4);
  CHECK(sg.graph.edges().size() == 4);
  for (int v = 0; v < sg.graph.n(); ++v)
    CHECK(sg.from_original[sg.to_original[v]] == v);
}

TEST_CASE("supertiling needs depth four") {
  Tiling t = Tiling::make("sun", 3);
  SiteGraph g = SiteGraph::build(t.final_gen());
  CHECK_THROWS_AS(build_supertiling(t, g), InvariantError);
}

TEST_CASE("supertiling reproduces the generation-(k-4) graph") {
  Tiling t = Tiling::make("sun", 8);
  SiteGraph g = SiteGraph::build(t.final_gen());
  SupertilingGraph sg = build_supertiling(t, g);

  SiteGraph direct = SiteGraph::build(t.gen(4));
  REQUIRE(sg.graph.n() == direct.n());
  for (int v = 0; v < direct.n(); ++v) CHECK(sg.graph.pos(v) == direct.pos(v));
  CHECK(sg.graph.edges() == direct.edges());

  // Back-map is injective and consistent.
  std::set<int> images;
  for (int v = 0; v < sg.graph.n(); ++v) {
    images.insert(sg.to_original[v]);
    CHECK(sg.from_original[sg.to_original[v]] == v);
  }
  CHECK(static_cast<int>(images.size()) == sg.graph.n());
}

TEST_CASE("vertex thinning approaches phi^8 as the patch grows") {
  // The rim contributes a deficit that decays like phi^{-k}; the round sun
  // patch at depth ten is comfortably inside a five percent band.
  Tiling t = Tiling::make("sun", 10);
  SiteGraph g = SiteGraph::build(t.final_gen());
  SupertilingGraph sg = build_supertiling(t, g);
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  double ratio = static_cast<double>(g.n()) / sg.graph.n();
  CHECK(ratio == doctest::Approx(13.0 + 21.0 * phi).epsilon(0.05));
}

TEST_CASE("kite centers disappear and no other vertex does") {
  Tiling t = Tiling::make("sun", 7);
  SiteGraph g = SiteGraph::build(t.final_gen());
  RkttGraph r = derive_rktt(g);
  int kites = 0;
  for (int v = 0; v < g.n(); ++v) {
    CHECK(static_cast<bool>(r.removed[v]) ==
          (r.cls[v] == AtlasClass::Kite));
    if (r.removed[v]) {
      ++kites;
      CHECK(r.adj[v].empty());
      CHECK(r.faces_at[v].empty());
    }
  }
  CHECK(kites > 0);
  CHECK(static_cast<int>(r.prolonged.size()) == kites);
}

TEST_CASE("reduced graph has all four face shapes and only those") {
  Tiling t = Tiling::make("sun", 8);
  SiteGraph g = SiteGraph::build(t.final_gen());
  RkttGraph r = derive_rktt(g);
  std::map<FaceKind, int> by_kind;
  int complete_rhombi = 0;
  for (const RkttFace& f : r.faces) {
    by_kind[f.kind]++;
    if (f.complete && f.kind == FaceKind::Rhombus) {
      // Surviving rhombi are thick: their short diagonal has norm 3 - phi.
      Golden d2 = (g.pos(f.verts[3]) - g.pos(f.verts[1])).norm2();
      bool thick = d2 == Golden(3, -1) || d2 == Golden(1, 1);
      CHECK(thick);
      ++complete_rhombi;
    }
  }
  CHECK(by_kind[FaceKind::Rhombus] > 0);
  CHECK(by_kind[FaceKind::Kite] > 0);
  CHECK(by_kind[FaceKind::TrapezeL] > 0);
  CHECK(by_kind[FaceKind::TrapezeR] > 0);
  CHECK(complete_rhombi > 0);
  // The sun patch is mirror symmetric, so chiral partners pair up exactly.
  CHECK(by_kind[FaceKind::TrapezeL] == by_kind[FaceKind::TrapezeR]);
}

TEST_CASE("reduced edges still join opposite parities") {
  Tiling t = Tiling::make("sun", 6);
  SiteGraph g = SiteGraph::build(t.final_gen());
  RkttGraph r = derive_rktt(g);
  for (int v = 0; v < g.n(); ++v)
    for (int u : r.adj[v]) CHECK(g.parity(v) != g.parity(u));
}

TEST_CASE("complete stars have degree at most five and map to patterns") {
  Tiling t = Tiling::make("sun", 8);
  SiteGraph g = SiteGraph::build(t.final_gen());
  RkttGraph r = derive_rktt(g);
  std::map<AtlasClass, std::set<std::array<int, 3>>> censuses;
  std::map<PatternKind, int> by_pattern;
  int complete = 0;
  for (int v = 0; v < g.n(); ++v) {
    if (!r.star_complete[v]) continue;
    ++complete;
    CHECK(r.degree(v) >= 3);
    CHECK(r.degree(v) <= 5);
    const StarCensus& c = r.census[v];
    censuses[r.cls[v]].insert({c.rhombus, c.kite, c.trapeze});
    PatternKind p = pattern_at(r, v);
    by_pattern[p]++;
    // Where the star census itself pins the pattern, the two maps agree.
    if (c == StarCensus{0, 5, 0} || c == StarCensus{5, 0, 0} ||
        c == StarCensus{2, 0, 2} || c == StarCensus{2, 1, 0} ||
        c == StarCensus{1, 2, 2})
      CHECK(map_star_to_pattern(c) == p);
  }
  CHECK(complete > 1000);

  // Star centers and queens sit clear of every kite ring, so their censuses
  // are fixed. Suns own one ring each; their neighbors across the ring (aces
  // at the flat tips, deuces and jacks at the wide tips) pick up ring kites
  // in place of rhombi or trapezes, so those censuses vary.
  using S = std::set<std::array<int, 3>>;
  CHECK(censuses[AtlasClass::Sun] == S{{0, 5, 0}});
  CHECK(censuses[AtlasClass::Star] == S{{5, 0, 0}});
  CHECK(censuses[AtlasClass::Queen] == S{{2, 0, 2}});
  CHECK(censuses[AtlasClass::King] == S{{0, 1, 2}});
  CHECK(censuses[AtlasClass::Jack] == S{{0, 3, 2}});
  CHECK(censuses[AtlasClass::Deuce] == S{{1, 2, 2}, {1, 3, 1}});
  CHECK(censuses[AtlasClass::Ace] == S{{2, 1, 0}, {1, 1, 1}, {0, 1, 2}});

  // Pattern shares among complete stars, conditioned on not being a kite:
  // divide the per-vertex frequencies by phi - 1.
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  auto share = [&](PatternKind p) {
    return static_cast<double>(by_pattern[p]) / complete;
  };
  CHECK(share(PatternKind::Snail) ==
        doctest::Approx((2 * phi - 3) / (phi - 1)).epsilon(0.05));
  CHECK(share(PatternKind::Bat) ==
        doctest::Approx((5 - 3 * phi) / (phi - 1)).epsilon(0.05));
  CHECK(share(PatternKind::Turtle) ==
        doctest::Approx((5 * phi - 8) / (phi - 1)).epsilon(0.05));
  CHECK(share(PatternKind::Urchin) ==
        doctest::Approx((7 - 4 * phi) / 5 / (phi - 1)).epsilon(0.06));
  CHECK(share(PatternKind::Starfish) ==
        doctest::Approx((18 - 11 * phi) / 5 / (phi - 1)).epsilon(0.06));
}

TEST_CASE("pattern centers sit over original sun and star vertices") {
  // Scaling a vertex by phi^4 lands on a fully symmetric site: below every
  // supertiling vertex the original star is a sun or a star, nothing else.
  // Which of the two tracks the supertiling class exactly.
  Tiling t = Tiling::make("sun", 8);
  SiteGraph g = SiteGraph::build(t.final_gen());
  SupertilingGraph sg = build_supertiling(t, g);
  RkttGraph r = derive_rktt(sg.graph);
  std::vector<AtlasClass> orig_cls = classify_all(g);
  int checked = 0;
  for (int v = 0; v < sg.graph.n(); ++v) {
    AtlasClass down = orig_cls[sg.to_original[v]];
    if (r.cls[v] == AtlasClass::Kite) {
      CHECK(down == AtlasClass::Star);
      continue;
    }
    if (!r.star_complete[v]) continue;
    ++checked;
    switch (pattern_at(r, v)) {
      case PatternKind::Starfish:
      case PatternKind::Bat:
      case PatternKind::Turtle: CHECK(down == AtlasClass::Sun); break;
      case PatternKind::Snail:
      case PatternKind::Urchin: CHECK(down == AtlasClass::Star); break;
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("star census table") {
  CHECK(map_star_to_pattern({0, 5, 0}) == PatternKind::Starfish);
  CHECK(map_star_to_pattern({5, 0, 0}) == PatternKind::Urchin);
  CHECK(map_star_to_pattern({2, 0, 2}) == PatternKind::Urchin);
  CHECK(map_star_to_pattern({0, 1, 2}) == PatternKind::Urchin);
  CHECK(map_star_to_pattern({2, 1, 0}) == PatternKind::Snail);
  CHECK(map_star_to_pattern({0, 1, 4}) == PatternKind::Turtle);
  CHECK(map_star_to_pattern({1, 2, 2}) == PatternKind::Bat);
  CHECK_THROWS_AS(map_star_to_pattern({3, 1, 0}), InvariantError);
  // Ring-adjacent variants fall outside the canonical seven.
  CHECK_THROWS_AS(map_star_to_pattern({1, 1, 1}), InvariantError);
  CHECK_THROWS_AS(map_star_to_pattern({0, 3, 2}), InvariantError);
}

TEST_CASE("class determines pattern") {
  CHECK(pattern_of_class(AtlasClass::Sun) == PatternKind::Starfish);
  CHECK(pattern_of_class(AtlasClass::Star) == PatternKind::Urchin);
  CHECK(pattern_of_class(AtlasClass::King) == PatternKind::Urchin);
  CHECK(pattern_of_class(AtlasClass::Queen) == PatternKind::Urchin);
  CHECK(pattern_of_class(AtlasClass::Ace) == PatternKind::Snail);
  CHECK(pattern_of_class(AtlasClass::Jack) == PatternKind::Turtle);
  CHECK(pattern_of_class(AtlasClass::Deuce) == PatternKind::Bat);
  CHECK_THROWS_AS(pattern_of_class(AtlasClass::Kite), InvariantError);
  CHECK_THROWS_AS(pattern_of_class(AtlasClass::Incomplete), InvariantError);
}

TEST_CASE("perfect particle counts per pattern") {
  CHECK(perfect_count(PatternKind::Urchin) == 16);
  CHECK(perfect_count(PatternKind::Starfish) == 51);
  CHECK(perfect_count(PatternKind::Snail) == 23);
  CHECK(perfect_count(PatternKind::Turtle) == 63);
  CHECK(perfect_count(PatternKind::Bat) == 75);
}

}  // TEST_SUITE
