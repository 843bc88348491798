#include "p3hc/graph.hpp"

#include "p3hc/errors.hpp"
#include "p3hc/tiling.hpp"

#include <doctest.h>

#include <set>

using namespace p3hc;

TEST_SUITE("graph") {

TEST_CASE("single thick rhombus") {
  Tiling t = Tiling::seed_one_thick();
  SiteGraph g = SiteGraph::build(t.final_gen());
  CHECK(g.n() == 4);
  CHECK(g.edges().size() == 4);  // the long diagonal is not an edge
  for (int v = 0; v < g.n(); ++v) {
    CHECK(g.degree(v) == 2);
    CHECK(!g.star_complete(v));
  }
  int even = 0;
  for (int v = 0; v < g.n(); ++v) even += g.parity(v) == 0;
  CHECK(even == 2);
  CHECK(g.mirror(0) == 1);
  CHECK(g.mirror(1) == 0);
}

TEST_CASE("sun seed geometry") {
  Tiling t = Tiling::seed_sun();
  SiteGraph g = SiteGraph::build(t.final_gen());
  CHECK(g.n() == 11);
  CHECK(g.edges().size() == 15);  // 5 spokes + 10 rim edges

  int center = g.index_of(Cyclo());
  REQUIRE(center >= 0);
  CHECK(g.degree(center) == 5);
  CHECK(g.star_units(center) == 10);
  CHECK(g.star_complete(center));
  for (int v = 0; v < g.n(); ++v)
    if (v != center) CHECK(!g.star_complete(v));

  // Parity splits into {center, rim} and {spoke tips}.
  for (int j = 0; j < 5; ++j) {
    int spoke = g.index_of(Cyclo::zeta(j));
    int rim = g.index_of(Cyclo::zeta(j) + Cyclo::zeta(j + 1));
    CHECK(g.parity(spoke) != g.parity(center));
    CHECK(g.parity(rim) == g.parity(center));
  }

  // Center's neighbors arrive in counterclockwise order.
  const auto& nb = g.neighbors(center);
  REQUIRE(nb.size() == 5);
  for (std::size_t i = 0; i + 1 < nb.size(); ++i) {
    CHECK(ccw_less(g.pos(nb[i]) - g.pos(center), g.pos(nb[i + 1]) - g.pos(center)));
  }
}

TEST_CASE("edges are exactly the unit segments") {
  Tiling t = Tiling::make("one-thin", 4);
  SiteGraph g = SiteGraph::build(t.final_gen());
  for (auto [a, b] : g.edges())
    CHECK((g.pos(a) - g.pos(b)).norm2() == Golden{1});
}

TEST_CASE("interior degrees stay within the tiling bounds") {
  Tiling t = Tiling::make("sun", 5);
  SiteGraph g = SiteGraph::build(t.final_gen());
  int complete = 0;
  for (int v = 0; v < g.n(); ++v) {
    CHECK(g.star_units(v) <= 10);
    if (g.star_complete(v)) {
      ++complete;
      CHECK(g.degree(v) >= 3);
      CHECK(g.degree(v) <= 7);
    }
  }
  CHECK(complete > g.n() / 2);
}

TEST_CASE("average degree and parity balance at depth") {
  Tiling t = Tiling::make("sun", 7);
  SiteGraph g = SiteGraph::build(t.final_gen());
  double avg = 2.0 * static_cast<double>(g.edges().size()) / g.n();
  CHECK(avg == doctest::Approx(4.0).epsilon(0.03));
  int even = 0;
  for (int v = 0; v < g.n(); ++v) even += g.parity(v) == 0;
  CHECK(static_cast<double>(even) / g.n() == doctest::Approx(0.5).epsilon(0.04));
}

TEST_CASE("every subdivided generation builds cleanly") {
  for (const char* name : {"one-thick", "one-thin", "sun"}) {
    Tiling t = Tiling::make(name, 5);
    CAPTURE(name);
    SiteGraph g = SiteGraph::build(t.final_gen());
    CHECK(g.n() > 0);
    // Edge endpoints always differ in parity (bipartite by construction).
    for (auto [a, b] : g.edges()) CHECK(g.parity(a) != g.parity(b));
  }
}

TEST_CASE("corner incidences cover each half three times") {
  Tiling t = Tiling::make("one-thick", 3);
  SiteGraph g = SiteGraph::build(t.final_gen());
  std::size_t corner_count = 0;
  for (int v = 0; v < g.n(); ++v) corner_count += g.corners(v).size();
  CHECK(corner_count == 3 * t.final_gen().halves.size());
}

}  // TEST_SUITE
