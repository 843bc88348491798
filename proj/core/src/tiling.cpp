#include "p3hc/tiling.hpp"

#include "p3hc/errors.hpp"

#include <boost/functional/hash.hpp>

#include <sstream>
#include <unordered_map>
#include <utility>

namespace p3hc {

namespace {

struct EdgeKey {
  Cyclo a, b;  // normalized: a < b
  EdgeKey(Cyclo u, Cyclo v) {
    if (v < u) std::swap(u, v);
    a = std::move(u);
    b = std::move(v);
  }
  friend bool operator==(const EdgeKey&, const EdgeKey&) = default;
};

struct EdgeKeyHash {
  std::size_t operator()(const EdgeKey& e) const {
    std::size_t seed = hash_value(e.a);
    boost::hash_combine(seed, hash_value(e.b));
    return seed;
  }
};

std::string describe(const Half& h) {
  std::ostringstream os;
  os << (h.kind == HalfKind::Thin ? "thin" : "thick") << "[" << h.v[0] << ","
     << h.v[1] << "," << h.v[2] << "]";
  return os.str();
}

}  // namespace

Census census(const Generation& g) {
  Census c;
  for (const Half& h : g.halves)
    (h.kind == HalfKind::Thin ? c.thin : c.thick)++;
  return c;
}

Census census_after(Census seed, int k) {
  for (int i = 0; i < k; ++i)
    seed = {seed.thin + seed.thick, seed.thin + 2 * seed.thick};
  return seed;
}

Tiling::Tiling(std::string name, std::vector<Half> seed)
    : seed_name_(std::move(name)) {
  gens_.push_back(Generation{std::move(seed)});
}

// Mirror halves of one rhombus must carry identical v1/v2 labels (only the
// apex differs): the subdivision cuts the side v0->v1 and lays a thick-child
// base along v0->v2, so facing sides agree on the cut point exactly when the
// labels agree. validate_generation enforces this for every generation.

Tiling Tiling::seed_one_thick() {
  // Thick rhombus 0, 1, 1+zeta, zeta; wide corners at 1 and zeta, split along
  // the long diagonal 0 -- 1+zeta.
  Cyclo e0 = Cyclo::one(), e1 = Cyclo::zeta(1);
  Cyclo far = e0 + e1;
  return Tiling("one-thick", {
                                 {HalfKind::Thick, {e0, far, Cyclo()}, -1},
                                 {HalfKind::Thick, {e1, far, Cyclo()}, -1},
                             });
}

Tiling Tiling::seed_one_thin() {
  // Thin rhombus 0, 1, 1+zeta^2, zeta^2; narrow corners at 1 and zeta^2,
  // split along the short diagonal 0 -- 1+zeta^2.
  Cyclo e0 = Cyclo::one(), e2 = Cyclo::zeta(2);
  Cyclo far = e0 + e2;
  return Tiling("one-thin", {
                                {HalfKind::Thin, {e0, Cyclo(), far}, -1},
                                {HalfKind::Thin, {e2, Cyclo(), far}, -1},
                            });
}

Tiling Tiling::seed_sun() {
  // Five thick rhombi fanned around the origin, adjacent ones sharing a
  // spoke. Each spoke carries the whole-base side of both neighbors, so the
  // first subdivision lays a thick rhombus across every spoke.
  std::vector<Half> halves;
  for (int j = 0; j < 5; ++j) {
    Cyclo far = Cyclo::zeta(j) + Cyclo::zeta(j + 1);
    halves.push_back({HalfKind::Thick, {Cyclo::zeta(j), far, Cyclo()}, -1});
    halves.push_back({HalfKind::Thick, {Cyclo::zeta(j + 1), far, Cyclo()}, -1});
  }
  return Tiling("sun", std::move(halves));
}

Tiling Tiling::make(const std::string& seed_name, int k) {
  Tiling t = [&] {
    if (seed_name == "one-thick") return seed_one_thick();
    if (seed_name == "one-thin") return seed_one_thin();
    if (seed_name == "sun") return seed_sun();
    throw std::invalid_argument("unknown seed: " + seed_name);
  }();
  t.subdivide(k);
  return t;
}

void Tiling::subdivide() {
  const Generation& prev = gens_.back();
  Generation next;
  Census c = census(prev);
  next.halves.reserve(static_cast<std::size_t>(2 * c.thin + 3 * c.thick));
  for (std::size_t i = 0; i < prev.halves.size(); ++i) {
    const Half& h = prev.halves[i];
    auto pi = static_cast<std::int32_t>(i);
    Cyclo A = h.v[0].mul_phi(), B = h.v[1].mul_phi(), C = h.v[2].mul_phi();
    if (h.kind == HalfKind::Thin) {
      // Cut the leg AB at distance 1 from the apex.
      Cyclo P = A + (B - A).mul_inv_phi();
      next.halves.push_back({HalfKind::Thin, {C, P, B}, pi});
      next.halves.push_back({HalfKind::Thick, {P, C, A}, pi});
    } else {
      // Cut the leg BA at distance 1 from B and the base BC at distance phi.
      Cyclo Q = B + (A - B).mul_inv_phi();
      Cyclo R = B + (C - B).mul_inv_phi();
      next.halves.push_back({HalfKind::Thick, {R, C, A}, pi});
      next.halves.push_back({HalfKind::Thick, {Q, R, B}, pi});
      next.halves.push_back({HalfKind::Thin, {R, Q, A}, pi});
    }
  }
  gens_.push_back(std::move(next));
}

void Tiling::subdivide(int times) {
  for (int i = 0; i < times; ++i) subdivide();
}

void validate_generation(const Generation& g) {
  static const Golden kThinBase(2, -1);   // |short diagonal|^2 = 2 - phi
  static const Golden kThickBase(1, 1);   // |long diagonal|^2 = 1 + phi
  std::unordered_map<EdgeKey, std::vector<std::size_t>, EdgeKeyHash> legs;
  std::unordered_map<EdgeKey, std::vector<std::size_t>, EdgeKeyHash> bases;

  for (std::size_t i = 0; i < g.halves.size(); ++i) {
    const Half& h = g.halves[i];
    for (int l = 0; l < 2; ++l) {
      auto [a, b] = h.leg(l);
      require((b - a).norm2() == Golden{1},
              "leg length not 1 in " + describe(h));
    }
    const Golden& want = h.kind == HalfKind::Thin ? kThinBase : kThickBase;
    require((h.v[2] - h.v[1]).norm2() == want,
            "base length wrong in " + describe(h));
    require(!cross_coeff(h.v[1] - h.v[0], h.v[2] - h.v[0]).is_zero(),
            "degenerate half " + describe(h));
    legs[EdgeKey(h.v[0], h.v[1])].push_back(i);
    legs[EdgeKey(h.v[0], h.v[2])].push_back(i);
    bases[EdgeKey(h.v[1], h.v[2])].push_back(i);
  }

  // A point strictly off segment (a,b) sits on the side given by the cross
  // sign; two halves sharing a segment must sit on opposite sides.
  auto side = [](const Cyclo& a, const Cyclo& b, const Cyclo& t) {
    int s = cross_coeff(b - a, t - a).sign();
    require(s != 0, "vertex collinear with a shared segment");
    return s;
  };
  auto third_vertex = [&](std::size_t idx, const EdgeKey& e) -> const Cyclo& {
    const Half& h = g.halves[idx];
    for (const Cyclo& v : h.v)
      if (!(v == e.a) && !(v == e.b)) return v;
    throw InvariantError("half does not touch its own edge: " + describe(h));
  };
  // How the next subdivision treats the leg v0 -> v[l]: l == 1 is cut at
  // distance 1 from the apex (thin) or from v1 (thick); l == 2 stays whole
  // and receives a thick-child base anchored at v2. Facing sides must agree,
  // otherwise the cut points mismatch and T-vertices appear one level down.
  auto leg_mark = [&](std::size_t idx, const EdgeKey& e) {
    const Half& h = g.halves[idx];
    bool is_cut = e == EdgeKey(h.v[0], h.v[1]);
    const Cyclo& anchor =
        is_cut ? (h.kind == HalfKind::Thin ? h.v[0] : h.v[1]) : h.v[2];
    return std::make_pair(is_cut, anchor);
  };

  for (const auto& [e, owners] : legs) {
    require(owners.size() <= 2, "leg edge shared by more than two halves");
    if (owners.size() == 2) {
      require(side(e.a, e.b, third_vertex(owners[0], e)) !=
                  side(e.a, e.b, third_vertex(owners[1], e)),
              "two halves overlap across a leg edge");
      require(leg_mark(owners[0], e) == leg_mark(owners[1], e),
              "incompatible subdivision marks across a shared edge");
    }
  }
  for (const auto& [e, owners] : bases) {
    require(owners.size() <= 2, "base shared by more than two halves");
    if (owners.size() == 2) {
      const Half &h0 = g.halves[owners[0]], &h1 = g.halves[owners[1]];
      require(h0.kind == h1.kind, "mirror halves of different kind");
      require(h0.v[1] == h1.v[1] && h0.v[2] == h1.v[2],
              "mirror halves disagree on base labels");
      require(side(e.a, e.b, h0.v[0]) != side(e.a, e.b, h1.v[0]),
              "mirror halves on the same side of their base");
    }
  }
}

std::array<std::int64_t, 2> SupertilePartition::rhombus_census() const {
  std::array<std::int64_t, 2> halves{0, 0};
  for (std::size_t s = 0; s < super_kind.size(); ++s)
    halves[super_kind[s] == HalfKind::Thin ? 0 : 1] += whole[s] ? 2 : 1;
  require(halves[0] % 2 == 0 && halves[1] % 2 == 0,
          "clipped supertiles do not pair up across the patch");
  return {halves[0] / 2, halves[1] / 2};
}

SupertilePartition supertile_partition(const Tiling& t, int level) {
  require(level >= 0 && level <= t.k(), "supertile level out of range");
  int g = t.k() - level;
  const Generation& anc = t.gen(g);

  // Ancestor halves pair into rhombi along their bases. On the patch rim a
  // half's mirror partner can be missing; the lone half still forms its own
  // (clipped) supertile.
  std::unordered_map<EdgeKey, std::int32_t, EdgeKeyHash> rhombus;
  std::vector<std::int32_t> rhombus_of(anc.halves.size());
  SupertilePartition out;
  for (std::size_t i = 0; i < anc.halves.size(); ++i) {
    const Half& h = anc.halves[i];
    auto [it, fresh] = rhombus.try_emplace(
        EdgeKey(h.v[1], h.v[2]), static_cast<std::int32_t>(out.super_kind.size()));
    if (fresh) {
      out.super_kind.push_back(h.kind);
      out.whole.push_back(0);
    } else {
      require(!out.whole[it->second], "three halves share one base edge");
      out.whole[it->second] = 1;
    }
    require(out.super_kind[it->second] == h.kind,
            "halves of one supertile disagree on kind");
    rhombus_of[i] = it->second;
  }

  const Generation& fin = t.final_gen();
  out.super_of.resize(fin.halves.size());
  for (std::size_t i = 0; i < fin.halves.size(); ++i) {
    std::size_t a = i;
    for (int up = t.k(); up > g; --up)
      a = static_cast<std::size_t>(t.gen(up).halves[a].parent);
    out.super_of[i] = rhombus_of[a];
  }
  return out;
}

}  // namespace p3hc
