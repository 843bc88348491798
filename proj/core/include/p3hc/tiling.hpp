#pragma once

#include "p3hc/cyclo.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace p3hc {

// A rhombus half (Robinson triangle). Thin = acute golden triangle: apex 36
// degrees at the narrow rhombus corner, base angles 72, base = short diagonal
// of length 1/phi. Thick = golden gnomon: apex 108 degrees at the wide rhombus
// corner, base angles 36, base = long diagonal of length phi.
enum class HalfKind : std::uint8_t { Thin, Thick };

struct Half {
  HalfKind kind;
  // v[0] = apex, v[1] and v[2] = base corners. The legs (v0,v1), (v0,v2) are
  // unit rhombus edges; the base (v1,v2) is a diagonal and never a graph edge.
  std::array<Cyclo, 3> v;
  // Index into the previous generation, -1 for seed halves.
  std::int32_t parent = -1;

  std::pair<Cyclo, Cyclo> leg(int i) const {
    return {v[0], v[i == 0 ? 1 : 2]};
  }
  // Corner angle in units of 36 degrees at vertex index j (0..2).
  int corner_units(int j) const {
    if (kind == HalfKind::Thin) return j == 0 ? 1 : 2;
    return j == 0 ? 3 : 1;
  }
};

struct Generation {
  std::vector<Half> halves;
};

struct Census {
  std::int64_t thin = 0;
  std::int64_t thick = 0;
  std::int64_t total() const { return thin + thick; }
  friend bool operator==(const Census&, const Census&) = default;
};

Census census(const Generation& g);
// Image of a seed census under k substitution steps of the half-tile matrix
// [[1,1],[1,2]]: thin -> thin + thick, thick -> thin + 2 thick.
Census census_after(Census seed, int k);

// Substitution tiling. Keeps every generation; generation g's coordinates are
// in its own units (unit rhombus edge), so a generation-g point corresponds to
// phi^(k-g) times itself in final-generation units.
class Tiling {
 public:
  static Tiling seed_one_thick();
  static Tiling seed_one_thin();
  static Tiling seed_sun();
  static Tiling make(const std::string& seed_name, int k);

  // Appends one generation: scale everything by phi, then cut each half.
  void subdivide();
  void subdivide(int times);

  int k() const { return static_cast<int>(gens_.size()) - 1; }
  const Generation& gen(int g) const { return gens_.at(g); }
  const Generation& final_gen() const { return gens_.back(); }
  const std::string& seed_name() const { return seed_name_; }

  Cyclo to_final(Cyclo p, int g) const {
    for (int i = g; i < k(); ++i) p = p.mul_phi();
    return p;
  }

 private:
  Tiling(std::string name, std::vector<Half> seed);
  std::vector<Generation> gens_;
  std::string seed_name_;
};

// Structural checks on one generation; throws InvariantError with a witness on
// the first violation. Covers leg/base lengths, no duplicate halves, at most
// two halves per undirected leg edge (on opposite sides when two), and mirror
// pairing across bases.
void validate_generation(const Generation& g);

// Grouping of the final generation's halves by their ancestor rhombus `level`
// generations up. Supertile ids are dense, numbered in ancestor scan order.
struct SupertilePartition {
  std::vector<std::int32_t> super_of;  // final-gen half index -> supertile id
  std::vector<HalfKind> super_kind;    // supertile id -> ancestor rhombus kind
  std::vector<char> whole;             // 1 when both ancestor halves are present
  std::int64_t groups() const { return static_cast<std::int64_t>(super_kind.size()); }
  // Totals in whole-rhombus units: a clipped supertile sitting on the patch
  // rim carries a single ancestor half and counts as one half of a rhombus.
  // Patches are unions of mirror-paired seeds, so the totals are integral.
  std::array<std::int64_t, 2> rhombus_census() const;  // {thin, thick}
};

SupertilePartition supertile_partition(const Tiling& t, int level);

}  // namespace p3hc
