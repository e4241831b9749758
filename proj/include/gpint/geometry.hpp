#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "gpint/words.hpp"

namespace gpint {

// A building-wall of type s, named by the minimal representative of the
// coset rep·Γ_star(s). Every rotation γ s^α γ⁻¹ around the wall has γ in
// that coset, so the pair (type, rep) is a canonical identifier.
struct WallId {
  int type = 0;
  NormalForm rep;

  friend bool operator==(const WallId& a, const WallId& b) {
    return a.type == b.type && a.rep == b.rep;
  }
  friend bool operator<(const WallId& a, const WallId& b) {
    if (a.type != b.type) return a.type < b.type;
    return shortlex_less(a.rep, b.rep);
  }
};

// Dial index of a chamber relative to a wall: the rep's own dial is 0, a
// rotation by s^k shifts dials by k. Residue mod m for finite order,
// arbitrary integer for infinite order.
using DialIndex = std::int64_t;

inline WallId make_wall(int type, const NormalForm& coset_member, const GroupSpec& spec) {
  if (type < 0 || type >= spec.size())
    fail("unknown-generator", "wall type index out of range");
  return WallId{type, coset_minimize(coset_member, spec.star(type), Side::right, spec).rep};
}

inline WallId wall_between(const NormalForm& x, const NormalForm& y, const GroupSpec& spec) {
  NormalForm z = multiply(invert(x, spec), y, spec);
  if (syllable_length(z) != 1)
    fail("not-adjacent", "chambers are not adjacent");
  return make_wall(z.syllables[0].gen, x, spec);
}

inline DialIndex dial_index(const WallId& wall, const NormalForm& x, const GroupSpec& spec) {
  NormalForm rel = multiply(invert(wall.rep, spec), x, spec);
  IPrefix p = i_prefix(rel, spec.star(wall.type), spec);
  for (const auto& s : p.prefix.syllables)
    if (s.gen == wall.type) return s.exp;
  return 0;
}

inline bool separates(const WallId& wall, const NormalForm& x, const NormalForm& y,
                      const GroupSpec& spec) {
  return dial_index(wall, x, spec) != dial_index(wall, y, spec);
}

// Witnessed gallery: chambers[k+1] = chambers[k] · step.gen^step.exp.
struct GalleryStep {
  int gen;
  std::int64_t exp;
};

struct Gallery {
  std::vector<NormalForm> chambers;
  std::vector<GalleryStep> steps;

  int length() const { return static_cast<int>(steps.size()); }
};

inline void validate_gallery(const Gallery& g, const GroupSpec& spec) {
  if (g.chambers.empty()) fail("bad-gallery", "gallery has no chambers");
  if (g.steps.size() + 1 != g.chambers.size())
    fail("bad-gallery", "gallery step count does not match chamber count");
  for (size_t k = 0; k < g.steps.size(); ++k) {
    if (canonical_exp(spec, g.steps[k].gen, g.steps[k].exp) == 0)
      fail("bad-gallery", "gallery step with trivial exponent");
    NormalForm expect =
        multiply(g.chambers[k], nf_power(spec, g.steps[k].gen, g.steps[k].exp), spec);
    if (expect != g.chambers[k + 1])
      fail("bad-gallery", "gallery step witness does not match chambers");
  }
}

// The canonical minimal gallery from x to y, stepping along the normal form
// of x⁻¹y.
inline Gallery geodesic_gallery(const NormalForm& x, const NormalForm& y,
                                const GroupSpec& spec) {
  Gallery g;
  g.chambers.push_back(x);
  NormalForm z = multiply(invert(x, spec), y, spec);
  for (const auto& s : z.syllables) {
    g.steps.push_back({s.gen, s.exp});
    g.chambers.push_back(multiply(g.chambers.back(), nf_power(spec, s.gen, s.exp), spec));
  }
  return g;
}

inline std::vector<WallId> crossed_walls(const Gallery& g, const GroupSpec& spec) {
  std::vector<WallId> out;
  for (size_t k = 0; k + 1 < g.chambers.size(); ++k)
    out.push_back(wall_between(g.chambers[k], g.chambers[k + 1], spec));
  return out;
}

// Minimal galleries cross every wall at most once; equivalently their length
// equals the endpoint distance. Both characterizations are computed and must
// agree.
inline bool is_minimal(const Gallery& g, const GroupSpec& spec) {
  validate_gallery(g, spec);
  auto walls = crossed_walls(g, spec);
  std::set<WallId> unique(walls.begin(), walls.end());
  bool no_repeat = unique.size() == walls.size();
  bool tight = g.length() == distance(g.chambers.front(), g.chambers.back(), spec);
  if (no_repeat != tight)
    fail("internal-error", "wall-crossing and distance minimality checks disagree");
  return tight;
}

// Walls separating x and y: collected along one minimal gallery; minimality
// makes the collection duplicate-free and of cardinality distance(x, y).
inline std::vector<WallId> separating_walls(const NormalForm& x, const NormalForm& y,
                                            const GroupSpec& spec) {
  auto walls = crossed_walls(geodesic_gallery(x, y, spec), spec);
  std::set<WallId> unique(walls.begin(), walls.end());
  if (static_cast<int>(unique.size()) != distance(x, y, spec))
    fail("internal-error", "separating wall count disagrees with distance");
  return std::vector<WallId>(unique.begin(), unique.end());
}

// M crosses γΣ_I iff type(M) ∈ I and the wall coset meets the sector coset,
// i.e. the minimal (I, star(type)) double-coset representative of
// base⁻¹·rep is trivial.
inline bool crosses_sector(const WallId& wall, const SectorRef& sector, const GroupSpec& spec) {
  if (!set_contains(sector.types, wall.type)) return false;
  NormalForm rel = multiply(invert(sector.base, spec), wall.rep, spec);
  return double_coset_minimize(rel, sector.types, spec.star(wall.type), spec)
      .middle.is_identity();
}

inline WallId translate_wall(const NormalForm& g, const WallId& wall, const GroupSpec& spec) {
  return make_wall(wall.type, multiply(g, wall.rep, spec), spec);
}

// The rotation rep·s^k·rep⁻¹ around the wall.
inline NormalForm rotation_for_wall(const WallId& wall, std::int64_t k, const GroupSpec& spec) {
  NormalForm p = multiply(wall.rep, nf_power(spec, wall.type, k), spec);
  return multiply(p, invert(wall.rep, spec), spec);
}

// Pointwise projection of a minimal gallery with consecutive duplicates
// collapsed. Defined only for minimal galleries; the result is minimal and
// consecutive distinct images are adjacent along the crossed wall.
inline Gallery gallery_image(const Gallery& g, const SectorRef& sector, const GroupSpec& spec) {
  if (!is_minimal(g, spec)) fail("not-minimal", "gallery image requires a minimal gallery");
  Gallery out;
  for (const auto& c : g.chambers) {
    NormalForm p = project_to_sector(c, sector, spec);
    if (!out.chambers.empty() && p == out.chambers.back()) continue;
    if (!out.chambers.empty()) {
      NormalForm z = multiply(invert(out.chambers.back(), spec), p, spec);
      if (syllable_length(z) != 1)
        fail("internal-error", "projected gallery step is not an adjacency");
      out.steps.push_back({z.syllables[0].gen, z.syllables[0].exp});
    }
    out.chambers.push_back(p);
  }
  return out;
}

inline std::string format_wall(const WallId& wall, const GroupSpec& spec) {
  return spec.names[wall.type] + "," + format_nf(wall.rep, spec);
}

inline WallId parse_wall(const std::string& text, const GroupSpec& spec) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    fail("parse-error", "wall must be written '<type>,<representative word>'");
  int type = spec.index_of(text.substr(0, comma));
  if (type < 0) fail("unknown-generator", "unknown wall type in '" + text + "'");
  return make_wall(type, parse_chamber(text.substr(comma + 1), spec), spec);
}

}  // namespace gpint
