#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "gpint/geometry.hpp"
#include "gpint/words.hpp"

namespace gpint {

// The subgroup conjugator·Γ_types·conjugator⁻¹. The conjugator is stored as
// the minimal representative of its Γ_types coset, which identifies
// descriptors exactly when they name the same sector.
struct ParabolicDesc {
  NormalForm conjugator;
  GenSet types = 0;

  friend bool operator==(const ParabolicDesc& a, const ParabolicDesc& b) {
    return a.types == b.types && a.conjugator == b.conjugator;
  }
};

inline void validate_against(const NormalForm& x, GenSet types, const GroupSpec& spec) {
  if (!set_subset(types, spec.all_gens()))
    fail("spec-mismatch", "type set references generators outside the spec");
  for (const auto& s : x.syllables)
    if (s.gen < 0 || s.gen >= spec.size())
      fail("spec-mismatch", "chamber references generators outside the spec");
}

inline ParabolicDesc make_parabolic(const NormalForm& conjugator, GenSet types,
                                    const GroupSpec& spec) {
  validate_against(conjugator, types, spec);
  return ParabolicDesc{coset_minimize(conjugator, types, Side::right, spec).rep, types};
}

// K = {s ∈ I∩J : s·d = d·s} for the minimized double-coset representative d.
inline GenSet commuting_k(const NormalForm& d, GenSet left_types, GenSet right_types,
                          const GroupSpec& spec) {
  GenSet k = 0;
  GenSet both = left_types & right_types;
  for (int s = 0; s < spec.size(); ++s) {
    if (!set_contains(both, s)) continue;
    NormalForm g = nf_power(spec, s, 1);
    if (multiply(g, d, spec) == multiply(d, g, spec)) k = set_with(k, s);
  }
  return k;
}

// Intersection of two parabolic subgroups. With P1 = aΓ_Ia⁻¹ and
// P2 = bΓ_Jb⁻¹, write γ = a⁻¹b = γ_I·d·γ_J; then
// P1 ∩ P2 = (a·γ_I)·Γ_K·(a·γ_I)⁻¹ with K the commuting part of I∩J.
inline ParabolicDesc intersect_parabolics(const ParabolicDesc& p1, const ParabolicDesc& p2,
                                          const GroupSpec& spec) {
  validate_against(p1.conjugator, p1.types, spec);
  validate_against(p2.conjugator, p2.types, spec);
  NormalForm gamma = multiply(invert(p1.conjugator, spec), p2.conjugator, spec);
  DoubleCosetDecomp dc = double_coset_minimize(gamma, p1.types, p2.types, spec);
  GenSet k = commuting_k(dc.middle, p1.types, p2.types, spec);
  NormalForm conj = multiply(p1.conjugator, dc.left, spec);
  return make_parabolic(conj, k, spec);
}

inline bool member_of_parabolic(const NormalForm& w, const ParabolicDesc& p,
                                const GroupSpec& spec) {
  NormalForm rel = multiply(multiply(invert(p.conjugator, spec), w, spec), p.conjugator, spec);
  return set_subset(support(rel), p.types);
}

// C⁺ = proj_{Σ_I}(γΣ_J), itself a sector: the γ_I-translate of Σ_K.
inline SectorRef c_plus(GenSet left_types, const NormalForm& gamma, GenSet right_types,
                        const GroupSpec& spec) {
  DoubleCosetDecomp dc = double_coset_minimize(gamma, left_types, right_types, spec);
  GenSet k = commuting_k(dc.middle, left_types, right_types, spec);
  return make_sector(dc.left, k, spec);
}

struct SectorMatch {
  SectorRef sector;
  int radius = 0;
};

// Desk-scale rendering of the sector criterion: decide whether C is (a
// metric ball of) a sector. Translate the ShortLex-least chamber to the
// base, read I off the length-1 elements, and compare against the layered
// ball of Γ_I. Sectors over infinite-order types have infinite balls, so a
// finite C can never match them.
inline std::optional<SectorMatch> sector_recognize(const std::vector<NormalForm>& chambers,
                                                   const GroupSpec& spec) {
  if (chambers.empty()) return std::nullopt;
  NormalForm c0 = *std::min_element(chambers.begin(), chambers.end(), ShortLex{});
  NormalForm c0inv = invert(c0, spec);
  std::set<NormalForm, ShortLex> rel;
  for (const auto& c : chambers) rel.insert(multiply(c0inv, c, spec));

  GenSet types = 0;
  int rmax = 0;
  for (const auto& x : rel) {
    if (syllable_length(x) == 1) types = set_with(types, x.syllables[0].gen);
    rmax = std::max(rmax, syllable_length(x));
  }
  for (const auto& x : rel)
    if (!set_subset(support(x), types)) return std::nullopt;
  for (int g = 0; g < spec.size(); ++g)
    if (set_contains(types, g) && !spec.finite_order(g)) return std::nullopt;

  std::set<NormalForm, ShortLex> ball{nf_identity()};
  std::vector<NormalForm> layer{nf_identity()};
  for (int r = 0;; ++r) {
    if (ball == rel) return SectorMatch{make_sector(c0, types, spec), r};
    if (r == rmax) return std::nullopt;
    std::vector<NormalForm> next;
    for (const auto& x : layer)
      for (int g = 0; g < spec.size(); ++g) {
        if (!set_contains(types, g)) continue;
        for (std::int64_t e = 1; e < spec.orders[g]; ++e) {
          NormalForm y = multiply(x, nf_power(spec, g, e), spec);
          if (syllable_length(y) != r + 1) continue;
          if (!ball.insert(y).second) continue;
          if (!rel.count(y)) return std::nullopt;  // ball escapes C
          next.push_back(y);
        }
      }
    if (next.empty() && ball != rel) return std::nullopt;  // Γ_types saturated short of C
    layer = std::move(next);
  }
}

struct WallRotation {
  WallId wall;
  NormalForm rotation;  // rep · s · rep⁻¹
};

// One rotation per wall crossing C (walls read off adjacent pairs inside C),
// deduplicated by wall and emitted in wall order.
inline std::vector<WallRotation> stabilizer_generators(const std::vector<NormalForm>& chambers,
                                                       const GroupSpec& spec) {
  if (chambers.empty()) fail("bad-input", "empty chamber set");
  std::map<WallId, NormalForm> rotations;
  for (size_t i = 0; i < chambers.size(); ++i)
    for (size_t j = i + 1; j < chambers.size(); ++j) {
      NormalForm z = multiply(invert(chambers[i], spec), chambers[j], spec);
      if (syllable_length(z) != 1) continue;
      WallId wall = wall_between(chambers[i], chambers[j], spec);
      if (!rotations.count(wall)) rotations.emplace(wall, rotation_for_wall(wall, 1, spec));
    }
  std::vector<WallRotation> out;
  out.reserve(rotations.size());
  for (auto& [wall, rot] : rotations) out.push_back({wall, rot});
  return out;
}

inline std::string format_parabolic(const ParabolicDesc& p, const GroupSpec& spec) {
  return "conjugator=" + format_nf(p.conjugator, spec) + " types=" + format_gen_set(p.types, spec);
}

// CLI syntax "<conjugator word>,<type set>"; the conjugator contains no
// commas, so the first comma splits.
inline ParabolicDesc parse_parabolic(const std::string& text, const GroupSpec& spec) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    fail("parse-error", "parabolic must be written '<conjugator>,<types>'");
  NormalForm conj = parse_chamber(text.substr(0, comma), spec);
  GenSet types = parse_gen_set(text.substr(comma + 1), spec);
  return make_parabolic(conj, types, spec);
}

}  // namespace gpint
