#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gpint/spec.hpp"

namespace gpint {

// A syllable is a nonzero power s^α of a single generator. For finite order
// m the exponent is kept in [1, m-1]; for infinite order it is any nonzero
// machine integer (merges are overflow-checked).
struct Syllable {
  int gen;
  std::int64_t exp;

  friend bool operator==(const Syllable& a, const Syllable& b) {
    return a.gen == b.gen && a.exp == b.exp;
  }
  friend bool operator<(const Syllable& a, const Syllable& b) {
    return a.gen != b.gen ? a.gen < b.gen : a.exp < b.exp;
  }
};

// Free-monoid word over syllables, before imposing any relation.
struct Word {
  std::vector<Syllable> syllables;
};

// Canonical reduced form: no shuffle-mergeable pair of equal-generator
// syllables remains, and among all shuffle-equivalent reduced words this is
// the lexicographically least one (by generator index, ties impossible).
// Chambers of the chamber system are identified with these.
struct NormalForm {
  std::vector<Syllable> syllables;

  bool is_identity() const { return syllables.empty(); }
  friend bool operator==(const NormalForm& a, const NormalForm& b) {
    return a.syllables == b.syllables;
  }
  friend bool operator!=(const NormalForm& a, const NormalForm& b) { return !(a == b); }
};

using Chamber = NormalForm;

// ShortLex: syllable count first, then (gen, exp) lexicographically.
inline bool shortlex_less(const NormalForm& a, const NormalForm& b) {
  if (a.syllables.size() != b.syllables.size())
    return a.syllables.size() < b.syllables.size();
  return a.syllables < b.syllables;
}

struct ShortLex {
  bool operator()(const NormalForm& a, const NormalForm& b) const {
    return shortlex_less(a, b);
  }
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r))
    fail("overflow", "exponent overflow on an infinite-order generator");
  return r;
}

inline std::int64_t checked_neg(std::int64_t a) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(std::int64_t{0}, a, &r))
    fail("overflow", "exponent overflow on an infinite-order generator");
  return r;
}

// Exponent representative: [0, m-1] for finite order m (0 meaning the
// syllable vanishes), the value itself for infinite order.
inline std::int64_t canonical_exp(const GroupSpec& spec, int gen, std::int64_t e) {
  if (!spec.finite_order(gen)) return e;
  std::int64_t m = spec.orders[gen];
  std::int64_t r = e % m;
  if (r < 0) r += m;
  return r;
}

namespace detail {

// Right-multiply a reduced syllable list by s^exp (exp canonical, nonzero).
// Scans from the back: the first equal-generator syllable reachable across
// commuting separators absorbs the exponent; a non-commuting generator in
// between blocks the merge and the syllable is appended.
inline void right_mul_syllable(std::vector<Syllable>& list, const GroupSpec& spec,
                               int gen, std::int64_t exp) {
  for (auto it = list.rbegin(); it != list.rend(); ++it) {
    if (it->gen == gen) {
      std::int64_t merged = canonical_exp(spec, gen, checked_add(it->exp, exp));
      if (merged == 0)
        list.erase(std::next(it).base());
      else
        it->exp = merged;
      return;
    }
    if (!spec.commutes(it->gen, gen)) break;
  }
  list.push_back({gen, exp});
}

// Lexicographic normal form of a reduced list: greedily emit the least
// front-movable generator. A syllable is front-movable when every earlier
// syllable commutes with it.
inline void lex_sort_reduced(std::vector<Syllable>& list, const GroupSpec& spec) {
  std::vector<Syllable> out;
  out.reserve(list.size());
  while (!list.empty()) {
    int best = -1;
    for (size_t j = 0; j < list.size(); ++j) {
      bool movable = true;
      for (size_t i = 0; i < j && movable; ++i)
        if (!spec.commutes(list[i].gen, list[j].gen)) movable = false;
      if (movable && (best < 0 || list[j].gen < list[best].gen))
        best = static_cast<int>(j);
    }
    out.push_back(list[best]);
    list.erase(list.begin() + best);
  }
  list = std::move(out);
}

}  // namespace detail

inline NormalForm reduce(const Word& w, const GroupSpec& spec) {
  std::vector<Syllable> list;
  for (const auto& s : w.syllables) {
    if (s.gen < 0 || s.gen >= spec.size())
      fail("unknown-generator", "syllable generator index out of range");
    std::int64_t e = canonical_exp(spec, s.gen, s.exp);
    if (e == 0) continue;
    detail::right_mul_syllable(list, spec, s.gen, e);
  }
  detail::lex_sort_reduced(list, spec);
  return NormalForm{std::move(list)};
}

inline NormalForm nf_identity() { return NormalForm{}; }

inline NormalForm nf_power(const GroupSpec& spec, int gen, std::int64_t exp) {
  std::int64_t e = canonical_exp(spec, gen, exp);
  if (e == 0) return nf_identity();
  return NormalForm{{Syllable{gen, e}}};
}

inline NormalForm multiply(const NormalForm& x, const NormalForm& y, const GroupSpec& spec) {
  std::vector<Syllable> list = x.syllables;
  for (const auto& s : y.syllables) detail::right_mul_syllable(list, spec, s.gen, s.exp);
  detail::lex_sort_reduced(list, spec);
  return NormalForm{std::move(list)};
}

inline NormalForm invert(const NormalForm& x, const GroupSpec& spec) {
  std::vector<Syllable> list;
  list.reserve(x.syllables.size());
  for (auto it = x.syllables.rbegin(); it != x.syllables.rend(); ++it) {
    std::int64_t e = spec.finite_order(it->gen)
                         ? canonical_exp(spec, it->gen, spec.orders[it->gen] - it->exp)
                         : checked_neg(it->exp);
    list.push_back({it->gen, e});
  }
  detail::lex_sort_reduced(list, spec);
  return NormalForm{std::move(list)};
}

inline int syllable_length(const NormalForm& x) {
  return static_cast<int>(x.syllables.size());
}

// Gallery metric: d(x, y) = syllable length of x⁻¹y.
inline int distance(const NormalForm& x, const NormalForm& y, const GroupSpec& spec) {
  return syllable_length(multiply(invert(x, spec), y, spec));
}

inline GenSet support(const NormalForm& x) {
  GenSet s = 0;
  for (const auto& syl : x.syllables) s = set_with(s, syl.gen);
  return s;
}

// (s, α) such that some normal form of x begins with s^α; these are exactly
// the front-movable syllables, and their generators are pairwise distinct.
inline std::vector<Syllable> left_descents(const NormalForm& x, const GroupSpec& spec) {
  std::vector<Syllable> out;
  const auto& l = x.syllables;
  for (size_t j = 0; j < l.size(); ++j) {
    bool movable = true;
    for (size_t i = 0; i < j && movable; ++i)
      if (!spec.commutes(l[i].gen, l[j].gen)) movable = false;
    if (movable) out.push_back(l[j]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Syllable> right_descents(const NormalForm& x, const GroupSpec& spec) {
  const auto& l = x.syllables;
  std::vector<Syllable> out;
  for (size_t j = 0; j < l.size(); ++j) {
    bool movable = true;
    for (size_t i = j + 1; i < l.size() && movable; ++i)
      if (!spec.commutes(l[i].gen, l[j].gen)) movable = false;
    if (movable) out.push_back(l[j]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct IPrefix {
  NormalForm prefix;     // the Γ_I part
  NormalForm remainder;  // no left descent of a type in I
};

// x = prefix · remainder, lengths additive, prefix ∈ Γ_I maximal. Descents
// are stripped in ascending generator index; the resulting group element is
// unique (oracle-tested).
inline IPrefix i_prefix(const NormalForm& x, GenSet types, const GroupSpec& spec) {
  std::vector<Syllable> work = x.syllables;
  std::vector<Syllable> prefix;
  for (;;) {
    int best = -1;
    for (size_t j = 0; j < work.size(); ++j) {
      if (!set_contains(types, work[j].gen)) continue;
      bool movable = true;
      for (size_t i = 0; i < j && movable; ++i)
        if (!spec.commutes(work[i].gen, work[j].gen)) movable = false;
      if (movable && (best < 0 || work[j].gen < work[best].gen))
        best = static_cast<int>(j);
    }
    if (best < 0) break;
    prefix.push_back(work[best]);
    work.erase(work.begin() + best);
  }
  detail::lex_sort_reduced(prefix, spec);
  detail::lex_sort_reduced(work, spec);
  return {NormalForm{std::move(prefix)}, NormalForm{std::move(work)}};
}

struct ISuffix {
  NormalForm remainder;  // no right descent of a type in I
  NormalForm suffix;     // the Γ_I part
};

inline ISuffix i_suffix(const NormalForm& x, GenSet types, const GroupSpec& spec) {
  IPrefix p = i_prefix(invert(x, spec), types, spec);
  return {invert(p.remainder, spec), invert(p.prefix, spec)};
}

enum class Side { left, right };

struct CosetDecomp {
  NormalForm sub;  // factor in Γ_I
  NormalForm rep;  // minimal coset representative
};

// side == left:  x = sub · rep, rep minimal in Γ_I x (no left I-descent).
// side == right: x = rep · sub, rep minimal in x Γ_I (no right I-descent).
inline CosetDecomp coset_minimize(const NormalForm& x, GenSet types, Side side,
                                  const GroupSpec& spec) {
  if (side == Side::left) {
    IPrefix p = i_prefix(x, types, spec);
    return {p.prefix, p.remainder};
  }
  ISuffix s = i_suffix(x, types, spec);
  return {s.suffix, s.remainder};
}

struct DoubleCosetDecomp {
  NormalForm left;    // ∈ Γ_I
  NormalForm middle;  // the minimal (I, J) double-coset representative
  NormalForm right;   // ∈ Γ_J
};

// γ = left · middle · right with lengths additive; middle has no left
// descent in I and no right descent in J. Alternating strip terminates since
// the middle length strictly decreases whenever anything is stripped.
inline DoubleCosetDecomp double_coset_minimize(const NormalForm& x, GenSet left_types,
                                               GenSet right_types, const GroupSpec& spec) {
  NormalForm gl = nf_identity(), gr = nf_identity(), d = x;
  for (;;) {
    bool changed = false;
    IPrefix p = i_prefix(d, left_types, spec);
    if (!p.prefix.is_identity()) {
      gl = multiply(gl, p.prefix, spec);
      d = p.remainder;
      changed = true;
    }
    ISuffix s = i_suffix(d, right_types, spec);
    if (!s.suffix.is_identity()) {
      gr = multiply(s.suffix, gr, spec);
      d = s.remainder;
      changed = true;
    }
    if (!changed) break;
  }
  return {gl, d, gr};
}

// A coset γΓ_I viewed as the I-sector containing γ(x₀). The stored base is
// the minimal coset representative, so equal sectors compare equal.
struct SectorRef {
  NormalForm base;
  GenSet types = 0;

  friend bool operator==(const SectorRef& a, const SectorRef& b) {
    return a.types == b.types && a.base == b.base;
  }
};

inline SectorRef make_sector(const NormalForm& base, GenSet types, const GroupSpec& spec) {
  return SectorRef{coset_minimize(base, types, Side::right, spec).rep, types};
}

inline bool sector_contains(const SectorRef& sector, const NormalForm& x,
                            const GroupSpec& spec) {
  return set_subset(support(multiply(invert(sector.base, spec), x, spec)), sector.types);
}

// The unique nearest chamber of the sector (gate property tested against
// the oracle): γ · prefix where γ⁻¹x = prefix · remainder over I.
inline NormalForm project_to_sector(const NormalForm& x, const SectorRef& sector,
                                    const GroupSpec& spec) {
  NormalForm rel = multiply(invert(sector.base, spec), x, spec);
  IPrefix p = i_prefix(rel, sector.types, spec);
  return multiply(sector.base, p.prefix, spec);
}

// ---- external word syntax: "a b^2 c^-1", identity "e" ----

inline Word parse_word(const std::string& text, const GroupSpec& spec) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "e") continue;
    std::string name = tok;
    std::int64_t exp = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      name = tok.substr(0, caret);
      std::string rest = tok.substr(caret + 1);
      try {
        size_t pos = 0;
        exp = std::stoll(rest, &pos);
        if (pos != rest.size() || rest.empty()) fail("parse-error", "bad exponent in '" + tok + "'");
      } catch (const Error&) {
        throw;
      } catch (const std::exception&) {
        fail("parse-error", "bad exponent in '" + tok + "'");
      }
    }
    int g = spec.index_of(name);
    if (g < 0) fail("unknown-generator", "unknown generator '" + name + "'");
    std::int64_t e = canonical_exp(spec, g, exp);
    if (e != 0) w.syllables.push_back({g, e});
  }
  return w;
}

inline NormalForm parse_chamber(const std::string& text, const GroupSpec& spec) {
  return reduce(parse_word(text, spec), spec);
}

inline std::string format_syllable(const Syllable& s, const GroupSpec& spec) {
  if (s.exp == 1) return spec.names[s.gen];
  return spec.names[s.gen] + "^" + std::to_string(s.exp);
}

inline std::string format_word(const std::vector<Syllable>& syllables, const GroupSpec& spec) {
  if (syllables.empty()) return "e";
  std::string out;
  for (size_t i = 0; i < syllables.size(); ++i) {
    if (i) out += ' ';
    out += format_syllable(syllables[i], spec);
  }
  return out;
}

inline std::string format_nf(const NormalForm& x, const GroupSpec& spec) {
  return format_word(x.syllables, spec);
}

}  // namespace gpint
