#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gpint/spec.hpp"

namespace gpint {

// Letters are generator indices; every generator is an involution. Canonical
// words are the ShortLex-least reduced representatives.
using CoxWord = std::vector<int>;

namespace detail {

// One pass of Tits' procedure: search the braid orbit of w for a word with
// an adjacent equal pair. Braid moves replace an alternating factor
// sts... of length m(s,t) by tst...; they apply only to finite entries.
// Returns the shortened word if a deletion was found, otherwise the whole
// orbit has been saturated and the word is reduced.
inline std::optional<CoxWord> tits_shorten(const CoxWord& w, const CoxeterSpec& cs,
                                           std::set<CoxWord>* orbit_out) {
  std::set<CoxWord> seen{w};
  std::deque<CoxWord> queue{w};
  while (!queue.empty()) {
    CoxWord v = queue.front();
    queue.pop_front();
    for (size_t i = 0; i + 1 < v.size(); ++i)
      if (v[i] == v[i + 1]) {
        CoxWord shorter = v;
        shorter.erase(shorter.begin() + i, shorter.begin() + i + 2);
        return shorter;
      }
    for (size_t i = 0; i + 1 < v.size(); ++i) {
      int s = v[i], t = v[i + 1];
      if (s == t) continue;
      std::int64_t m = cs.m[s][t];
      if (m == kInfinity || i + static_cast<size_t>(m) > v.size()) continue;
      bool alternating = true;
      for (size_t k = 0; k < static_cast<size_t>(m) && alternating; ++k)
        if (v[i + k] != (k % 2 == 0 ? s : t)) alternating = false;
      if (!alternating) continue;
      CoxWord moved = v;
      for (size_t k = 0; k < static_cast<size_t>(m); ++k)
        moved[i + k] = (k % 2 == 0 ? t : s);
      if (seen.insert(moved).second) queue.push_back(moved);
    }
  }
  if (orbit_out) *orbit_out = std::move(seen);
  return std::nullopt;
}

}  // namespace detail

inline CoxWord cox_reduce(CoxWord w, const CoxeterSpec& cs) {
  for (int g : w)
    if (g < 0 || g >= cs.size()) fail("unknown-generator", "letter index out of range");
  for (;;) {
    std::set<CoxWord> orbit;
    auto shorter = detail::tits_shorten(w, cs, &orbit);
    if (!shorter) return *orbit.begin();  // same-length orbit: begin() is lex-least
    w = std::move(*shorter);
  }
}

inline int cox_length(const CoxWord& w, const CoxeterSpec& cs) {
  return static_cast<int>(cox_reduce(w, cs).size());
}

// Letter-by-letter fold keeps intermediate words short (reduced·letter).
inline CoxWord cox_multiply(const CoxWord& x, const CoxWord& y, const CoxeterSpec& cs) {
  CoxWord acc = cox_reduce(x, cs);
  for (int letter : y) {
    acc.push_back(letter);
    acc = cox_reduce(acc, cs);
  }
  return acc;
}

inline CoxWord cox_invert(const CoxWord& x, const CoxeterSpec& cs) {
  CoxWord rev(x.rbegin(), x.rend());
  return cox_reduce(rev, cs);
}

inline GenSet cox_support(const CoxWord& canonical) {
  GenSet s = 0;
  for (int g : canonical) s = set_with(s, g);
  return s;
}

inline GenSet cox_left_descents(const CoxWord& w, const CoxeterSpec& cs) {
  CoxWord canon = cox_reduce(w, cs);
  GenSet out = 0;
  for (int s = 0; s < cs.size(); ++s) {
    CoxWord sw = canon;
    sw.insert(sw.begin(), s);
    if (cox_length(sw, cs) < static_cast<int>(canon.size())) out = set_with(out, s);
  }
  return out;
}

inline GenSet cox_right_descents(const CoxWord& w, const CoxeterSpec& cs) {
  CoxWord canon = cox_reduce(w, cs);
  GenSet out = 0;
  for (int s = 0; s < cs.size(); ++s) {
    CoxWord ws = canon;
    ws.push_back(s);
    if (cox_length(ws, cs) < static_cast<int>(canon.size())) out = set_with(out, s);
  }
  return out;
}

enum class CoxSide { left, right };

struct CoxCosetDecomp {
  CoxWord sub;  // ∈ W_I
  CoxWord rep;  // minimal coset representative
};

inline CoxCosetDecomp cox_coset_minimize(const CoxWord& w, GenSet types, CoxSide side,
                                         const CoxeterSpec& cs) {
  CoxWord d = cox_reduce(w, cs);
  CoxWord sub;
  for (;;) {
    bool stripped = false;
    for (int s = 0; s < cs.size() && !stripped; ++s) {
      if (!set_contains(types, s)) continue;
      CoxWord probe = d;
      if (side == CoxSide::left)
        probe.insert(probe.begin(), s);
      else
        probe.push_back(s);
      CoxWord shorter = cox_reduce(probe, cs);
      if (shorter.size() < d.size()) {
        d = std::move(shorter);
        if (side == CoxSide::left)
          sub.push_back(s);
        else
          sub.insert(sub.begin(), s);
        stripped = true;
      }
    }
    if (!stripped) break;
  }
  return {cox_reduce(sub, cs), d};
}

struct CoxDoubleCoset {
  CoxWord left;    // ∈ W_I
  CoxWord middle;  // minimal (I, J) double-coset representative
  CoxWord right;   // ∈ W_J
};

inline CoxDoubleCoset cox_double_coset_minimize(const CoxWord& w, GenSet left_types,
                                                GenSet right_types, const CoxeterSpec& cs) {
  CoxWord gl, gr;
  CoxWord d = cox_reduce(w, cs);
  for (;;) {
    bool changed = false;
    CoxCosetDecomp l = cox_coset_minimize(d, left_types, CoxSide::left, cs);
    if (!l.sub.empty()) {
      gl = cox_multiply(gl, l.sub, cs);
      d = l.rep;
      changed = true;
    }
    CoxCosetDecomp r = cox_coset_minimize(d, right_types, CoxSide::right, cs);
    if (!r.sub.empty()) {
      gr = cox_multiply(r.sub, gr, cs);
      d = r.rep;
      changed = true;
    }
    if (!changed) break;
  }
  return {gl, d, gr};
}

// A reflection wsw⁻¹, stored canonically; its wall is the edge set it
// stabilizes in the Cayley graph.
struct Reflection {
  CoxWord element;

  friend bool operator==(const Reflection& a, const Reflection& b) {
    return a.element == b.element;
  }
  friend bool operator<(const Reflection& a, const Reflection& b) {
    if (a.element.size() != b.element.size()) return a.element.size() < b.element.size();
    return a.element < b.element;
  }
};

inline Reflection make_reflection(const CoxWord& w, int s, const CoxeterSpec& cs) {
  CoxWord t = cox_multiply(cox_multiply(w, CoxWord{s}, cs), cox_invert(w, cs), cs);
  if (t.size() % 2 == 0) fail("internal-error", "reflection has even length");
  return Reflection{t};
}

enum class HalfSpace { plus, minus };

// plus iff t·w is longer than w; the two sides partition W and flip exactly
// when a gallery crosses the wall of t.
inline HalfSpace reflection_side(const Reflection& t, const CoxWord& w, const CoxeterSpec& cs) {
  CoxWord tw = cox_multiply(t.element, w, cs);
  return tw.size() > cox_reduce(w, cs).size() ? HalfSpace::plus : HalfSpace::minus;
}

// K = {s ∈ I : some r ∈ J satisfies s = d·r·d⁻¹}. Conjugation, not
// commutation: distinct commuting generators stay distinct here.
inline GenSet cox_k(const CoxWord& d, GenSet left_types, GenSet right_types,
                    const CoxeterSpec& cs) {
  GenSet k = 0;
  CoxWord dinv = cox_invert(d, cs);
  for (int r = 0; r < cs.size(); ++r) {
    if (!set_contains(right_types, r)) continue;
    CoxWord conj = cox_multiply(cox_multiply(d, CoxWord{r}, cs), dinv, cs);
    if (conj.size() == 1 && set_contains(left_types, conj[0])) k = set_with(k, conj[0]);
  }
  return k;
}

struct CoxParabolic {
  CoxWord conjugator;  // minimal representative of conjugator·W_types
  GenSet types = 0;

  friend bool operator==(const CoxParabolic& a, const CoxParabolic& b) {
    return a.types == b.types && a.conjugator == b.conjugator;
  }
};

inline CoxParabolic make_cox_parabolic(const CoxWord& conjugator, GenSet types,
                                       const CoxeterSpec& cs) {
  return CoxParabolic{cox_coset_minimize(conjugator, types, CoxSide::right, cs).rep, types};
}

// W_I ∩ wW_Jw⁻¹ = c·W_K·c⁻¹ with c = w_I from the double-coset
// normalization and K the conjugation trace of J through the minimal
// representative.
inline CoxParabolic cox_intersect(GenSet left_types, const CoxWord& w, GenSet right_types,
                                  const CoxeterSpec& cs) {
  CoxDoubleCoset dc = cox_double_coset_minimize(w, left_types, right_types, cs);
  GenSet k = cox_k(dc.middle, left_types, right_types, cs);
  return make_cox_parabolic(dc.left, k, cs);
}

inline bool cox_member(const CoxWord& u, const CoxParabolic& p, const CoxeterSpec& cs) {
  CoxWord rel = cox_multiply(cox_multiply(cox_invert(p.conjugator, cs), u, cs), p.conjugator, cs);
  return set_subset(cox_support(rel), p.types);
}

// ---- external word syntax (shared with the graph-product CLI) ----

inline CoxWord parse_cox_word(const std::string& text, const CoxeterSpec& cs) {
  CoxWord w;
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
    int g = cs.index_of(name);
    if (g < 0) fail("unknown-generator", "unknown generator '" + name + "'");
    if (exp % 2 != 0) w.push_back(g);  // letters are involutions
  }
  return w;
}

inline std::string format_cox_word(const CoxWord& w, const CoxeterSpec& cs) {
  if (w.empty()) return "e";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += cs.names[w[i]];
  }
  return out;
}

}  // namespace gpint
