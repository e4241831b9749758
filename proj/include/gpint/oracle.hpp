#pragma once

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gpint/coxeter.hpp"
#include "gpint/parabolic.hpp"
#include "gpint/words.hpp"

namespace gpint {

// Brute-force machinery, kept deliberately separate from the main engine:
// the reduction below shares only the Syllable data type with words.hpp and
// reduces by exhaustive single-step rewriting instead of targeted merging,
// so the differential tests compare genuinely different code paths.

inline constexpr size_t kOracleWordBound = 12;
inline constexpr size_t kDefaultBallCap = 200000;

namespace oracle_detail {

inline std::int64_t norm_exp(const GroupSpec& spec, int gen, std::int64_t e) {
  if (!spec.finite_order(gen)) return e;
  std::int64_t m = spec.orders[gen];
  std::int64_t r = e % m;
  return r < 0 ? r + m : r;
}

inline std::vector<Syllable> seed_word(const Word& w, const GroupSpec& spec) {
  std::vector<Syllable> cur;
  for (const auto& s : w.syllables) {
    if (s.gen < 0 || s.gen >= spec.size())
      fail("unknown-generator", "syllable generator index out of range");
    std::int64_t e = norm_exp(spec, s.gen, s.exp);
    if (e != 0) cur.push_back({s.gen, e});
  }
  return cur;
}

}  // namespace oracle_detail

// Exhaustive rewriting: breadth-first over adjacent transpositions of
// commuting syllables, applying the first adjacent equal-generator merge
// found anywhere in the orbit, until no orbit word can be shortened; the
// lexicographically least orbit word is the canonical form.
inline NormalForm oracle_reduce(const Word& w, const GroupSpec& spec) {
  using List = std::vector<Syllable>;
  List cur = oracle_detail::seed_word(w, spec);
  if (cur.size() > kOracleWordBound)
    fail("bound-exceeded", "oracle reduction is limited to words of at most 12 syllables");
  for (;;) {
    std::set<List> seen{cur};
    std::deque<List> queue{cur};
    bool shortened = false;
    while (!queue.empty()) {
      List v = queue.front();
      queue.pop_front();
      for (size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i].gen == v[i + 1].gen) {
          std::int64_t e =
              oracle_detail::norm_exp(spec, v[i].gen, checked_add(v[i].exp, v[i + 1].exp));
          List merged(v.begin(), v.begin() + i);
          if (e != 0) merged.push_back({v[i].gen, e});
          merged.insert(merged.end(), v.begin() + i + 2, v.end());
          cur = std::move(merged);
          shortened = true;
          break;
        }
      if (shortened) break;
      for (size_t i = 0; i + 1 < v.size(); ++i) {
        if (!spec.commutes(v[i].gen, v[i + 1].gen)) continue;
        List swapped = v;
        std::swap(swapped[i], swapped[i + 1]);
        if (seen.insert(swapped).second) queue.push_back(swapped);
      }
    }
    if (!shortened) return NormalForm{*seen.begin()};
  }
}

inline NormalForm oracle_mul(const NormalForm& x, const NormalForm& y, const GroupSpec& spec) {
  Word w;
  w.syllables = x.syllables;
  w.syllables.insert(w.syllables.end(), y.syllables.begin(), y.syllables.end());
  return oracle_reduce(w, spec);
}

inline NormalForm oracle_inv(const NormalForm& x, const GroupSpec& spec) {
  Word w;
  for (auto it = x.syllables.rbegin(); it != x.syllables.rend(); ++it)
    w.syllables.push_back({it->gen, spec.finite_order(it->gen)
                                        ? spec.orders[it->gen] - it->exp
                                        : checked_neg(it->exp)});
  return oracle_reduce(w, spec);
}

inline NormalForm oracle_conjugate(const NormalForm& a, const NormalForm& w,
                                   const GroupSpec& spec) {
  return oracle_mul(oracle_mul(a, w, spec), oracle_inv(a, spec), spec);
}

// All canonical forms of syllable length <= radius; exponents of
// infinite-order generators are truncated to |exp| <= exp_cap (a panel of an
// infinite-order generator holds infinitely many chambers, so some cap is
// unavoidable). Layered generation is exact for the capped set because every
// prefix of a capped form is capped.
struct Ball {
  int radius = 0;
  std::int64_t exp_cap = 2;
  bool saturated = false;  // some layer came out empty: the capped set is complete
  std::vector<NormalForm> elements;  // ShortLex order
  std::vector<size_t> layer_sizes;

  bool contains(const NormalForm& x) const {
    return std::binary_search(elements.begin(), elements.end(), x, ShortLex{});
  }
  size_t index_of(const NormalForm& x) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), x, ShortLex{});
    if (it == elements.end() || !(*it == x)) fail("internal-error", "chamber not in ball");
    return static_cast<size_t>(it - elements.begin());
  }
};

inline std::vector<std::int64_t> generator_exponents(const GroupSpec& spec, int gen,
                                                     std::int64_t exp_cap) {
  std::vector<std::int64_t> exps;
  if (spec.finite_order(gen)) {
    for (std::int64_t e = 1; e < spec.orders[gen]; ++e) exps.push_back(e);
  } else {
    for (std::int64_t e = 1; e <= exp_cap; ++e) {
      exps.push_back(e);
      exps.push_back(-e);
    }
  }
  return exps;
}

inline bool within_exp_cap(const NormalForm& x, const GroupSpec& spec, std::int64_t cap) {
  for (const auto& s : x.syllables)
    if (!spec.finite_order(s.gen) && (s.exp > cap || s.exp < -cap)) return false;
  return true;
}

inline Ball enumerate_ball(const GroupSpec& spec, int radius, std::int64_t exp_cap = 2,
                           GenSet gens = ~GenSet{0}, size_t size_cap = kDefaultBallCap) {
  if (radius < 0) fail("bad-input", "ball radius must be nonnegative");
  gens &= spec.all_gens();
  Ball ball;
  ball.radius = radius;
  ball.exp_cap = exp_cap;
  std::set<NormalForm, ShortLex> seen{nf_identity()};
  std::vector<NormalForm> layer{nf_identity()};
  ball.layer_sizes.push_back(1);
  for (int k = 0; k < radius; ++k) {
    std::vector<NormalForm> next;
    for (const auto& x : layer)
      for (int g = 0; g < spec.size(); ++g) {
        if (!set_contains(gens, g)) continue;
        for (std::int64_t e : generator_exponents(spec, g, exp_cap)) {
          Word w;
          w.syllables = x.syllables;
          w.syllables.push_back({g, e});
          NormalForm y = oracle_reduce(w, spec);
          if (syllable_length(y) != k + 1) continue;
          if (!within_exp_cap(y, spec, exp_cap)) continue;
          if (!seen.insert(y).second) continue;
          next.push_back(y);
          if (seen.size() > size_cap) fail("cap-exceeded", "ball size cap exceeded");
        }
      }
    ball.layer_sizes.push_back(next.size());
    if (next.empty()) {
      ball.saturated = true;
      break;
    }
    layer = std::move(next);
  }
  ball.elements.assign(seen.begin(), seen.end());
  return ball;
}

struct BallEdge {
  size_t src, dst;
  int gen;
  std::int64_t exp;
};

// Panel edges inside the ball, each unordered pair once (src ShortLex-least).
inline std::vector<BallEdge> ball_edges(const Ball& ball, const GroupSpec& spec) {
  std::vector<BallEdge> edges;
  for (size_t i = 0; i < ball.elements.size(); ++i) {
    const NormalForm& x = ball.elements[i];
    for (int g = 0; g < spec.size(); ++g)
      for (std::int64_t e : generator_exponents(spec, g, 2 * ball.exp_cap)) {
        Word w;
        w.syllables = x.syllables;
        w.syllables.push_back({g, e});
        NormalForm y = oracle_reduce(w, spec);
        if (!shortlex_less(x, y) || !ball.contains(y)) continue;
        edges.push_back({i, ball.index_of(y), g, e});
      }
  }
  return edges;
}

// Saturated enumeration of a finite group; errors out if the group does not
// close up within max_radius.
inline Ball enumerate_full_group(const GroupSpec& spec, int max_radius = 24,
                                 size_t size_cap = kDefaultBallCap) {
  Ball ball = enumerate_ball(spec, max_radius, /*exp_cap=*/2, ~GenSet{0}, size_cap);
  if (!ball.saturated)
    fail("not-finite", "group did not saturate within the radius bound");
  return ball;
}

// Subgroup closure inside a saturated enumeration: right-multiplying by the
// generators of Γ_I stays inside the group, so plain BFS is exact.
inline std::vector<NormalForm> subgroup_elements(const Ball& full, GenSet types,
                                                 const GroupSpec& spec) {
  std::set<NormalForm, ShortLex> seen{nf_identity()};
  std::deque<NormalForm> queue{nf_identity()};
  while (!queue.empty()) {
    NormalForm x = queue.front();
    queue.pop_front();
    for (int g = 0; g < spec.size(); ++g) {
      if (!set_contains(types, g)) continue;
      for (std::int64_t e : generator_exponents(spec, g, full.exp_cap)) {
        Word w;
        w.syllables = x.syllables;
        w.syllables.push_back({g, e});
        NormalForm y = oracle_reduce(w, spec);
        if (seen.insert(y).second) queue.push_back(y);
      }
    }
  }
  return std::vector<NormalForm>(seen.begin(), seen.end());
}

inline std::vector<NormalForm> conjugate_set(const NormalForm& a,
                                             const std::vector<NormalForm>& set,
                                             const GroupSpec& spec) {
  std::set<NormalForm, ShortLex> out;
  for (const auto& u : set) out.insert(oracle_conjugate(a, u, spec));
  return std::vector<NormalForm>(out.begin(), out.end());
}

// ---- exact-arithmetic faithful representation for right-angled Coxeter ----

struct IntMatrix {
  int n = 0;
  std::vector<std::int64_t> a;  // row-major

  static IntMatrix identity(int n) {
    IntMatrix m;
    m.n = n;
    m.a.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) m.a[static_cast<size_t>(i) * n + i] = 1;
    return m;
  }
  std::int64_t& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  std::int64_t at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
    return x.n == y.n && x.a == y.a;
  }
};

inline IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y) {
  IntMatrix r;
  r.n = x.n;
  r.a.assign(static_cast<size_t>(x.n) * x.n, 0);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      std::int64_t v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < x.n; ++j) {
        std::int64_t p = 0, s = 0;
        if (__builtin_mul_overflow(v, y.at(k, j), &p) ||
            __builtin_add_overflow(r.at(i, j), p, &s))
          fail("overflow", "matrix entry overflow in the geometric representation");
        r.at(i, j) = s;
      }
    }
  return r;
}

// Geometric representation over the integers: with B(e_s, e_t) = 0 for
// m(s,t) = 2 and -1 for m(s,t) = ∞, the reflection s maps e_s to -e_s,
// fixes e_t for commuting t and sends e_t to e_t + 2e_s otherwise. Faithful,
// so matrix equality decides the word problem without any reduction.
inline std::vector<IntMatrix> racg_matrix_rep(const CoxeterSpec& cs) {
  if (!cs.right_angled())
    fail("not-right-angled", "matrix representation requires all entries in {2, inf}");
  int n = cs.size();
  std::vector<IntMatrix> mats;
  mats.reserve(n);
  for (int s = 0; s < n; ++s) {
    IntMatrix m = IntMatrix::identity(n);
    m.at(s, s) = -1;
    for (int t = 0; t < n; ++t)
      if (t != s && cs.m[s][t] == kInfinity) m.at(s, t) = 2;
    mats.push_back(std::move(m));
  }
  return mats;
}

inline IntMatrix racg_rep_of(const std::vector<IntMatrix>& mats, const CoxWord& w) {
  IntMatrix acc = IntMatrix::identity(mats.empty() ? 0 : mats[0].n);
  for (int letter : w) acc = mat_mul(acc, mats[letter]);
  return acc;
}

// Same representation evaluated on a graph-product word over an all-orders-2
// spec (each syllable contributes its generator once per odd exponent).
inline IntMatrix racg_rep_of_word(const std::vector<IntMatrix>& mats, const Word& w) {
  IntMatrix acc = IntMatrix::identity(mats.empty() ? 0 : mats[0].n);
  for (const auto& s : w.syllables)
    if (s.exp % 2 != 0) acc = mat_mul(acc, mats[s.gen]);
  return acc;
}

// ---- the differential verifier for the intersection theorem ----

struct VerifyReport {
  bool ok = false;
  ParabolicDesc result;
  std::vector<NormalForm> lhs_only;  // in P1 ∩ P2 but rejected by the descriptor
  std::vector<NormalForm> rhs_only;  // accepted by the descriptor but not in P1 ∩ P2
};

// Membership on the oracle side is decided by the support of the
// independently reduced conjugate: w ∈ aΓ_Ia⁻¹ iff supp(a⁻¹wa) ⊆ I.
inline bool oracle_parabolic_member(const NormalForm& w, const ParabolicDesc& p,
                                    const GroupSpec& spec) {
  NormalForm rel = oracle_conjugate(oracle_inv(p.conjugator, spec), w, spec);
  return set_subset(support(rel), p.types);
}

inline VerifyReport verify_instance(const GroupSpec& spec, const ParabolicDesc& p1,
                                    const ParabolicDesc& p2, const Ball& universe) {
  VerifyReport report;
  report.result = intersect_parabolics(p1, p2, spec);
  for (const auto& w : universe.elements) {
    bool lhs = oracle_parabolic_member(w, p1, spec) && oracle_parabolic_member(w, p2, spec);
    bool rhs = member_of_parabolic(w, report.result, spec);
    if (lhs && !rhs) report.lhs_only.push_back(w);
    if (rhs && !lhs) report.rhs_only.push_back(w);
  }
  report.ok = report.lhs_only.empty() && report.rhs_only.empty();
  return report;
}

struct CampaignOptions {
  int radius = 3;
  int trials = 50;
  std::uint64_t seed = 1;
  std::int64_t exp_cap = 2;
  std::string spec_name = "spec";
};

struct CampaignInstance {
  GenSet left_types = 0;
  NormalForm gamma;
  GenSet right_types = 0;
};

struct CampaignReport {
  std::vector<std::string> lines;
  int failures = 0;
};

inline std::string campaign_field(const NormalForm& x, const GroupSpec& spec) {
  std::string s = format_nf(x, spec);
  std::replace(s.begin(), s.end(), ' ', '.');
  return s;
}

inline std::string run_one_instance(const GroupSpec& spec, const CampaignInstance& inst,
                                    const Ball& universe, const CampaignOptions& opts,
                                    int* failures) {
  ParabolicDesc p1 = make_parabolic(nf_identity(), inst.left_types, spec);
  ParabolicDesc p2 = make_parabolic(inst.gamma, inst.right_types, spec);
  VerifyReport rep = verify_instance(spec, p1, p2, universe);
  std::string line = "INSTANCE " + opts.spec_name + " " + format_gen_set(inst.left_types, spec) +
                     " " + campaign_field(inst.gamma, spec) + " " +
                     format_gen_set(inst.right_types, spec) + " " + std::to_string(opts.radius);
  if (rep.ok) {
    line += " OK";
  } else {
    ++*failures;
    line += " FAIL ";
    if (!rep.lhs_only.empty())
      line += "missing=" + campaign_field(rep.lhs_only.front(), spec);
    else
      line += "extra=" + campaign_field(rep.rhs_only.front(), spec);
  }
  return line;
}

// Seeded random campaign over theorem-form instances Γ_I vs γΓ_Jγ⁻¹.
// Reports reproduce bit-identically for a fixed seed.
inline CampaignReport run_campaign(const GroupSpec& spec, const CampaignOptions& opts) {
  CampaignReport report;
  Ball universe = enumerate_ball(spec, opts.radius, opts.exp_cap);
  std::mt19937_64 rng(opts.seed);
  GenSet all = spec.all_gens();
  for (int t = 0; t < opts.trials; ++t) {
    CampaignInstance inst;
    inst.left_types = static_cast<GenSet>(rng()) & all;
    inst.right_types = static_cast<GenSet>(rng()) & all;
    inst.gamma = universe.elements[rng() % universe.elements.size()];
    report.lines.push_back(run_one_instance(spec, inst, universe, opts, &report.failures));
  }
  return report;
}

inline CampaignReport run_instances(const GroupSpec& spec,
                                    const std::vector<CampaignInstance>& instances,
                                    const CampaignOptions& opts) {
  CampaignReport report;
  Ball universe = enumerate_ball(spec, opts.radius, opts.exp_cap);
  for (const auto& inst : instances)
    report.lines.push_back(run_one_instance(spec, inst, universe, opts, &report.failures));
  return report;
}

// ---- Coxeter-side enumeration (the Tits engine is the only reducer; the
// right-angled case additionally has the matrix oracle above) ----

struct CoxShortLex {
  bool operator()(const CoxWord& a, const CoxWord& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

struct CoxBall {
  int radius = 0;
  bool saturated = false;
  std::vector<CoxWord> elements;  // ShortLex order
  std::vector<size_t> layer_sizes;

  bool contains(const CoxWord& x) const {
    return std::binary_search(elements.begin(), elements.end(), x, CoxShortLex{});
  }
};

inline CoxBall enumerate_cox_ball(const CoxeterSpec& cs, int radius,
                                  size_t size_cap = kDefaultBallCap) {
  CoxBall ball;
  ball.radius = radius;
  std::set<CoxWord, CoxShortLex> seen{CoxWord{}};
  std::vector<CoxWord> layer{CoxWord{}};
  ball.layer_sizes.push_back(1);
  for (int k = 0; k < radius; ++k) {
    std::vector<CoxWord> next;
    for (const auto& x : layer)
      for (int g = 0; g < cs.size(); ++g) {
        CoxWord w = x;
        w.push_back(g);
        CoxWord y = cox_reduce(w, cs);
        if (static_cast<int>(y.size()) != k + 1) continue;
        if (!seen.insert(y).second) continue;
        next.push_back(y);
        if (seen.size() > size_cap) fail("cap-exceeded", "ball size cap exceeded");
      }
    ball.layer_sizes.push_back(next.size());
    if (next.empty()) {
      ball.saturated = true;
      break;
    }
    layer = std::move(next);
  }
  ball.elements.assign(seen.begin(), seen.end());
  return ball;
}

inline CoxBall enumerate_cox_full_group(const CoxeterSpec& cs, int max_radius = 24,
                                        size_t size_cap = kDefaultBallCap) {
  CoxBall ball = enumerate_cox_ball(cs, max_radius, size_cap);
  if (!ball.saturated)
    fail("not-finite", "Coxeter group did not saturate within the radius bound");
  return ball;
}

inline std::vector<CoxWord> cox_subgroup_elements(GenSet types, const CoxeterSpec& cs,
                                                  size_t size_cap = kDefaultBallCap) {
  std::set<CoxWord, CoxShortLex> seen{CoxWord{}};
  std::deque<CoxWord> queue{CoxWord{}};
  while (!queue.empty()) {
    CoxWord x = queue.front();
    queue.pop_front();
    for (int g = 0; g < cs.size(); ++g) {
      if (!set_contains(types, g)) continue;
      CoxWord w = x;
      w.push_back(g);
      CoxWord y = cox_reduce(w, cs);
      if (seen.insert(y).second) {
        if (seen.size() > size_cap) fail("cap-exceeded", "subgroup closure cap exceeded");
        queue.push_back(y);
      }
    }
  }
  return std::vector<CoxWord>(seen.begin(), seen.end());
}

}  // namespace gpint
