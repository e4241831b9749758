#pragma once

#include <random>
#include <string>
#include <vector>

#include "gpint/coxeter.hpp"
#include "gpint/geometry.hpp"
#include "gpint/oracle.hpp"
#include "gpint/parabolic.hpp"
#include "gpint/spec.hpp"
#include "gpint/words.hpp"

namespace gptest {

using namespace gpint;

inline const GroupSpec& path_abc() {
  static GroupSpec spec = parse_group_spec(
      "generator a 2\ngenerator b 2\ngenerator c 2\nedge a b\nedge b c\n");
  return spec;
}

inline const GroupSpec& mixed_abc() {
  static GroupSpec spec = parse_group_spec(
      "generator a 2\ngenerator b 3\ngenerator c inf\nedge a b\nedge b c\n");
  return spec;
}

inline const GroupSpec& pentagon() {
  static GroupSpec spec = parse_group_spec(
      "generator v1 2\ngenerator v2 2\ngenerator v3 2\ngenerator v4 2\ngenerator v5 2\n"
      "edge v1 v2\nedge v2 v3\nedge v3 v4\nedge v4 v5\nedge v5 v1\n");
  return spec;
}

inline const GroupSpec& k3() {
  static GroupSpec spec = parse_group_spec(
      "generator a 2\ngenerator b 2\ngenerator c 2\nedge a b\nedge b c\nedge a c\n");
  return spec;
}

inline const GroupSpec& square_raag() {
  static GroupSpec spec = parse_group_spec(
      "generator a inf\ngenerator b inf\ngenerator c inf\ngenerator d inf\n"
      "edge a b\nedge b c\nedge c d\nedge d a\n");
  return spec;
}

inline const GroupSpec& z2z3() {
  static GroupSpec spec = parse_group_spec("generator a 2\ngenerator b 3\nedge a b\n");
  return spec;
}

inline const CoxeterSpec& cox_s3() {
  static CoxeterSpec cs = parse_coxeter_spec("coxeter\ngenerator s\ngenerator t\nm s t 3\n");
  return cs;
}

inline const CoxeterSpec& cox_s4() {
  static CoxeterSpec cs = parse_coxeter_spec(
      "coxeter\ngenerator s1\ngenerator s2\ngenerator s3\nm s1 s2 3\nm s2 s3 3\nm s1 s3 2\n");
  return cs;
}

inline const CoxeterSpec& cox_b3() {
  static CoxeterSpec cs = parse_coxeter_spec(
      "coxeter\ngenerator s1\ngenerator s2\ngenerator s3\nm s1 s2 4\nm s2 s3 3\nm s1 s3 2\n");
  return cs;
}

inline const CoxeterSpec& cox_i25() {
  static CoxeterSpec cs = parse_coxeter_spec("coxeter\ngenerator s\ngenerator t\nm s t 5\n");
  return cs;
}

inline const CoxeterSpec& cox_dihedral_inf() {
  static CoxeterSpec cs = parse_coxeter_spec("coxeter\ngenerator s\ngenerator t\n");
  return cs;
}

inline const CoxeterSpec& cox_triangle_333() {
  static CoxeterSpec cs = parse_coxeter_spec(
      "coxeter\ngenerator s1\ngenerator s2\ngenerator s3\nm s1 s2 3\nm s2 s3 3\nm s1 s3 3\n");
  return cs;
}

using Rng = std::mt19937_64;

inline Word random_word(Rng& rng, const GroupSpec& spec, int max_len, std::int64_t exp_cap = 2) {
  Word w;
  int len = static_cast<int>(rng() % (max_len + 1));
  for (int i = 0; i < len; ++i) {
    int g = static_cast<int>(rng() % spec.size());
    std::int64_t e;
    if (spec.finite_order(g)) {
      e = 1 + static_cast<std::int64_t>(rng() % (spec.orders[g] - 1));
    } else {
      e = 1 + static_cast<std::int64_t>(rng() % exp_cap);
      if (rng() % 2) e = -e;
    }
    w.syllables.push_back({g, e});
  }
  return w;
}

inline NormalForm random_element(Rng& rng, const GroupSpec& spec, int max_len,
                                 std::int64_t exp_cap = 2) {
  return reduce(random_word(rng, spec, max_len, exp_cap), spec);
}

inline GenSet random_subset(Rng& rng, int n) {
  return static_cast<GenSet>(rng()) & ((n == 64) ? ~GenSet{0} : ((GenSet{1} << n) - 1));
}

inline CoxWord random_cox_word(Rng& rng, const CoxeterSpec& cs, int max_len) {
  CoxWord w;
  int len = static_cast<int>(rng() % (max_len + 1));
  for (int i = 0; i < len; ++i) w.push_back(static_cast<int>(rng() % cs.size()));
  return w;
}

}  // namespace gptest
