#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "testutil.hpp"

using namespace gpint;
using gptest::Rng;

TEST_CASE("cox_reduce basics") {
  const CoxeterSpec& s3 = gptest::cox_s3();
  CHECK(cox_reduce({0, 0}, s3).empty());
  CHECK(cox_reduce({0, 1, 0}, s3) == cox_reduce({1, 0, 1}, s3));  // braid class of sts
  CHECK(cox_reduce({0, 1, 0, 1}, s3) == cox_reduce({1, 0}, s3));  // stst = ts in I2(3)

  SECTION("canonical words are constant on the element: full S3 sweep") {
    // all words of length <= 5 fall into 6 canonical classes
    std::set<CoxWord> canon;
    std::vector<CoxWord> words{{}};
    for (int len = 0; len < 5; ++len) {
      std::vector<CoxWord> next;
      for (const auto& w : words)
        if (static_cast<int>(w.size()) == len)
          for (int g = 0; g < 2; ++g) {
            CoxWord w2 = w;
            w2.push_back(g);
            next.push_back(w2);
          }
      for (auto& w : next) words.push_back(std::move(w));
    }
    for (const auto& w : words) canon.insert(cox_reduce(w, s3));
    CHECK(canon.size() == 6);
  }
}

TEST_CASE("cox arithmetic") {
  const CoxeterSpec& s3 = gptest::cox_s3();
  CHECK(cox_multiply({0}, {0}, s3).empty());
  CHECK(cox_length({0, 1, 0, 1, 0, 1}, s3) == 0);  // (st)^3 = e in I2(3)
  CHECK(cox_invert({0, 1}, s3) == cox_reduce({1, 0}, s3));

  Rng rng(41);
  const CoxeterSpec* specs[] = {&gptest::cox_s4(), &gptest::cox_dihedral_inf(),
                                &gptest::cox_triangle_333()};
  for (int i = 0; i < 90; ++i) {
    const CoxeterSpec& cs = *specs[i % 3];
    CoxWord x = cox_reduce(gptest::random_cox_word(rng, cs, 5), cs);
    CoxWord y = cox_reduce(gptest::random_cox_word(rng, cs, 5), cs);
    CHECK(cox_multiply(x, cox_invert(x, cs), cs).empty());
    CHECK(cox_invert(cox_invert(x, cs), cs) == x);
    CHECK(cox_invert(cox_multiply(x, y, cs), cs) ==
          cox_multiply(cox_invert(y, cs), cox_invert(x, cs), cs));
  }
}

TEST_CASE("cox descents and coset minimization") {
  const CoxeterSpec& s3 = gptest::cox_s3();
  CHECK(cox_left_descents({}, s3) == 0);
  CHECK(cox_left_descents({0, 1, 0}, s3) == 3);  // sts = tst: both letters open

  SECTION("frozen dihedral example: gamma = st, I = {s}, J = {t}") {
    CoxDoubleCoset dc = cox_double_coset_minimize({0, 1}, GenSet{1} << 0, GenSet{1} << 1, s3);
    CHECK(dc.left == CoxWord{0});
    CHECK(dc.middle.empty());
    CHECK(dc.right == CoxWord{1});
  }

  SECTION("coset decompositions are additive with minimal reps") {
    Rng rng(42);
    const CoxeterSpec& b3 = gptest::cox_b3();
    for (int i = 0; i < 40; ++i) {
      CoxWord w = cox_reduce(gptest::random_cox_word(rng, b3, 6), b3);
      GenSet types = gptest::random_subset(rng, b3.size());
      for (CoxSide side : {CoxSide::left, CoxSide::right}) {
        CoxCosetDecomp cd = cox_coset_minimize(w, types, side, b3);
        CoxWord recomposed = side == CoxSide::left ? cox_multiply(cd.sub, cd.rep, b3)
                                                   : cox_multiply(cd.rep, cd.sub, b3);
        CHECK(recomposed == w);
        CHECK(cd.sub.size() + cd.rep.size() == w.size());
        GenSet descents = side == CoxSide::left ? cox_left_descents(cd.rep, b3)
                                                : cox_right_descents(cd.rep, b3);
        CHECK((descents & types) == 0);
        CHECK(set_subset(cox_support(cd.sub), types));
      }
    }
  }
}

TEST_CASE("reflections and half-spaces") {
  const CoxeterSpec& s3 = gptest::cox_s3();
  Reflection s = make_reflection({}, 0, s3);
  CHECK(reflection_side(s, {}, s3) == HalfSpace::plus);
  CHECK(reflection_side(s, {0}, s3) == HalfSpace::minus);

  SECTION("every reflection is positive on the identity") {
    Rng rng(43);
    const CoxeterSpec& cs = gptest::cox_b3();
    for (int i = 0; i < 40; ++i) {
      CoxWord w = cox_reduce(gptest::random_cox_word(rng, cs, 5), cs);
      Reflection t = make_reflection(w, static_cast<int>(rng() % cs.size()), cs);
      CHECK(t.element.size() % 2 == 1);
      CHECK(reflection_side(t, {}, cs) == HalfSpace::plus);
      CHECK(cox_multiply(t.element, t.element, cs).empty());  // involution
    }
  }

  SECTION("wall-counting identity on the S3 ball") {
    CoxBall full = enumerate_cox_full_group(s3);
    // collect all reflections
    std::set<Reflection> refl;
    for (const auto& w : full.elements)
      for (int g = 0; g < s3.size(); ++g) refl.insert(make_reflection(w, g, s3));
    CHECK(refl.size() == 3);  // S3 has three transpositions
    for (const auto& x : full.elements)
      for (const auto& y : full.elements) {
        int separating = 0;
        for (const auto& t : refl)
          if (reflection_side(t, x, s3) != reflection_side(t, y, s3)) ++separating;
        CHECK(separating ==
              static_cast<int>(cox_multiply(cox_invert(x, s3), y, s3).size()));
      }
  }
}

TEST_CASE("cox_k uses conjugation, not commutation") {
  const CoxeterSpec& s3 = gptest::cox_s3();
  GenSet s_only = GenSet{1} << 0;
  GenSet t_only = GenSet{1} << 1;
  CHECK(cox_k({}, s_only | t_only, s_only | t_only, s3) == (s_only | t_only));
  CHECK(cox_k({}, s_only, t_only, s3) == 0);

  SECTION("the S4 conjugating representative") {
    const CoxeterSpec& s4 = gptest::cox_s4();
    CoxWord d = cox_reduce({1, 0, 2, 1}, s4);  // s2 s1 s3 s2
    REQUIRE(d.size() == 4);
    // d is (I, J)-reduced for I = {s1}, J = {s3}
    GenSet i_set = GenSet{1} << 0, j_set = GenSet{1} << 2;
    CHECK((cox_left_descents(d, s4) & i_set) == 0);
    CHECK((cox_right_descents(d, s4) & j_set) == 0);
    // conjugation carries s3 to s1
    CHECK(cox_multiply(cox_multiply(d, {2}, s4), cox_invert(d, s4), s4) == CoxWord{0});
    CHECK(cox_k(d, i_set, j_set, s4) == i_set);
  }
}

namespace {

// exact subgroup comparison on a fully enumerated finite Coxeter group
void check_cox_intersection_exact(const CoxeterSpec& cs) {
  CoxBall full = enumerate_cox_full_group(cs);
  GenSet all = cs.all_gens();
  for (GenSet i_set = 0; i_set <= all; ++i_set) {
    if ((i_set & ~all) != 0) continue;
    std::vector<CoxWord> wi = cox_subgroup_elements(i_set, cs);
    for (GenSet j_set = 0; j_set <= all; ++j_set) {
      if ((j_set & ~all) != 0) continue;
      std::vector<CoxWord> wj = cox_subgroup_elements(j_set, cs);
      for (const auto& w : full.elements) {
        CoxWord winv = cox_invert(w, cs);
        std::set<CoxWord> lhs;
        {
          std::set<CoxWord> conj;
          for (const auto& v : wj)
            conj.insert(cox_multiply(cox_multiply(w, v, cs), winv, cs));
          for (const auto& u : wi)
            if (conj.count(u)) lhs.insert(u);
        }
        CoxParabolic res = cox_intersect(i_set, w, j_set, cs);
        std::set<CoxWord> rhs;
        CoxWord cinv = cox_invert(res.conjugator, cs);
        for (const auto& v : cox_subgroup_elements(res.types, cs))
          rhs.insert(cox_multiply(cox_multiply(res.conjugator, v, cs), cinv, cs));
        REQUIRE(lhs == rhs);
      }
    }
  }
}

}  // namespace

TEST_CASE("cox_intersect exact on S3 and I2(5)") {
  check_cox_intersection_exact(gptest::cox_s3());
  check_cox_intersection_exact(gptest::cox_i25());
}

TEST_CASE("cox_intersect on the infinite dihedral group, ball-verified") {
  const CoxeterSpec& cs = gptest::cox_dihedral_inf();
  CoxBall ball = enumerate_cox_ball(cs, 6);
  Rng rng(44);
  for (int i = 0; i < 40; ++i) {
    GenSet i_set = gptest::random_subset(rng, 2);
    GenSet j_set = gptest::random_subset(rng, 2);
    CoxWord w = ball.elements[rng() % ball.elements.size()];
    CoxWord winv = cox_invert(w, cs);
    CoxParabolic res = cox_intersect(i_set, w, j_set, cs);
    for (const auto& u : ball.elements) {
      bool lhs = set_subset(cox_support(u), i_set) &&
                 set_subset(cox_support(cox_multiply(cox_multiply(winv, u, cs), w, cs)), j_set);
      CHECK(lhs == cox_member(u, res, cs));
    }
  }
}

TEST_CASE("right-angled consistency with the graph-product engine") {
  // pentagon RACG through both engines
  const GroupSpec& spec = gptest::pentagon();
  CoxeterSpec cs = underlying_coxeter(spec);
  Rng rng(45);
  for (int i = 0; i < 50; ++i) {
    Word w = gptest::random_word(rng, spec, 7);
    CoxWord cw;
    for (const auto& s : w.syllables) cw.push_back(s.gen);
    NormalForm nf = reduce(w, spec);
    CoxWord cnf = cox_reduce(cw, cs);
    REQUIRE(nf.syllables.size() == cnf.size());
    for (size_t k = 0; k < cnf.size(); ++k) CHECK(nf.syllables[k].gen == cnf[k]);
  }

  SECTION("the two intersection pipelines agree on subgroup membership") {
    Ball universe = enumerate_ball(spec, 3);
    for (int i = 0; i < 25; ++i) {
      GenSet i_set = gptest::random_subset(rng, spec.size());
      GenSet j_set = gptest::random_subset(rng, spec.size());
      NormalForm gamma = universe.elements[rng() % universe.elements.size()];
      CoxWord gamma_cw;
      for (const auto& s : gamma.syllables) gamma_cw.push_back(s.gen);

      ParabolicDesc gp = intersect_parabolics(make_parabolic(nf_identity(), i_set, spec),
                                              make_parabolic(gamma, j_set, spec), spec);
      CoxParabolic cox = cox_intersect(i_set, gamma_cw, j_set, cs);

      for (const auto& u : universe.elements) {
        CoxWord ucw;
        for (const auto& s : u.syllables) ucw.push_back(s.gen);
        CHECK(member_of_parabolic(u, gp, spec) == cox_member(ucw, cox, cs));
      }
    }
  }
}

TEST_CASE("cox word syntax") {
  const CoxeterSpec& s3 = gptest::cox_s3();
  CHECK(parse_cox_word("s t s", s3) == CoxWord({0, 1, 0}));
  CHECK(parse_cox_word("s^2 t", s3) == CoxWord({1}));  // involutions: even powers vanish
  CHECK(parse_cox_word("e", s3).empty());
  CHECK(format_cox_word({}, s3) == "e");
  CHECK(format_cox_word({1, 0}, s3) == "t s");
  CHECK_THROWS_AS(parse_cox_word("q", s3), Error);
}
