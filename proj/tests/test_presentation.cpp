#include <catch2/catch_amalgamated.hpp>

#include "testutil.hpp"

using namespace gpint;

TEST_CASE("group spec parsing") {
  GroupSpec spec = parse_group_spec("generator a 2\ngenerator b 3\nedge a b\n");
  REQUIRE(spec.size() == 2);
  CHECK(spec.orders[0] == 2);
  CHECK(spec.orders[1] == 3);
  CHECK(spec.commutes(0, 1));
  CHECK(spec.names[0] == "a");

  SECTION("declaration order fixes indices") {
    GroupSpec s2 = parse_group_spec("generator z 2\ngenerator a 2\n");
    CHECK(s2.index_of("z") == 0);
    CHECK(s2.index_of("a") == 1);
  }
}

TEST_CASE("group spec infinite orders") {
  GroupSpec spec = parse_group_spec("generator a inf\ngenerator b 2\n");
  CHECK(!spec.finite_order(0));
  CHECK(spec.finite_order(1));
  CHECK(!spec.commutes(0, 1));
  GroupSpec zero = parse_group_spec("generator a 0\n");
  CHECK(!zero.finite_order(0));
}

TEST_CASE("group spec errors") {
  CHECK_THROWS_WITH(parse_group_spec("generator a 2\nedge a a\n"),
                    Catch::Matchers::ContainsSubstring("self-loop"));
  CHECK_THROWS_AS(parse_group_spec("generator a 2\ngenerator a 2\n"), Error);
  CHECK_THROWS_AS(parse_group_spec("generator a 2\nedge a b\n"), Error);
  CHECK_THROWS_AS(parse_group_spec("generator a 1\n"), Error);
  CHECK_THROWS_AS(parse_group_spec("generator a -3\n"), Error);
  CHECK_THROWS_AS(parse_group_spec("generator e 2\n"), Error);
  CHECK_THROWS_AS(parse_group_spec("generator 1a 2\n"), Error);
  CHECK_THROWS_AS(parse_group_spec(""), Error);
  CHECK_THROWS_AS(parse_group_spec("frobnicate a b\n"), Error);
  try {
    parse_group_spec("generator a 2\n\nedge a a\n");
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code() == "self-loop");
    CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("line 3"));
  }
}

TEST_CASE("comments, blank lines and CRLF") {
  GroupSpec spec = parse_group_spec(
      "# header comment\r\n\r\ngenerator a 2  # trailing\r\ngenerator b 2\r\nedge a b\r\n");
  REQUIRE(spec.size() == 2);
  CHECK(spec.commutes(0, 1));
}

TEST_CASE("coxeter spec parsing") {
  CoxeterSpec cs = parse_coxeter_spec("coxeter\ngenerator s\ngenerator t\nm s t 3\n");
  REQUIRE(cs.size() == 2);
  CHECK(cs.m[0][1] == 3);
  CHECK(cs.m[0][0] == 1);

  SECTION("unspecified entries default to infinity") {
    CoxeterSpec free = parse_coxeter_spec("coxeter\ngenerator s\ngenerator t\n");
    CHECK(free.m[0][1] == kInfinity);
  }
  SECTION("errors") {
    CHECK_THROWS_WITH(parse_coxeter_spec("coxeter\ngenerator s\ngenerator t\nm s t 1\n"),
                      Catch::Matchers::ContainsSubstring(">= 2"));
    CHECK_THROWS_AS(parse_coxeter_spec("coxeter\ngenerator s\nm s s 2\n"), Error);
    CHECK_THROWS_AS(parse_coxeter_spec("generator s\n"), Error);
    CHECK_THROWS_AS(
        parse_coxeter_spec("coxeter\ngenerator s\ngenerator t\nm s t 3\nm t s 3\n"), Error);
  }
}

TEST_CASE("underlying coxeter system") {
  CoxeterSpec cs = underlying_coxeter(parse_group_spec("generator a 2\ngenerator b 3\nedge a b\n"));
  CHECK(cs.m[0][1] == 2);

  CoxeterSpec free = underlying_coxeter(parse_group_spec("generator a 5\ngenerator b 7\n"));
  CHECK(free.m[0][1] == kInfinity);

  CoxeterSpec tri = underlying_coxeter(gptest::k3());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(tri.m[i][j] == (i == j ? 1 : 2));

  SECTION("all-orders-2 specs round-trip through the RACG view") {
    const GroupSpec& spec = gptest::pentagon();
    GroupSpec back = group_spec_from_right_angled(underlying_coxeter(spec));
    CHECK(back.names == spec.names);
    CHECK(back.orders == spec.orders);
    CHECK(back.adj == spec.adj);
  }
}

TEST_CASE("serialize round-trips") {
  for (const GroupSpec* spec : {&gptest::path_abc(), &gptest::mixed_abc(), &gptest::square_raag()}) {
    GroupSpec again = parse_group_spec(serialize_group_spec(*spec));
    CHECK(again.names == spec->names);
    CHECK(again.orders == spec->orders);
    CHECK(again.adj == spec->adj);
  }
  for (const CoxeterSpec* cs : {&gptest::cox_b3(), &gptest::cox_dihedral_inf()}) {
    CoxeterSpec again = parse_coxeter_spec(serialize_coxeter_spec(*cs));
    CHECK(again.names == cs->names);
    CHECK(again.m == cs->m);
  }
}

TEST_CASE("gen set syntax") {
  const GroupSpec& spec = gptest::path_abc();
  CHECK(parse_gen_set("{a,b}", spec) == (set_with(set_with(GenSet{0}, 0), 1)));
  CHECK(parse_gen_set("a,b", spec) == parse_gen_set("{a,b}", spec));
  CHECK(parse_gen_set("{}", spec) == 0);
  CHECK(parse_gen_set("", spec) == 0);
  CHECK(format_gen_set(parse_gen_set("{c,a}", spec), spec) == "{a,c}");
  CHECK_THROWS_AS(parse_gen_set("{a,q}", spec), Error);
}
