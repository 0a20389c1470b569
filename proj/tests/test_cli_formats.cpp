#include <doctest.h>

#include "hc/serialize.hpp"
#include "hc/tables.hpp"

using namespace hc;

TEST_CASE("formats: group specs for every family") {
  GroupHandle Z = parse_group_spec("family integers\ngens 2 -2 3\n");
  CHECK(Z.is<IntegersFam>());
  CHECK(Z.symbol_count() == 4);  // -3 appended

  GroupHandle D = parse_group_spec("family dinf\ngens r1 f0 f2\n");
  CHECK(D.is<DihedralFam>());
  CHECK(D.symbol_count() == 4);

  GroupHandle F = parse_group_spec("family finite S3\ngens 1 2\n");
  CHECK(F.is<FiniteFam>());

  GroupHandle Fr = parse_group_spec("family free 2\ngens x1 x2 x1x2'\n");
  CHECK(Fr.is<FreeFam>());
  CHECK(Fr.symbol_count() == 6);

  GroupHandle A = parse_group_spec(
      "family amalgam Z4 Z4 core 2\n"
      "embed-left 0 2\n"
      "embed-right 0 2\n"
      "gens l1 r1\n");
  CHECK(A.is<AmalgamFam>());

  GroupHandle H = parse_group_spec("family hnn 3 2\ngens k t\n");
  CHECK(H.is<HnnFam>());
  CHECK(H.symbol_count() == 4);

  GroupHandle P = parse_group_spec(
      "family presented\n"
      "presentation gen: a b ; rel: a^2, b^2\n"
      "gens a b\n");
  CHECK(P.is<PresentedFam>());
  CHECK(P.pair_count() == 2);

  CHECK_THROWS_AS((void)parse_group_spec("family martian\ngens 1\n"), Error);
  CHECK_THROWS_AS((void)parse_group_spec(""), Error);
}

TEST_CASE("formats: deterministic artifacts") {
  GroupHandle Z = parse_group_spec("family integers\ngens 2 3\n");
  GraphWindow w1 = cayley_window(Z, 4);
  GraphWindow w2 = cayley_window(Z, 4);
  CHECK(window_dump(w1) == window_dump(w2));
  CHECK(to_dot(w1) == to_dot(w2));
}

TEST_CASE("formats: comments and blank lines in specs") {
  GroupHandle Z = parse_group_spec("# a comment\nfamily integers\n\ngens 1 # trailing\n");
  CHECK(Z.symbol_count() == 2);
}
