#include <doctest.h>

#include "hc/rays.hpp"
#include "hc/tables.hpp"

using namespace hc;

TEST_CASE("rays: unrolling examples") {
  GroupHandle Z = make_integers({1});
  EventuallyPeriodicRay up;
  up.period = {Z.find_gen(IntElt{1})};
  std::vector<Element> v = unroll_ray(Z, Z.identity(), up, 4);
  REQUIRE(v.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(v[i] == Element{IntElt{i}});

  GroupHandle D = make_dinf({DihElt{1, 0}, DihElt{0, 1}});
  DoubleRay line;
  line.base = D.identity();
  line.pos.period = {D.find_gen(dih_a(1))};
  line.neg.period = {D.find_gen(dih_a(-1))};
  std::vector<Element> w = unroll(D, line, 2);
  REQUIRE(w.size() == 5);
  CHECK(w[0] == Element{dih_a(-2)});
  CHECK(w[1] == Element{dih_a(-1)});
  CHECK(w[2] == D.identity());
  CHECK(w[3] == Element{dih_a(1)});
  CHECK(w[4] == Element{dih_a(2)});
}

TEST_CASE("rays: unrolling is prefix-coherent per direction") {
  GroupHandle Z = make_integers({2, 3});
  EventuallyPeriodicRay r;
  r.prefix = {Z.find_gen(IntElt{3})};
  r.period = {Z.find_gen(IntElt{2}), Z.find_gen(IntElt{-3})};
  std::vector<Element> a = unroll_ray(Z, Z.identity(), r, 7);
  std::vector<Element> b = unroll_ray(Z, Z.identity(), r, 8);
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("rays: letter access walks prefix then period") {
  EventuallyPeriodicRay r;
  r.prefix = {7};
  r.period = {1, 2, 3};
  CHECK(r.letter(0) == 7);
  CHECK(r.letter(1) == 1);
  CHECK(r.letter(4) == 1);
  CHECK(r.letter(6) == 3);
}

TEST_CASE("rays: concatenate_lift doubles prefix and period") {
  GroupHandle D = make_dinf({DihElt{1, 0}, DihElt{0, 1}});
  int a = D.find_gen(dih_a(1));
  int b = D.find_gen(dih_refl(0));
  DoubleRay r;
  r.base = D.identity();
  r.pos.period = {a};
  r.neg.prefix = {};
  r.neg.period = {D.inverse_gen(a)};
  DoubleRay lifted = concatenate_lift(r, b, D);
  CHECK(lifted.pos.period == GenWord{b, a});
  CHECK(lifted.neg.period == GenWord{b, D.inverse_gen(a)});
  CHECK(lifted.pos.prefix.empty());
  CHECK(lifted.neg.prefix.empty());
}

TEST_CASE("rays: translates move the base only") {
  GroupHandle Z = make_integers({1});
  DoubleRay r;
  r.base = Z.identity();
  r.pos.period = {0};
  r.neg.period = {Z.inverse_gen(0)};
  DoubleRay t = translate(Z, r, IntElt{5});
  CHECK(t.base == Element{IntElt{5}});
  CHECK(t.pos.period == r.pos.period);
}
