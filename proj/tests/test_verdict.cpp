#include <doctest.h>

#include <array>

#include "strom/verdict.hpp"

using namespace strom;

namespace {

const std::array<Verdict, 4> kAll = {
    Verdict::definitely_false,
    Verdict::presumably_false,
    Verdict::presumably_true,
    Verdict::definitely_true,
};

const std::array<ExtVerdict, 5> kAllExt = {
    ExtVerdict(Verdict::definitely_false), ExtVerdict(Verdict::presumably_false),
    ExtVerdict(Verdict::presumably_true),  ExtVerdict(Verdict::definitely_true),
    ExtVerdict::demands(),
};

}  // namespace

TEST_CASE("verdict lattice laws") {
  for (Verdict a : kAll) {
    CHECK(meet(a, a) == a);
    CHECK(join(a, a) == a);
    for (Verdict b : kAll) {
      CHECK(meet(a, b) == meet(b, a));
      CHECK(join(a, b) == join(b, a));
      for (Verdict c : kAll) {
        CHECK(meet(meet(a, b), c) == meet(a, meet(b, c)));
        CHECK(join(join(a, b), c) == join(a, join(b, c)));
      }
    }
  }
}

TEST_CASE("negation is an involution and order anti-isomorphism") {
  CHECK(negate(Verdict::definitely_false) == Verdict::definitely_true);
  CHECK(negate(Verdict::presumably_false) == Verdict::presumably_true);
  for (Verdict a : kAll) {
    CHECK(negate(negate(a)) == a);
    for (Verdict b : kAll) {
      CHECK(negate(meet(a, b)) == join(negate(a), negate(b)));
      CHECK((a <= b) == (negate(b) <= negate(a)));
    }
  }
}

TEST_CASE("extended verdict algebra") {
  const ExtVerdict dem = ExtVerdict::demands();
  const ExtVerdict dt(Verdict::definitely_true);
  const ExtVerdict df(Verdict::definitely_false);
  const ExtVerdict pt(Verdict::presumably_true);

  // definitive false absorbs demands in conjunction, dually for disjunction
  CHECK(ext_and(df, dem) == df);
  CHECK(ext_and(dem, df) == df);
  CHECK(ext_or(dt, dem) == dt);
  CHECK(ext_or(dem, dt) == dt);
  // otherwise demands absorbs
  CHECK(ext_and(pt, dem) == dem);
  CHECK(ext_or(df, dem) == dem);
  CHECK(ext_negate(dem) == dem);

  // De Morgan over the extended algebra
  for (const ExtVerdict& a : kAllExt) {
    for (const ExtVerdict& b : kAllExt) {
      CHECK(ext_negate(ext_and(a, b)) == ext_or(ext_negate(a), ext_negate(b)));
      CHECK(ext_negate(ext_or(a, b)) == ext_and(ext_negate(a), ext_negate(b)));
    }
  }
}

TEST_CASE("weaken maps definitive to presumptive") {
  CHECK(weaken(Verdict::definitely_true) == Verdict::presumably_true);
  CHECK(weaken(Verdict::definitely_false) == Verdict::presumably_false);
  CHECK(weaken(Verdict::presumably_true) == Verdict::presumably_true);
}
