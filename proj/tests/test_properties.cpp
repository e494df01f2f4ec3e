#include <doctest.h>

#include "gen.hpp"
#include "identities.hpp"
#include "strom/oracle.hpp"
#include "strom/progression.hpp"

using namespace strom;
using namespace strom::testing;
namespace fm = strom::formula;

TEST_CASE("progression agrees with the brute-force oracle") {
  Rng rng(0x5eed0001);
  for (int i = 0; i < 2000; ++i) {
    FormulaPtr f = gen_formula(rng);
    std::vector<State> t = gen_trace(rng);
    ExtVerdict direct = oracle::eval_direct(f, t, 0);
    Outcome progressed = evaluate_trace(f, t);
    INFO("formula: ", f->to_string(), " trace length ", t.size());
    CHECK(progressed.verdict == direct);
  }
}

TEST_CASE("negation dualizes outcomes, demands is self-dual") {
  Rng rng(0x5eed0002);
  for (int i = 0; i < 1000; ++i) {
    FormulaPtr f = gen_formula(rng);
    std::vector<State> t = gen_trace(rng);
    Outcome pos = evaluate_trace(f, t);
    Outcome neg = evaluate_trace(fm::negation(f), t);
    INFO("formula: ", f->to_string());
    CHECK(neg.verdict == ext_negate(pos.verdict));
    CHECK(neg.states_consumed == pos.states_consumed);
    CHECK(neg.definitive_at == pos.definitive_at);
  }
}

TEST_CASE("the eleven identities hold as outcome equality") {
  Rng rng(0x5eed0003);
  for (const IdentityCase& ident : ltl_identities()) {
    for (int i = 0; i < 300; ++i) {
      FormulaPtr p = gen_formula(rng, 2);
      FormulaPtr q = gen_formula(rng, 2);
      auto n = static_cast<std::uint32_t>(rng.below(4));
      auto [lhs, rhs] = ident.build(p, q, n);
      std::vector<State> t = gen_trace(rng);
      Outcome lo = evaluate_trace(lhs, t);
      Outcome ro = evaluate_trace(rhs, t);
      INFO(ident.name, " with p=", p->to_string(), " q=", q->to_string(), " n=", n);
      CHECK(lo == ro);
    }
  }
}

TEST_CASE("simplify is idempotent on guarded results") {
  Rng rng(0x5eed0004);
  int guarded_seen = 0;
  for (int i = 0; i < 2000 && guarded_seen < 500; ++i) {
    FormulaPtr f = gen_formula(rng);
    State s = gen_state(rng);
    Simplified first = simplify(unroll(f, s));
    if (first.is_definitive()) continue;
    ++guarded_seen;
    Simplified again = simplify(guarded_to_formula(*first.guarded));
    REQUIRE(!again.is_definitive());
    CHECK(guarded_equal(again.guarded, first.guarded));
  }
  CHECK(guarded_seen > 100);
}

TEST_CASE("stepping strips exactly the guard layer of next operators") {
  struct Count {
    static std::size_t nexts(const FormulaPtr& f) {
      if (!f) return 0;
      std::size_t n = nexts(f->lhs) + nexts(f->rhs);
      if (f->kind == Formula::Kind::next_required || f->kind == Formula::Kind::next_weak ||
          f->kind == Formula::Kind::next_strong) {
        ++n;
      }
      return n;
    }
  };
  Rng rng(0x5eed0005);
  int guarded_seen = 0;
  for (int i = 0; i < 2000 && guarded_seen < 500; ++i) {
    FormulaPtr f = gen_formula(rng);
    State s = gen_state(rng);
    Simplified r = simplify(unroll(f, s));
    if (r.is_definitive()) continue;
    ++guarded_seen;
    std::size_t guards = guard_count(*r.guarded);
    std::size_t before = Count::nexts(guarded_to_formula(*r.guarded));
    std::size_t after = Count::nexts(step_forward(*r.guarded));
    CHECK(guards >= 1);
    CHECK(after + guards == before);
    CHECK(after < before);
  }
  CHECK(guarded_seen > 100);
}

TEST_CASE("a definitive verdict is stable under trace extension") {
  Rng rng(0x5eed0006);
  int definitive_seen = 0;
  for (int i = 0; i < 3000 && definitive_seen < 400; ++i) {
    FormulaPtr f = gen_formula(rng);
    std::vector<State> t = gen_trace(rng, 4);
    Outcome base = evaluate_trace(f, t);
    if (!base.definitive_at.has_value()) continue;
    ++definitive_seen;
    std::vector<State> extended = t;
    extended.push_back(gen_state(rng));
    extended.push_back(gen_state(rng));
    Outcome more = evaluate_trace(f, extended);
    CHECK(more.verdict == base.verdict);
    CHECK(more.definitive_at == base.definitive_at);
  }
  CHECK(definitive_seen > 100);
}
