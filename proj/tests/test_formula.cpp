#include <doctest.h>

#include "helpers.hpp"
#include "strom/errors.hpp"
#include "strom/formula.hpp"
#include "strom/progression.hpp"

using namespace strom;
using namespace strom::testing;
namespace fm = strom::formula;

TEST_CASE("unroll expands always_0 with a weak next") {
  FormulaPtr p = field_atom("p");
  FormulaPtr f = fm::always(0, p);
  State s = bool_state({{"p", true}});

  FormulaPtr expected = fm::conjunction(fm::top(), fm::next_weak(fm::always(0, p)));
  CHECK(formula_equal(unroll(f, s), expected));
}

TEST_CASE("unroll spends a required next on positive subscripts") {
  FormulaPtr p = field_atom("p");
  FormulaPtr f = fm::eventually(1, p);
  State s = bool_state({{"p", false}});

  FormulaPtr expected = fm::disjunction(fm::bottom(), fm::next_required(fm::eventually(0, p)));
  CHECK(formula_equal(unroll(f, s), expected));
}

TEST_CASE("unroll of until_0 keeps the raw shape") {
  FormulaPtr p = field_atom("p");
  FormulaPtr q = field_atom("q");
  FormulaPtr f = fm::until(0, p, q);
  State s = bool_state({{"p", true}, {"q", false}});

  FormulaPtr expected = fm::disjunction(
      fm::bottom(), fm::conjunction(fm::top(), fm::next_strong(fm::until(0, p, q))));
  CHECK(formula_equal(unroll(f, s), expected));
}

TEST_CASE("unroll of constants is the identity") {
  State s = bool_state({});
  CHECK(formula_equal(unroll(fm::top(), s), fm::top()));
  CHECK(formula_equal(unroll(fm::bottom(), s), fm::bottom()));
}

TEST_CASE("unroll eliminates a freeze by capturing the current value") {
  // let v = time; started && nextW (time == v - 1)
  ExprPtr time = expr::selector_field("#remaining", "text");
  ExprPtr started = expr::selector_field("#toggle", "started");
  FormulaPtr body = fm::conjunction(
      fm::atom(started),
      fm::next_weak(fm::atom(expr::binary(
          BinOp::eq, time, expr::binary(BinOp::sub, expr::variable("v"), expr::literal(1))))));
  FormulaPtr f = fm::freeze("v", time, body);

  State s0;
  s0.fields["#remaining.text"] = Value(3);
  s0.fields["#toggle.started"] = Value(true);

  FormulaPtr u = unroll(f, s0);
  // started is evaluated, the frozen v is the constant 3 inside the guard
  FormulaPtr expected = fm::conjunction(
      fm::top(), fm::next_weak(fm::atom(expr::binary(
                     BinOp::eq, time,
                     expr::binary(BinOp::sub, expr::literal(3), expr::literal(1))))));
  CHECK(formula_equal(u, expected));

  // hand-run over a two-state trace: 3 then 2 satisfies the decrement
  State s1 = s0;
  s1.fields["#remaining.text"] = Value(2);
  std::vector<State> trace = {s0, s1};
  Outcome out = evaluate_trace(f, trace);
  CHECK(out.verdict == ExtVerdict(Verdict::definitely_true));

  // 3 then 3 violates it
  std::vector<State> bad = {s0, s0};
  CHECK(evaluate_trace(f, bad).verdict == ExtVerdict(Verdict::definitely_false));
}

TEST_CASE("freeze binders stay unique along a path") {
  ExprPtr time = expr::selector_field("t", "v");
  FormulaPtr inner = fm::freeze("v", time, fm::atom(expr::variable("v")));
  FormulaPtr outer = fm::freeze("v", time, fm::conjunction(fm::atom(expr::variable("v")), inner));
  CHECK(outer->binder != inner->binder);
}

TEST_CASE("unroll errors") {
  State s = bool_state({{"p", true}});
  s.fields["n.v"] = Value(7);

  SUBCASE("atom must be boolean") {
    CHECK_THROWS_AS((void)unroll(field_atom("n"), s), AtomNotBooleanError);
  }
  SUBCASE("unknown field") {
    CHECK_THROWS_AS((void)unroll(field_atom("missing"), s), UnknownFieldError);
  }
  SUBCASE("expression type errors surface") {
    FormulaPtr f = fm::atom(expr::binary(BinOp::lt, expr::literal(Value("a")), expr::literal(1)));
    CHECK_THROWS_AS((void)unroll(f, s), EvalError);
  }
}

TEST_CASE("simplify drops constant conjuncts down to the guard") {
  FormulaPtr phi = field_atom("p");
  Simplified s = simplify(fm::conjunction(fm::top(), fm::next_weak(phi)));
  REQUIRE(!s.is_definitive());
  CHECK(guarded_equal(s.guarded, guarded::g_next_weak(phi)));
}

TEST_CASE("simplify folds annihilators to a definitive answer") {
  FormulaPtr phi = field_atom("p");
  Simplified s = simplify(
      fm::disjunction(fm::bottom(), fm::conjunction(fm::bottom(), fm::next_required(phi))));
  REQUIRE(s.is_definitive());
  CHECK(*s.definitive == Verdict::definitely_false);
}

TEST_CASE("negation flips weak next to strong next and normalizes inside") {
  FormulaPtr p = field_atom("p");
  Simplified s = simplify(fm::negation(fm::next_weak(fm::always(0, p))));
  REQUIRE(!s.is_definitive());
  CHECK(guarded_equal(s.guarded, guarded::g_next_strong(fm::eventually(0, fm::negation(p)))));
}

TEST_CASE("required next is self-dual under negation") {
  FormulaPtr p = field_atom("p");
  Simplified s = simplify(fm::negation(fm::next_required(p)));
  REQUIRE(!s.is_definitive());
  CHECK(guarded_equal(s.guarded, guarded::g_next_required(fm::negation(p))));
}

TEST_CASE("presumptive answers") {
  FormulaPtr phi = field_atom("p");
  FormulaPtr psi = field_atom("q");

  SUBCASE("weak next defaults to presumably true") {
    PresumptiveResult r = presumptive(*guarded::g_next_weak(phi));
    CHECK(!r.demands);
    CHECK(r.verdict == Verdict::presumably_true);
  }
  SUBCASE("strong next defaults to presumably false") {
    PresumptiveResult r = presumptive(*guarded::g_next_strong(phi));
    CHECK(!r.demands);
    CHECK(r.verdict == Verdict::presumably_false);
  }
  SUBCASE("conjunction folds with the lattice, then weakens") {
    PresumptiveResult r = presumptive(
        *guarded::g_and(guarded::g_next_weak(phi), guarded::g_next_strong(psi)));
    CHECK(!r.demands);
    CHECK(r.verdict == Verdict::presumably_false);
  }
  SUBCASE("any required next demands more states") {
    PresumptiveResult r = presumptive(
        *guarded::g_or(guarded::g_next_required(phi), guarded::g_next_weak(psi)));
    CHECK(r.demands);
  }
}

TEST_CASE("step forward strips one layer of guards") {
  FormulaPtr phi = field_atom("p");
  FormulaPtr psi = field_atom("q");

  CHECK(formula_equal(step_forward(*guarded::g_next_required(phi)), phi));
  CHECK(formula_equal(
      step_forward(*guarded::g_and(guarded::g_next_weak(phi), guarded::g_next_strong(psi))),
      fm::conjunction(phi, psi)));
  CHECK(formula_equal(
      step_forward(*guarded::g_or(guarded::g_next_weak(fm::top()), guarded::g_next_weak(fm::top()))),
      fm::disjunction(fm::top(), fm::top())));
}

TEST_CASE("evaluate_trace runs the progression loop") {
  FormulaPtr x = field_atom("x");

  SUBCASE("safety over a clean trace is presumably true") {
    auto t = x_trace({true, true});
    Outcome out = evaluate_trace(fm::always(0, x), t);
    CHECK(out.verdict == ExtVerdict(Verdict::presumably_true));
    CHECK(out.states_consumed == 2);
    CHECK(!out.definitive_at.has_value());
  }
  SUBCASE("liveness with a witness is definitively true") {
    auto t = x_trace({false, true});
    Outcome out = evaluate_trace(fm::eventually(0, x), t);
    CHECK(out.verdict == ExtVerdict(Verdict::definitely_true));
    CHECK(out.definitive_at == 1);
    CHECK(out.states_consumed == 2);
  }
  SUBCASE("unmet subscript demands more states") {
    auto t = x_trace({false, false});
    Outcome out = evaluate_trace(fm::eventually(2, x), t);
    CHECK(out.verdict == ExtVerdict::demands());
    CHECK(out.states_consumed == 2);
  }
  SUBCASE("errors carry the offending state index") {
    auto t = x_trace({true, true});
    t[1].fields.clear();
    try {
      (void)evaluate_trace(fm::always(0, x), t);
      FAIL("expected TraceEvalError");
    } catch (const TraceEvalError& e) {
      CHECK(e.state_index == 1);
    }
  }
}

TEST_CASE("simplify raises on pathological node growth") {
  // or-chain of distinct guards can't fold; a tiny cap must trip
  FormulaPtr big = fm::next_weak(field_atom("p"));
  for (int i = 0; i < 64; ++i) {
    big = fm::disjunction(big, fm::next_weak(field_atom("p" + std::to_string(i))));
  }
  ProgressionLimits limits;
  limits.max_nodes = 16;
  CHECK_THROWS_AS((void)simplify(big, limits), FormulaBlowupError);
}
