#include <doctest.h>

#include "helpers.hpp"
#include "strom/oracle.hpp"

using namespace strom;
using namespace strom::testing;
namespace fm = strom::formula;

TEST_CASE("single atom evaluates at the given position") {
  auto t = x_trace({true});
  CHECK(oracle::eval_direct(field_atom("x"), t, 0) == ExtVerdict(Verdict::definitely_true));
}

TEST_CASE("a violated safety property is definitively false") {
  auto t = x_trace({true, false});
  CHECK(oracle::eval_direct(fm::always(0, field_atom("x")), t, 0) ==
        ExtVerdict(Verdict::definitely_false));
}

TEST_CASE("unmet subscript demands another state") {
  auto t = x_trace({false});
  CHECK(oracle::eval_direct(fm::eventually(1, field_atom("x")), t, 0) == ExtVerdict::demands());
}

TEST_CASE("weak next defaults to presumably true at the trace end") {
  auto t = x_trace({false});
  CHECK(oracle::eval_direct(fm::next_weak(field_atom("x")), t, 0) ==
        ExtVerdict(Verdict::presumably_true));
  CHECK(oracle::eval_direct(fm::next_strong(field_atom("x")), t, 0) ==
        ExtVerdict(Verdict::presumably_false));
  CHECK(oracle::eval_direct(fm::next_required(field_atom("x")), t, 0) == ExtVerdict::demands());
}

TEST_CASE("next operators recurse when a next state exists") {
  auto t = x_trace({false, true});
  CHECK(oracle::eval_direct(fm::next_weak(field_atom("x")), t, 0) ==
        ExtVerdict(Verdict::definitely_true));
  CHECK(oracle::eval_direct(fm::next_required(field_atom("x")), t, 0) ==
        ExtVerdict(Verdict::definitely_true));
}

TEST_CASE("oracle shares the progression engine's atom errors") {
  auto t = x_trace({true});
  CHECK_THROWS_AS((void)oracle::eval_direct(field_atom("missing"), t, 0), UnknownFieldError);
}
