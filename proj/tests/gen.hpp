#pragma once

// Random formula/trace generators for property tests. Shapes follow the
// dimensions the cross-check is specified over: formula depth <= 4,
// subscripts <= 3, three boolean fields, traces of length 1..6.

#include <string>
#include <vector>

#include "strom/expr.hpp"
#include "strom/formula.hpp"
#include "strom/rng.hpp"
#include "strom/state.hpp"

namespace strom::testing {

inline const std::vector<std::string> kGenFields = {"a", "b", "c"};

inline ExprPtr gen_atom_expr(Rng& rng, const std::vector<std::string>& binders) {
  ExprPtr field = expr::selector_field(kGenFields[rng.below(kGenFields.size())], "v");
  if (!binders.empty() && rng.below(3) == 0) {
    const std::string& b = binders[rng.below(binders.size())];
    return expr::binary(BinOp::eq, expr::variable(b), field);
  }
  return field;
}

inline FormulaPtr gen_formula_rec(Rng& rng, int depth, std::vector<std::string>& binders) {
  namespace fm = strom::formula;
  if (depth <= 0) {
    switch (rng.below(8)) {
      case 0: return fm::top();
      case 1: return fm::bottom();
      default: return fm::atom(gen_atom_expr(rng, binders));
    }
  }
  auto sub = [&] { return static_cast<std::uint32_t>(rng.below(4)); };
  switch (rng.below(13)) {
    case 0: return fm::atom(gen_atom_expr(rng, binders));
    case 1: return fm::negation(gen_formula_rec(rng, depth - 1, binders));
    case 2:
      return fm::conjunction(gen_formula_rec(rng, depth - 1, binders),
                             gen_formula_rec(rng, depth - 1, binders));
    case 3:
      return fm::disjunction(gen_formula_rec(rng, depth - 1, binders),
                             gen_formula_rec(rng, depth - 1, binders));
    case 4: return fm::next_required(gen_formula_rec(rng, depth - 1, binders));
    case 5: return fm::next_weak(gen_formula_rec(rng, depth - 1, binders));
    case 6: return fm::next_strong(gen_formula_rec(rng, depth - 1, binders));
    case 7: return fm::always(sub(), gen_formula_rec(rng, depth - 1, binders));
    case 8: return fm::eventually(sub(), gen_formula_rec(rng, depth - 1, binders));
    case 9:
      return fm::until(sub(), gen_formula_rec(rng, depth - 1, binders),
                       gen_formula_rec(rng, depth - 1, binders));
    case 10:
      return fm::release(sub(), gen_formula_rec(rng, depth - 1, binders),
                         gen_formula_rec(rng, depth - 1, binders));
    case 11: {
      std::string name = "v" + std::to_string(binders.size());
      ExprPtr bound = expr::selector_field(kGenFields[rng.below(kGenFields.size())], "v");
      binders.push_back(name);
      FormulaPtr body = gen_formula_rec(rng, depth - 1, binders);
      binders.pop_back();
      return fm::freeze(name, bound, body);
    }
    default: return fm::atom(gen_atom_expr(rng, binders));
  }
}

inline FormulaPtr gen_formula(Rng& rng, int max_depth = 4) {
  std::vector<std::string> binders;
  return gen_formula_rec(rng, static_cast<int>(rng.below(max_depth + 1)), binders);
}

inline State gen_state(Rng& rng) {
  State s;
  for (const std::string& f : kGenFields) s.fields[f + ".v"] = Value(rng.next_bool());
  return s;
}

inline std::vector<State> gen_trace(Rng& rng, std::size_t max_len = 6) {
  std::size_t len = 1 + rng.below(max_len);
  std::vector<State> t;
  t.reserve(len);
  for (std::size_t i = 0; i < len; ++i) t.push_back(gen_state(rng));
  return t;
}

}  // namespace strom::testing
