#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "strom/expr.hpp"
#include "strom/formula.hpp"
#include "strom/state.hpp"

namespace strom::testing {

// Atom that reads boolean field "<name>.v".
inline FormulaPtr field_atom(const std::string& name) {
  return formula::atom(expr::selector_field(name, "v"));
}

inline State bool_state(std::initializer_list<std::pair<std::string, bool>> fields) {
  State s;
  for (const auto& [name, v] : fields) s.fields[name + ".v"] = Value(v);
  return s;
}

// Trace over a single boolean field "x.v".
inline std::vector<State> x_trace(std::initializer_list<bool> xs) {
  std::vector<State> t;
  for (bool b : xs) t.push_back(bool_state({{"x", b}}));
  return t;
}

}  // namespace strom::testing
