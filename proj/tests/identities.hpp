#pragma once

// The eleven classical identities, subscript-generalized, as pairs of formula
// builders over random operands. Both sides must produce identical outcomes
// on every trace. Identity 3 splits into the three next modalities; the
// expansion identities 8-11 have one form per subscript case.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "strom/formula.hpp"

namespace strom::testing {

struct IdentityCase {
  std::string name;
  // builds (lhs, rhs) from operands phi, psi and subscript n
  std::function<std::pair<FormulaPtr, FormulaPtr>(FormulaPtr, FormulaPtr, std::uint32_t)> build;
};

inline const std::vector<IdentityCase>& ltl_identities() {
  namespace fm = strom::formula;
  using P = std::pair<FormulaPtr, FormulaPtr>;
  static const std::vector<IdentityCase> cases = {
      {"1: not eventually = always not",
       [](FormulaPtr p, FormulaPtr, std::uint32_t n) -> P {
         return {fm::negation(fm::eventually(n, p)), fm::always(n, fm::negation(p))};
       }},
      {"2: not always = eventually not",
       [](FormulaPtr p, FormulaPtr, std::uint32_t n) -> P {
         return {fm::negation(fm::always(n, p)), fm::eventually(n, fm::negation(p))};
       }},
      {"3a: not nextW = nextS not",
       [](FormulaPtr p, FormulaPtr, std::uint32_t) -> P {
         return {fm::negation(fm::next_weak(p)), fm::next_strong(fm::negation(p))};
       }},
      {"3b: not nextS = nextW not",
       [](FormulaPtr p, FormulaPtr, std::uint32_t) -> P {
         return {fm::negation(fm::next_strong(p)), fm::next_weak(fm::negation(p))};
       }},
      {"3c: not next = next not",
       [](FormulaPtr p, FormulaPtr, std::uint32_t) -> P {
         return {fm::negation(fm::next_required(p)), fm::next_required(fm::negation(p))};
       }},
      {"4: not (p until q) = not p release not q",
       [](FormulaPtr p, FormulaPtr q, std::uint32_t n) -> P {
         return {fm::negation(fm::until(n, p, q)),
                 fm::release(n, fm::negation(p), fm::negation(q))};
       }},
      {"5: not (p release q) = not p until not q",
       [](FormulaPtr p, FormulaPtr q, std::uint32_t n) -> P {
         return {fm::negation(fm::release(n, p, q)),
                 fm::until(n, fm::negation(p), fm::negation(q))};
       }},
      {"6: eventually p = true until p",
       [](FormulaPtr p, FormulaPtr, std::uint32_t n) -> P {
         return {fm::eventually(n, p), fm::until(n, fm::top(), p)};
       }},
      {"7: always p = false release p",
       [](FormulaPtr p, FormulaPtr, std::uint32_t n) -> P {
         return {fm::always(n, p), fm::release(n, fm::bottom(), p)};
       }},
      {"8a: always_{n+1} p = p && next always_n p",
       [](FormulaPtr p, FormulaPtr, std::uint32_t n) -> P {
         return {fm::always(n + 1, p),
                 fm::conjunction(p, fm::next_required(fm::always(n, p)))};
       }},
      {"8b: always_0 p = p && nextW always_0 p",
       [](FormulaPtr p, FormulaPtr, std::uint32_t) -> P {
         return {fm::always(0, p), fm::conjunction(p, fm::next_weak(fm::always(0, p)))};
       }},
      {"9a: eventually_{n+1} p = p || next eventually_n p",
       [](FormulaPtr p, FormulaPtr, std::uint32_t n) -> P {
         return {fm::eventually(n + 1, p),
                 fm::disjunction(p, fm::next_required(fm::eventually(n, p)))};
       }},
      {"9b: eventually_0 p = p || nextS eventually_0 p",
       [](FormulaPtr p, FormulaPtr, std::uint32_t) -> P {
         return {fm::eventually(0, p),
                 fm::disjunction(p, fm::next_strong(fm::eventually(0, p)))};
       }},
      {"10a: p until_{n+1} q = q || (p && next (p until_n q))",
       [](FormulaPtr p, FormulaPtr q, std::uint32_t n) -> P {
         return {fm::until(n + 1, p, q),
                 fm::disjunction(q, fm::conjunction(p, fm::next_required(fm::until(n, p, q))))};
       }},
      {"10b: p until_0 q = q || (p && nextS (p until_0 q))",
       [](FormulaPtr p, FormulaPtr q, std::uint32_t) -> P {
         return {fm::until(0, p, q),
                 fm::disjunction(q, fm::conjunction(p, fm::next_strong(fm::until(0, p, q))))};
       }},
      {"11a: p release_{n+1} q = q && (p || next (p release_n q))",
       [](FormulaPtr p, FormulaPtr q, std::uint32_t n) -> P {
         return {fm::release(n + 1, p, q),
                 fm::conjunction(q, fm::disjunction(p, fm::next_required(fm::release(n, p, q))))};
       }},
      {"11b: p release_0 q = q && (p || nextW (p release_0 q))",
       [](FormulaPtr p, FormulaPtr q, std::uint32_t) -> P {
         return {fm::release(0, p, q),
                 fm::conjunction(q, fm::disjunction(p, fm::next_weak(fm::release(0, p, q))))};
       }},
  };
  return cases;
}

}  // namespace strom::testing
