#include "strom/verdict.hpp"

namespace strom {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::definitely_false: return "definitely-false";
    case Verdict::presumably_false: return "presumably-false";
    case Verdict::presumably_true: return "presumably-true";
    default: return "definitely-true";
  }
}

std::string to_string(const ExtVerdict& v) {
  return v.is_demands() ? "demands" : to_string(v.verdict());
}

}  // namespace strom
