#pragma once

#include <algorithm>
#include <string>

namespace strom {

/// Four-valued truth for finite partial traces. The order
///   definitely_false < presumably_false < presumably_true < definitely_true
/// makes conjunction the minimum and disjunction the maximum; the presumptive
/// values record answers that rest on end-of-trace defaults rather than on
/// observed evidence.
enum class Verdict {
  definitely_false = 0,
  presumably_false = 1,
  presumably_true = 2,
  definitely_true = 3,
};

inline Verdict negate(Verdict v) {
  switch (v) {
    case Verdict::definitely_false: return Verdict::definitely_true;
    case Verdict::presumably_false: return Verdict::presumably_true;
    case Verdict::presumably_true: return Verdict::presumably_false;
    default: return Verdict::definitely_false;
  }
}

inline Verdict meet(Verdict a, Verdict b) { return std::min(a, b); }
inline Verdict join(Verdict a, Verdict b) { return std::max(a, b); }

inline bool is_definitive(Verdict v) {
  return v == Verdict::definitely_true || v == Verdict::definitely_false;
}

/// Maps a default-derived definitive value down to its presumptive twin.
inline Verdict weaken(Verdict v) {
  if (v == Verdict::definitely_true) return Verdict::presumably_true;
  if (v == Verdict::definitely_false) return Verdict::presumably_false;
  return v;
}

std::string to_string(Verdict v);

/// A verdict extended with `demands`: the evaluation needs more states before
/// any answer (even a presumptive one) can be given. `demands` is absorbed by
/// a definitive false in conjunctions and a definitive true in disjunctions,
/// and is a fixpoint of negation.
class ExtVerdict {
public:
  ExtVerdict(Verdict v) : demands_(false), v_(v) {}
  static ExtVerdict demands() { return ExtVerdict(); }

  bool is_demands() const { return demands_; }
  Verdict verdict() const { return v_; }  // meaningful only when !is_demands()

  friend bool operator==(const ExtVerdict& a, const ExtVerdict& b) {
    return a.demands_ == b.demands_ && (a.demands_ || a.v_ == b.v_);
  }
  friend bool operator!=(const ExtVerdict& a, const ExtVerdict& b) { return !(a == b); }

private:
  ExtVerdict() : demands_(true), v_(Verdict::definitely_false) {}
  bool demands_;
  Verdict v_;
};

inline ExtVerdict ext_negate(ExtVerdict a) {
  if (a.is_demands()) return a;
  return ExtVerdict(negate(a.verdict()));
}

inline ExtVerdict ext_and(ExtVerdict a, ExtVerdict b) {
  if (!a.is_demands() && a.verdict() == Verdict::definitely_false) return a;
  if (!b.is_demands() && b.verdict() == Verdict::definitely_false) return b;
  if (a.is_demands() || b.is_demands()) return ExtVerdict::demands();
  return ExtVerdict(meet(a.verdict(), b.verdict()));
}

inline ExtVerdict ext_or(ExtVerdict a, ExtVerdict b) {
  if (!a.is_demands() && a.verdict() == Verdict::definitely_true) return a;
  if (!b.is_demands() && b.verdict() == Verdict::definitely_true) return b;
  if (a.is_demands() || b.is_demands()) return ExtVerdict::demands();
  return ExtVerdict(join(a.verdict(), b.verdict()));
}

std::string to_string(const ExtVerdict& v);

}  // namespace strom
