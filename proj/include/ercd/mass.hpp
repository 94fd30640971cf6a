#pragma once

#include <optional>

#include "ercd/ratfunc.hpp"

namespace ercd {

/// Mass mode for the whole engine.  By default m stays a symbol; the CLI may
/// pin it to a positive rational before any computation starts.  The setting
/// is immutable while expressions built under it are alive: values created
/// under different mass modes must not be mixed.
class MassMode {
public:
  static void pin(const mpq_class& value) {
    if (value <= 0) throw std::invalid_argument("mass must be a positive rational");
    pinned_() = value;
  }
  static void reset() { pinned_().reset(); }
  static bool isPinned() { return pinned_().has_value(); }
  static mpq_class pinnedValue() { return pinned_().value(); }

  /// m as a polynomial: the symbol, or the pinned constant.
  static Poly massPoly() {
    if (isPinned()) return Poly(GaussianRational(pinnedValue()));
    return Poly::variable(0);
  }

  static std::string description() {
    if (!isPinned()) return "symbolic";
    return "rational " + pinnedValue().get_str();
  }

private:
  static std::optional<mpq_class>& pinned_() {
    static std::optional<mpq_class> v;
    return v;
  }
};

/// The defining relation for omega: omega^2 = m^2 - d.d (operator track,
/// modeling sqrt(-Laplacian + m^2)) or omega^2 = m^2 + k.k (momentum track).
inline Poly omegaSquaredPoly(Track track) {
  Poly s = MassMode::massPoly() * MassMode::massPoly();
  for (int v = 1; v < kNumVars; ++v) {
    Poly sq = Poly::variable(v) * Poly::variable(v);
    if (track == Track::Operator)
      s -= sq;
    else
      s += sq;
  }
  return s;
}

}  // namespace ercd
