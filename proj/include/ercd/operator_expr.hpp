#pragma once

#include <map>

#include "ercd/extended_matrix.hpp"

namespace ercd {

using OMat = ExtendedMatrix<OmegaScalar>;

/// Lift a constant Gaussian-rational matrix into the OmegaScalar field.
OMat lift(const ExtendedMatrix<GaussianRational>& m, Track track = Track::Operator);

/// Monomial shape X1^a1 X2^a2 X3^a3 t^a D0^b; the coefficient matrix follows
/// on the right.
struct OpKey {
  std::array<int, 3> xPow{0, 0, 0};
  int tPow = 0;
  int d0Pow = 0;

  friend bool operator==(const OpKey&, const OpKey&) = default;
  friend bool operator<(const OpKey& a, const OpKey& b) {
    if (a.xPow != b.xPow) return a.xPow < b.xPow;
    if (a.tPow != b.tPow) return a.tPow < b.tPow;
    return a.d0Pow < b.d0Pow;
  }
};

/// Normal-ordered operator expression: sum over monomials X^alpha t^a D0^b
/// with extended-matrix coefficients over the omega field on the right.
/// Rewrite rules baked into the product:
///   [D0, t] = 1,   c X_n = X_n c - dc/d(d_n),   X and t commute,
///   D0 commutes with X and with every coefficient.
/// X_l are the lowered coordinates ([d_l, X_n] = g_ln = -delta_ln), so the
/// derivative rule carries the metric sign already.
class OperatorExpr {
public:
  OperatorExpr() = default;

  static OperatorExpr zero() { return OperatorExpr(); }
  static OperatorExpr matrix(const OMat& m) {
    OperatorExpr e;
    e.addTerm(OpKey{}, m);
    return e;
  }
  static OperatorExpr scalar(const OmegaScalar& s) { return matrix(s * OMat::identity()); }
  static OperatorExpr x(int l);
  static OperatorExpr t() {
    OperatorExpr e;
    OpKey k;
    k.tPow = 1;
    e.addTerm(k, OMat::identity());
    return e;
  }
  static OperatorExpr d0() {
    OperatorExpr e;
    OpKey k;
    k.d0Pow = 1;
    e.addTerm(k, OMat::identity());
    return e;
  }

  const std::map<OpKey, OMat>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  int xDegree() const;
  int d0Degree() const;

  void addTerm(const OpKey& k, const OMat& m);

  OperatorExpr operator-() const;
  friend OperatorExpr operator+(const OperatorExpr& p, const OperatorExpr& q);
  friend OperatorExpr operator-(const OperatorExpr& p, const OperatorExpr& q);
  friend OperatorExpr operator*(const OperatorExpr& p, const OperatorExpr& q);
  friend OperatorExpr operator*(const OmegaScalar& s, const OperatorExpr& q);
  OperatorExpr& operator+=(const OperatorExpr& o) { return *this = *this + o; }
  OperatorExpr& operator-=(const OperatorExpr& o) { return *this = *this - o; }
  OperatorExpr& operator*=(const OperatorExpr& o) { return *this = *this * o; }

  friend bool operator==(const OperatorExpr& p, const OperatorExpr& q) {
    return p.terms_ == q.terms_;
  }
  friend bool operator!=(const OperatorExpr& p, const OperatorExpr& q) { return !(p == q); }

  std::string str() const;

private:
  // right-multiplications by single atoms, used to build the product
  OperatorExpr timesX(int l) const;
  OperatorExpr timesT() const;
  OperatorExpr timesD0() const;
  OperatorExpr timesMatrix(const OMat& m) const;

  std::map<OpKey, OMat> terms_;
};

OperatorExpr opCommutator(const OperatorExpr& p, const OperatorExpr& q);

/// The wave equation together with its on-shell substitution D0 -> R.
struct EquationOp {
  std::string name;
  OperatorExpr expr;
  OMat onshell;
};

/// i gamma^mu d_mu - m in Schroedinger-split form, R = -iH, H = gamma0(-i gamma^k d_k + m).
EquationOp diracEquation();
/// i D0 - gamma0 omega, R = -i gamma0 omega.
EquationOp fwEquation();

/// Replace D0 by right-composition with eq.onshell until no D0 remains.
OperatorExpr onShellReduce(const OperatorExpr& e, const EquationOp& eq);

/// Plane-wave substitution for X/t-free linear expressions.
/// sectorSign = +1 for e^{-ikx} (d_l -> +i k_l, D0 -> -i omega),
/// sectorSign = -1 for e^{+ikx} (d_l -> -i k_l, D0 -> +i omega).
OMat momentumSubstitute(const OperatorExpr& e, int sectorSign);

}  // namespace ercd
