#include "ercd/operator_expr.hpp"

#include <stdexcept>

#include "ercd/clifford.hpp"

namespace ercd {

namespace {

// entrywise d/d(d_axis); Chat commutes with the d_l, so the antilinear part
// differentiates the same way
OMat matDerive(const OMat& m, int axis) {
  OMat::Mat lin, anti;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      lin(i, j) = m.lin()(i, j).derive(axis);
      anti(i, j) = m.anti()(i, j).derive(axis);
    }
  return OMat(lin, anti);
}

OmegaScalar scalarPow(const OmegaScalar& s, int n) {
  OmegaScalar r = OmegaScalar(1).withTrack(s.track());
  for (int k = 0; k < n; ++k) r *= s;
  return r;
}

}  // namespace

OMat lift(const ExtendedMatrix<GaussianRational>& m, Track track) {
  OMat::Mat lin, anti;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      lin(i, j) = OmegaScalar::constant(m.lin()(i, j), track);
      anti(i, j) = OmegaScalar::constant(m.anti()(i, j), track);
    }
  return OMat(lin, anti);
}

OperatorExpr OperatorExpr::x(int l) {
  if (l < 1 || l > 3) throw std::invalid_argument("OperatorExpr::x: axis 1..3");
  OperatorExpr e;
  OpKey k;
  k.xPow[l - 1] = 1;
  e.addTerm(k, OMat::identity());
  return e;
}

void OperatorExpr::addTerm(const OpKey& k, const OMat& m) {
  if (m.isZero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, m);
    return;
  }
  it->second += m;
  if (it->second.isZero()) terms_.erase(it);
}

int OperatorExpr::xDegree() const {
  int d = 0;
  for (const auto& [k, m] : terms_) d = std::max(d, k.xPow[0] + k.xPow[1] + k.xPow[2]);
  return d;
}

int OperatorExpr::d0Degree() const {
  int d = 0;
  for (const auto& [k, m] : terms_) d = std::max(d, k.d0Pow);
  return d;
}

OperatorExpr OperatorExpr::operator-() const {
  OperatorExpr r;
  for (const auto& [k, m] : terms_) r.terms_.emplace(k, -m);
  return r;
}

OperatorExpr operator+(const OperatorExpr& p, const OperatorExpr& q) {
  OperatorExpr r = p;
  for (const auto& [k, m] : q.terms_) r.addTerm(k, m);
  return r;
}

OperatorExpr operator-(const OperatorExpr& p, const OperatorExpr& q) { return p + (-q); }

OperatorExpr OperatorExpr::timesX(int l) const {
  OperatorExpr r;
  for (const auto& [k, m] : terms_) {
    OpKey up = k;
    ++up.xPow[l - 1];
    r.addTerm(up, m);
    r.addTerm(k, -matDerive(m, l));
  }
  return r;
}

OperatorExpr OperatorExpr::timesT() const {
  OperatorExpr r;
  for (const auto& [k, m] : terms_) {
    OpKey up = k;
    ++up.tPow;
    r.addTerm(up, m);
    if (k.d0Pow > 0) {
      OpKey down = k;
      --down.d0Pow;
      r.addTerm(down, OmegaScalar(k.d0Pow) * m);
    }
  }
  return r;
}

OperatorExpr OperatorExpr::timesD0() const {
  OperatorExpr r;
  for (const auto& [k, m] : terms_) {
    OpKey up = k;
    ++up.d0Pow;
    r.addTerm(up, m);
  }
  return r;
}

OperatorExpr OperatorExpr::timesMatrix(const OMat& m) const {
  OperatorExpr r;
  for (const auto& [k, c] : terms_) r.addTerm(k, c * m);
  return r;
}

OperatorExpr operator*(const OperatorExpr& p, const OperatorExpr& q) {
  OperatorExpr r;
  for (const auto& [k, m] : q.terms_) {
    OperatorExpr part = p;
    for (int l = 1; l <= 3; ++l)
      for (int rep = 0; rep < k.xPow[l - 1]; ++rep) part = part.timesX(l);
    for (int rep = 0; rep < k.tPow; ++rep) part = part.timesT();
    for (int rep = 0; rep < k.d0Pow; ++rep) part = part.timesD0();
    part = part.timesMatrix(m);
    r += part;
  }
  return r;
}

OperatorExpr operator*(const OmegaScalar& s, const OperatorExpr& q) {
  return OperatorExpr::scalar(s) * q;
}

std::string OperatorExpr::str() const {
  if (terms_.empty()) return "0\n";
  std::string s;
  for (const auto& [k, m] : terms_) {
    std::string mono;
    const char* names[3] = {"X1", "X2", "X3"};
    for (int l = 0; l < 3; ++l)
      for (int rep = 0; rep < k.xPow[l]; ++rep) mono += std::string(names[l]) + "*";
    for (int rep = 0; rep < k.tPow; ++rep) mono += "t*";
    for (int rep = 0; rep < k.d0Pow; ++rep) mono += "D0*";
    if (mono.empty()) mono = "1*";
    s += mono + "coeff:\n" + m.str();
  }
  return s;
}

OperatorExpr opCommutator(const OperatorExpr& p, const OperatorExpr& q) {
  return p * q - q * p;
}

EquationOp diracEquation() {
  const OmegaScalar i = OmegaScalar::i();
  const OmegaScalar m = OmegaScalar::mass();
  OMat g0 = lift(gammaMatrix(0));
  OMat spatial = OMat::zero();
  for (int l = 1; l <= 3; ++l) spatial += OmegaScalar::sym(l) * lift(gammaMatrix(l));
  // H = gamma0 (-i gamma^k d_k + m)
  OMat h = g0 * ((-i) * spatial + m * OMat::identity());
  EquationOp eq;
  eq.name = "dirac";
  eq.expr = OperatorExpr::d0() * OperatorExpr::matrix(i * g0) +
            OperatorExpr::matrix(i * spatial - m * OMat::identity());
  eq.onshell = (-i) * h;
  return eq;
}

EquationOp fwEquation() {
  const OmegaScalar i = OmegaScalar::i();
  OMat g0w = OmegaScalar::omega() * lift(gammaMatrix(0));
  EquationOp eq;
  eq.name = "fw";
  eq.expr = OperatorExpr::d0() * OperatorExpr::matrix(i * OMat::identity()) -
            OperatorExpr::matrix(g0w);
  eq.onshell = (-i) * g0w;
  return eq;
}

OperatorExpr onShellReduce(const OperatorExpr& e, const EquationOp& eq) {
  OperatorExpr cur = e;
  while (cur.d0Degree() > 0) {
    OperatorExpr next;
    for (const auto& [k, m] : cur.terms()) {
      if (k.d0Pow == 0) {
        next.addTerm(k, m);
        continue;
      }
      // the coefficient is D0-free, so the rightmost D0 acts directly on the
      // solution: replace it by right-composition with the rule
      OpKey down = k;
      --down.d0Pow;
      next.addTerm(down, m * eq.onshell);
    }
    cur = next;
  }
  return cur;
}

OMat momentumSubstitute(const OperatorExpr& e, int sectorSign) {
  if (sectorSign != 1 && sectorSign != -1)
    throw std::invalid_argument("momentumSubstitute: sector must be +1 or -1");
  OMat result = OMat::zero();
  const OmegaScalar d0val =
      OmegaScalar::constant(GaussianRational(mpq_class(0), mpq_class(-sectorSign)),
                            Track::Momentum) *
      OmegaScalar::omega(Track::Momentum);
  for (const auto& [k, m] : e.terms()) {
    if (k.xPow != std::array<int, 3>{0, 0, 0} || k.tPow != 0)
      throw std::invalid_argument("momentumSubstitute: expression depends on X or t");
    if (!m.isLinear())
      throw std::invalid_argument("momentumSubstitute: antilinear part present");
    OMat::Mat lin;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) lin(i, j) = m.lin()(i, j).toMomentum(sectorSign);
    result += scalarPow(d0val, k.d0Pow) * OMat::linear(lin);
  }
  return result;
}

}  // namespace ercd
