#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ercd/clifford.hpp"
#include "ercd/operator_expr.hpp"

using namespace ercd;

namespace {

std::mt19937 rng(640341);

const OmegaScalar kI = OmegaScalar::i();
const OmegaScalar kM = OmegaScalar::mass();
const OmegaScalar kW = OmegaScalar::omega();

OperatorExpr randomAtom() {
  std::uniform_int_distribution<int> pick(0, 10);
  switch (pick(rng)) {
    case 0: return OperatorExpr::x(1);
    case 1: return OperatorExpr::x(2);
    case 2: return OperatorExpr::x(3);
    case 3: return OperatorExpr::t();
    case 4: return OperatorExpr::d0();
    case 5: return OperatorExpr::scalar(kW);
    case 6: return OperatorExpr::scalar(OmegaScalar::sym(1));
    case 7: return OperatorExpr::scalar(kM + OmegaScalar::sym(2));
    case 8: return OperatorExpr::matrix(lift(gammaMatrix(0)));
    case 9: return OperatorExpr::matrix(lift(gammaMatrix(5)));
    default: return OperatorExpr::matrix(kI * lift(gammaMatrix(2)));
  }
}

OperatorExpr randomWord() {
  std::uniform_int_distribution<int> len(1, 2);
  OperatorExpr w = randomAtom();
  if (len(rng) == 2) w *= randomAtom();
  return w;
}

}  // namespace

TEST_CASE("the canonical commutation rule D0 t = t D0 + 1") {
  OperatorExpr lhs = OperatorExpr::d0() * OperatorExpr::t();
  OperatorExpr rhs = OperatorExpr::t() * OperatorExpr::d0() +
                     OperatorExpr::matrix(OMat::identity());
  CHECK(lhs == rhs);
  CHECK(opCommutator(OperatorExpr::d0(), OperatorExpr::t()) ==
        OperatorExpr::matrix(OMat::identity()));
}

TEST_CASE("omega moves past X1 with derivative correction") {
  // omega X1 = X1 omega + d1/omega, since d(omega)/d(d1) = -d1/omega
  OperatorExpr lhs = OperatorExpr::scalar(kW) * OperatorExpr::x(1);
  OperatorExpr rhs = OperatorExpr::x(1) * OperatorExpr::scalar(kW) +
                     OperatorExpr::scalar(OmegaScalar::sym(1) / kW);
  CHECK(lhs == rhs);
}

TEST_CASE("coefficient commutators reproduce the derivation") {
  // [c, X_n] = -dc/d(d_n) for assorted field elements
  std::vector<OmegaScalar> samples = {
      kW,
      OmegaScalar::sym(1) * OmegaScalar::sym(2),
      OmegaScalar::radical(),
      (kM + kW) / OmegaScalar::sym(3),
      kW * OmegaScalar::radical() + OmegaScalar::sym(2),
  };
  for (const auto& c : samples)
    for (int n = 1; n <= 3; ++n) {
      OperatorExpr lhs = opCommutator(OperatorExpr::scalar(c), OperatorExpr::x(n));
      CHECK(lhs == OperatorExpr::scalar(-c.derive(n)));
    }
}

TEST_CASE("coordinates and spatial symbols commute among themselves") {
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      CHECK(opCommutator(OperatorExpr::x(a), OperatorExpr::x(b)).isZero());
      CHECK(opCommutator(OperatorExpr::scalar(OmegaScalar::sym(a)),
                         OperatorExpr::scalar(OmegaScalar::sym(b))).isZero());
    }
  CHECK(opCommutator(OperatorExpr::x(1), OperatorExpr::t()).isZero());
  CHECK(opCommutator(OperatorExpr::d0(), OperatorExpr::x(2)).isZero());
  CHECK(opCommutator(OperatorExpr::d0(), OperatorExpr::scalar(kW)).isZero());
}

TEST_CASE("squaring the dirac operator gives the klein-gordon operator") {
  EquationOp dirac = diracEquation();
  const OMat id = OMat::identity();
  OperatorExpr plus = dirac.expr + OperatorExpr::matrix((kM + kM) * id);
  OperatorExpr prod = dirac.expr * plus;

  OmegaScalar dd = OmegaScalar(0);
  for (int l = 1; l <= 3; ++l) dd += OmegaScalar::sym(l) * OmegaScalar::sym(l);
  OperatorExpr expect =
      -(OperatorExpr::d0() * OperatorExpr::d0()) + OperatorExpr::matrix((dd - kM * kM) * id);
  CHECK(prod == expect);
}

TEST_CASE("the transform normalization identity U' U = 2 omega (omega + m)") {
  OMat u = (kW + kM) * OMat::identity();
  OMat uprime = u;
  for (int l = 1; l <= 3; ++l) {
    OMat gl = OmegaScalar::sym(l) * lift(gammaMatrix(l));
    u += (-kI) * gl;
    uprime += kI * gl;
  }
  OperatorExpr prod = OperatorExpr::matrix(uprime) * OperatorExpr::matrix(u);
  OmegaScalar expect = (kW + kW) * (kW + kM);
  CHECK(prod == OperatorExpr::scalar(expect));
}

TEST_CASE("randomized associativity over generator atoms") {
  for (int it = 0; it < 1000; ++it) {
    OperatorExpr a = randomWord();
    OperatorExpr b = randomWord();
    OperatorExpr c = randomWord();
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("jacobi identity on random triples") {
  for (int it = 0; it < 60; ++it) {
    OperatorExpr a = randomWord();
    OperatorExpr b = randomWord();
    OperatorExpr c = randomWord();
    OperatorExpr jac = opCommutator(a, opCommutator(b, c)) +
                       opCommutator(b, opCommutator(c, a)) +
                       opCommutator(c, opCommutator(a, b));
    CHECK(jac.isZero());
  }
}

TEST_CASE("commutators of first-order expressions stay first order in X") {
  // first order with scalar coefficients on the coordinate, as in the
  // Poincare generators; the constant part may be any matrix atom
  std::vector<OmegaScalar> scalars = {kW, OmegaScalar::sym(1), kM * OmegaScalar::sym(3),
                                      OmegaScalar::radical()};
  auto matAtom = [] {
    while (true) {
      OperatorExpr a = randomAtom();
      if (a.xDegree() == 0 && a.d0Degree() == 0 && !a.terms().count(OpKey{.tPow = 1})) return a;
    }
  };
  std::uniform_int_distribution<size_t> pick(0, scalars.size() - 1);
  for (int it = 0; it < 40; ++it) {
    OperatorExpr p = OperatorExpr::x(1) * OperatorExpr::scalar(scalars[pick(rng)]) + matAtom();
    OperatorExpr q = OperatorExpr::x(2) * OperatorExpr::scalar(scalars[pick(rng)]) + matAtom();
    CHECK(p.xDegree() <= 1);
    CHECK(q.xDegree() <= 1);
    CHECK(opCommutator(p, q).xDegree() <= 1);
  }
}

TEST_CASE("on-shell reduction basics") {
  EquationOp fw = fwEquation();
  // the equation operator itself vanishes on its solutions
  CHECK(onShellReduce(fw.expr, fw).isZero());
  EquationOp dirac = diracEquation();
  CHECK(onShellReduce(dirac.expr, dirac).isZero());

  // linearity and idempotence
  for (int it = 0; it < 20; ++it) {
    OperatorExpr a = randomWord();
    OperatorExpr b = randomWord();
    OperatorExpr ra = onShellReduce(a, fw);
    OperatorExpr rb = onShellReduce(b, fw);
    CHECK(onShellReduce(a + b, fw) == ra + rb);
    CHECK(onShellReduce(ra, fw) == ra);
    CHECK(ra.d0Degree() == 0);
  }
}

TEST_CASE("on-shell symmetry test distinguishes invariance operators") {
  EquationOp fw = fwEquation();
  auto isSymmetry = [&](const CMat& q) {
    OperatorExpr c = opCommutator(fw.expr, OperatorExpr::matrix(lift(q)));
    return onShellReduce(c, fw).isZero();
  };

  // an antilinear operator anticommuting with gamma0 passes
  CMat b = gammaMatrix(2) * CMat::conjugation();
  CHECK(anticommutator(b, gammaMatrix(0)) == CMat::zero());
  CHECK(isSymmetry(b));

  // the boost generator s_01 of the prime algebra fails
  CHECK(!isSymmetry(so15Gen(0, 1)));

  // every member of the pure matrix invariance algebra passes
  for (const auto& [label, op] : catalogA32()) CHECK(isSymmetry(op));

  // exactly half of the 64 orts of the extended algebra pass
  int passing = 0;
  for (const auto& [label, op] : catalogErcd64())
    if (isSymmetry(op)) ++passing;
  CHECK(passing == 32);
}

TEST_CASE("momentum substitution of the fw operator") {
  EquationOp fw = fwEquation();
  // minus sector e^{-ikx}: i D0 - gamma0 omega -> omega (I - gamma0)
  OMat minus = momentumSubstitute(fw.expr, +1);
  OMat expect =
      OmegaScalar::omega(Track::Momentum) * (OMat::identity() - lift(gammaMatrix(0)));
  CHECK(minus == expect);

  // it annihilates the constant positive-energy unit spinor
  OMat::Vec e0;
  for (int i = 0; i < 4; ++i) e0(i) = OmegaScalar(i == 0 ? 1 : 0);
  OMat::Vec out = minus.apply(e0);
  for (int i = 0; i < 4; ++i) CHECK(out(i).isZero());

  // plus sector picks the opposite projector
  OMat plus = momentumSubstitute(fw.expr, -1);
  OMat expect2 =
      -(OmegaScalar::omega(Track::Momentum) * (OMat::identity() + lift(gammaMatrix(0))));
  CHECK(plus == expect2);
}

TEST_CASE("momentum substitution rejects unsupported expressions") {
  CHECK_THROWS(momentumSubstitute(OperatorExpr::x(1), +1));
  CHECK_THROWS(momentumSubstitute(OperatorExpr::t(), +1));
  CHECK_THROWS(momentumSubstitute(OperatorExpr::matrix(lift(gammaMatrix(5))), +1));
  CHECK_THROWS(momentumSubstitute(OperatorExpr::d0(), 0));
}
