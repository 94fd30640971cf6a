#pragma once

#include <array>

#include "ercd/clifford.hpp"
#include "ercd/operator_expr.hpp"

namespace ercd {

/// Canonical order of the six antisymmetric index pairs (mu < nu).
extern const std::array<std::pair<int, int>, 6> kPairs;
int pairIndex(int mu, int nu);

/// H = gamma0 (-i gamma^k d_k + m), the Hamiltonian coefficient matrix.
OMat diracHamiltonian();

/// A Poincare generator family: four translations and six rotations/boosts
/// together with the wave equation they are expected to preserve.
struct GeneratorSet {
  std::string name;
  std::array<OperatorExpr, 4> p;
  std::array<OperatorExpr, 6> j;  // indexed by pairIndex
  EquationOp equation;
};

/// Names: local-pd, standard-pd, induced-pd, fw-fermi, fw-bose, pd-bose.
GeneratorSet generatorSet(const std::string& name);
std::vector<std::string> generatorSetNames();

struct SpinMember {
  int mu, nu;
  OMat op;
};

/// A labeled family of spin operators.  The SU(2) families carry the three
/// spatial members, the Lorentz families all six.
struct SpinFamily {
  std::string name;
  std::vector<SpinMember> members;
  /// Member at (mu, nu); antisymmetric lookup, so (nu, mu) gives the negative.
  OMat member(int mu, int nu) const;
};

/// Names: s18 (hermitian display, eigenvalues +-1/2), s-dirac (closed form,
/// omega-dependent), sI, sII, sTS, sV.
SpinFamily spinFamily(const std::string& name);
std::vector<std::string> spinFamilyNames();

/// Constant members of the pure matrix families (sI, sII, sTS, sV) over the
/// Gaussian rationals; antisymmetric in (mu, nu).
CMat spinMatrixConstant(const std::string& name, int mu, int nu);

/// k_l -> -k_l on the momentum track; omega and the normalizer are even in k
/// and stay fixed.
OmegaScalar reflectMomentum(const OmegaScalar& s);

/// Expected spin matrices after conjugation to the Bose gamma representation:
/// the spatial rotations are shared, the boosts differ between the
/// tensor-scalar (vectorRep = false) and vector (vectorRep = true) families.
CMat bose45Matrix(int mu, int nu, bool vectorRep);

/// The canonical transform V = N U with U = -i gamma^l d_l + omega + m and
/// V^{-1} = N U' (U' flips the sign of the d_l).  N^2 = 1/(2 omega (omega+m)),
/// so V V^{-1} = I exactly.
struct FwTransform {
  OMat v, vInv, u, uPrime;
};
FwTransform fwTransform();

/// The Fermi-Bose intertwiner.  The 1/sqrt(2) normalization cannot live in the
/// Gaussian-rational scalar field, so the stored matrices carry the sqrt(2)
/// scale; it cancels in every product, which conjugate() and unitary() apply
/// through the exact factor 1/2.
struct BoseTransform {
  CMat root2W, root2WInv;
  CMat conjugate(const CMat& x) const;
  bool unitary() const;
};
BoseTransform boseTransform();

/// Plane-wave spinor amplitudes on the momentum track, with their images
/// under the canonical transform: the Cartesian unit vectors.
struct SpinorBasis {
  using OVec = OMat::Vec;
  std::array<OVec, 2> vMinus, vPlus;
  std::array<OVec, 2> dMinus, dPlus;
};
SpinorBasis spinorBasis();

/// w^mu = 1/2 eps^{mu nu rho sigma} p_rho j_{nu sigma}, with the epsilon
/// calibration eps^{0123} = -1 fixed so that w^0 = s^l d_l for the induced
/// set.
std::array<OperatorExpr, 4> pauliLubanski(const GeneratorSet& set);

/// Sign of eps^{mu nu rho sigma} under the calibration above; 0 on repeats.
int eps4(int a, int b, int c, int d);

}  // namespace ercd
