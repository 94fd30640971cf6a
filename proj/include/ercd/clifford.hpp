#pragma once

#include <string>
#include <vector>

#include "ercd/extended_matrix.hpp"

namespace ercd {

using CMat = ExtendedMatrix<GaussianRational>;

/// Dirac matrices in the Pauli--Dirac representation together with the
/// extension to the seven anticommuting imaginary units:
///   gamma(0..3)  the standard Dirac set, gamma0 = diag(1,1,-1,-1)
///   gamma(4) = gamma0 gamma1 gamma2 gamma3
///   gamma(5) = gamma1 gamma3 Chat        (antilinear)
///   gamma(6) = i gamma1 gamma3 Chat      (antilinear)
///   gamma(7) = i gamma0
/// gamma(1..7) pairwise anticommute with square -1.
CMat gammaMatrix(int idx);

/// i*gamma0, the extra Casimir element commuting with all s_AB.
CMat epsilonHat();

/// s_{mu nu} for mu,nu = 0..5: quarter-commutators of gamma(0..4) extended by
/// s_{mu 5} = gamma(mu)/2, the SO(1,5) prime generators.
CMat so15Gen(int mu, int nu);

/// Metric of the SO(1,5) relations, diag(+1,-1,-1,-1,-1,-1).
int so15Metric(int mu);

/// s_{AB} for A,B = 1..6: quarter-commutators of the anticommuting set
/// gamma(1..6), the SO(6) generators.
CMat so6Gen(int a, int b);

struct LabeledOp {
  std::string label;
  CMat op;
};

/// The 16 orts of the standard Clifford--Dirac algebra: I and 2 s_{mu nu}.
std::vector<LabeledOp> catalogCd16();

/// The 64 orts of the extended algebra: cd16, i cd16, Chat cd16, i Chat cd16.
std::vector<LabeledOp> catalogErcd64();

/// Soundness-testing hook: adds +1 to one entry of the cached linear part of
/// gamma(idx).  Everything derived from the gammas afterwards sees the
/// perturbed matrix; there is no way to undo it within the process.
void mutateGammaEntry(int idx, int row, int col);

/// The pure matrix invariance algebra of the FW equation: the 15 s_{AB}, the
/// 15 eps s_{AB} and eps itself, followed by the identity.  The listed 31
/// operators span a 31-dimensional real space; the counting that names the
/// algebra 32-dimensional adjoins the identity, which is appended last with
/// label "I".
std::vector<LabeledOp> catalogA32();

}  // namespace ercd
