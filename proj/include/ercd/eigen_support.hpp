#pragma once

#include <Eigen/Core>

#include "ercd/omega.hpp"

namespace Eigen {

/// Both exact scalars are presented to Eigen as opaque commutative scalars;
/// conjugation and the antilinear structure are handled explicitly by
/// ExtendedMatrix, never through Eigen's complex-number paths.
template <>
struct NumTraits<ercd::GaussianRational> {
  using Real = ercd::GaussianRational;
  using NonInteger = ercd::GaussianRational;
  using Nested = ercd::GaussianRational;
  using Literal = ercd::GaussianRational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 6,
    MulCost = 12,
  };
  static ercd::GaussianRational epsilon() { return ercd::GaussianRational(0); }
  static ercd::GaussianRational dummy_precision() { return ercd::GaussianRational(0); }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<ercd::OmegaScalar> {
  using Real = ercd::OmegaScalar;
  using NonInteger = ercd::OmegaScalar;
  using Nested = ercd::OmegaScalar;
  using Literal = ercd::OmegaScalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 24,
    MulCost = 60,
  };
  static ercd::OmegaScalar epsilon() { return ercd::OmegaScalar(0); }
  static ercd::OmegaScalar dummy_precision() { return ercd::OmegaScalar(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
