#include "ercd/clifford.hpp"

#include <stdexcept>

namespace ercd {

namespace {

using Mat = CMat::Mat;

const GaussianRational kZero(0);
const GaussianRational kOne(1);

Mat pauliBlock(int k) {
  // sigma^k in the top-right block, -sigma^k in the bottom-left
  const GaussianRational i = GaussianRational::i();
  Mat m = Mat::Zero();
  auto set = [&](int r, int c, const GaussianRational& v) {
    m(r, c + 2) = v;
    m(r + 2, c) = -v;
  };
  switch (k) {
    case 1:
      set(0, 1, kOne);
      set(1, 0, kOne);
      break;
    case 2:
      set(0, 1, -i);
      set(1, 0, i);
      break;
    case 3:
      set(0, 0, kOne);
      set(1, 1, -kOne);
      break;
    default:
      throw std::invalid_argument("pauliBlock: k must be 1..3");
  }
  return m;
}

CMat makeGamma(int idx) {
  switch (idx) {
    case 0: {
      Mat g = Mat::Zero();
      g(0, 0) = kOne;
      g(1, 1) = kOne;
      g(2, 2) = -kOne;
      g(3, 3) = -kOne;
      return CMat::linear(g);
    }
    case 1:
    case 2:
    case 3:
      return CMat::linear(pauliBlock(idx));
    case 4:
      return makeGamma(0) * makeGamma(1) * makeGamma(2) * makeGamma(3);
    case 5:
      return makeGamma(1) * makeGamma(3) * CMat::conjugation();
    case 6:
      return (GaussianRational::i() * CMat::identity()) * makeGamma(1) * makeGamma(3) *
             CMat::conjugation();
    case 7:
      return (GaussianRational::i() * CMat::identity()) * makeGamma(0);
    default:
      throw std::invalid_argument("gammaMatrix: index must be 0..7");
  }
}

}  // namespace

namespace {

std::vector<CMat>& gammaCache() {
  static std::vector<CMat> cache = [] {
    std::vector<CMat> v;
    for (int k = 0; k <= 7; ++k) v.push_back(makeGamma(k));
    return v;
  }();
  return cache;
}

}  // namespace

CMat gammaMatrix(int idx) {
  if (idx < 0 || idx > 7) throw std::invalid_argument("gammaMatrix: index must be 0..7");
  return gammaCache()[idx];
}

void mutateGammaEntry(int idx, int row, int col) {
  if (idx < 0 || idx > 7 || row < 0 || row > 3 || col < 0 || col > 3)
    throw std::invalid_argument("mutateGammaEntry: out of range");
  CMat& g = gammaCache()[idx];
  Mat lin = g.lin();
  lin(row, col) += kOne;
  g = CMat(lin, g.anti());
}

CMat epsilonHat() { return gammaMatrix(7); }

int so15Metric(int mu) {
  if (mu < 0 || mu > 5) throw std::invalid_argument("so15Metric: index must be 0..5");
  return mu == 0 ? 1 : -1;
}

CMat so15Gen(int mu, int nu) {
  if (mu < 0 || mu > 5 || nu < 0 || nu > 5)
    throw std::invalid_argument("so15Gen: indices must be 0..5");
  if (mu == nu) return CMat::zero();
  if (nu == 5) return GaussianRational(1, 2) * gammaMatrix(mu);
  if (mu == 5) return -(GaussianRational(1, 2) * gammaMatrix(nu));
  CMat g = commutator(gammaMatrix(mu), gammaMatrix(nu));
  return GaussianRational(1, 4) * g;
}

CMat so6Gen(int a, int b) {
  if (a < 1 || a > 6 || b < 1 || b > 6)
    throw std::invalid_argument("so6Gen: indices must be 1..6");
  if (a == b) return CMat::zero();
  return GaussianRational(1, 4) * commutator(gammaMatrix(a), gammaMatrix(b));
}

std::vector<LabeledOp> catalogCd16() {
  std::vector<LabeledOp> v;
  v.push_back({"I", CMat::identity()});
  for (int mu = 0; mu < 6; ++mu)
    for (int nu = mu + 1; nu < 6; ++nu) {
      v.push_back({"2s_" + std::to_string(mu) + std::to_string(nu),
                   GaussianRational(2) * so15Gen(mu, nu)});
    }
  return v;
}

std::vector<LabeledOp> catalogErcd64() {
  const GaussianRational i = GaussianRational::i();
  const CMat iOp = i * CMat::identity();
  const CMat c = CMat::conjugation();
  std::vector<LabeledOp> v;
  for (const auto& [label, op] : catalogCd16()) {
    v.push_back({label, op});
  }
  for (const auto& [label, op] : catalogCd16()) {
    v.push_back({"i*" + label, iOp * op});
  }
  for (const auto& [label, op] : catalogCd16()) {
    v.push_back({"C*" + label, c * op});
  }
  for (const auto& [label, op] : catalogCd16()) {
    v.push_back({"i*C*" + label, iOp * c * op});
  }
  return v;
}

std::vector<LabeledOp> catalogA32() {
  std::vector<LabeledOp> v;
  const CMat eps = epsilonHat();
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b)
      v.push_back({"s_" + std::to_string(a) + std::to_string(b), so6Gen(a, b)});
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b)
      v.push_back({"eps*s_" + std::to_string(a) + std::to_string(b), eps * so6Gen(a, b)});
  v.push_back({"eps", eps});
  v.push_back({"I", CMat::identity()});
  return v;
}

}  // namespace ercd
