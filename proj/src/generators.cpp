#include "ercd/generators.hpp"

#include <stdexcept>

namespace ercd {

namespace {

const OmegaScalar kI = OmegaScalar::i();
const OmegaScalar kHalfScalar = OmegaScalar::constant(GaussianRational(1, 2));
const GaussianRational kHalf(1, 2);
const GaussianRational kHalfI = GaussianRational(mpq_class(0), mpq_class(1, 2));

int eps3(int k, int l, int n) {
  if (k == l || l == n || k == n) return 0;
  return ((l - k + 3) % 3 == 1) ? 1 : -1;
}

OperatorExpr sc(const OmegaScalar& s) { return OperatorExpr::scalar(s); }
OperatorExpr mat(const CMat& m) { return OperatorExpr::matrix(lift(m)); }

/// Primary Lorentz spin: quarter commutators of the Dirac matrices.
CMat sPrim(int mu, int nu) {
  return GaussianRational(1, 4) * commutator(gammaMatrix(mu), gammaMatrix(nu));
}

/// Spin with lowered indices: gamma_k = -gamma^k flips the mixed pairs.
CMat sLow(int mu, int nu) {
  CMat s = sPrim(mu, nu);
  return ((mu == 0) != (nu == 0)) ? -s : s;
}

/// The second spin-1 building family, with its antilinear members.
CMat sIIMat(int mu, int nu) {
  const CMat g2c = gammaMatrix(2) * CMat::conjugation();
  const CMat g0 = gammaMatrix(0);
  CMat r;
  if (mu == 0 && nu == 1) r = kHalfI * g2c;
  else if (mu == 0 && nu == 2) r = -(kHalf * g2c);
  else if (mu == 0 && nu == 3) r = -(kHalf * g0);
  else if (mu == 1 && nu == 2) r = kHalfI * CMat::identity();
  else if (mu == 1 && nu == 3) r = -(kHalfI * (g0 * g2c));  // -s_31
  else if (mu == 2 && nu == 3) r = kHalf * (g0 * g2c);
  else throw std::invalid_argument("sIIMat: bad pair");
  return r;
}

CMat sIMat(int mu, int nu) {
  if (mu == 0) return kHalfI * (gammaMatrix(nu) * gammaMatrix(4));
  return sPrim(mu, nu);
}

/// Spatial spin vectors (s^1, s^2, s^3) = (s_23, s_31, s_12) of a family
/// given by its pair matrices.
std::array<CMat, 3> spinVector(CMat (*family)(int, int)) {
  return {family(2, 3), -family(1, 3), family(1, 2)};
}

const OmegaScalar kW = OmegaScalar::omega();
// evaluated per call, not at static-init time: the CLI may pin the mass first
OmegaScalar kMass() { return OmegaScalar::mass(); }

OmegaScalar dsym(int l) { return OmegaScalar::sym(l); }

OperatorExpr coord(int mu) { return mu == 0 ? OperatorExpr::t() : OperatorExpr::x(mu); }
OperatorExpr deriv(int mu) { return mu == 0 ? OperatorExpr::d0() : sc(dsym(mu)); }

/// Common boost shape of the canonical-representation sets:
/// t d_k + i gamma0 (X_k omega + d_k/(2 omega) + (svec x d)_k / (omega + m))
OperatorExpr fwBoost(int k, const std::array<CMat, 3>& svec) {
  OperatorExpr brace = OperatorExpr::x(k) * sc(kW) + sc(dsym(k) / (OmegaScalar(2) * kW));
  const OmegaScalar inv = OmegaScalar(1) / (kW + kMass());
  for (int l = 1; l <= 3; ++l)
    for (int n = 1; n <= 3; ++n) {
      int e = eps3(k, l, n);
      if (e == 0) continue;
      OperatorExpr term = mat(svec[l - 1]) * sc(OmegaScalar(e) * dsym(n) * inv);
      brace += term;
    }
  return OperatorExpr::t() * sc(dsym(k)) +
         OperatorExpr::matrix(kI * lift(gammaMatrix(0))) * brace;
}

GeneratorSet makeSet(const std::string& name) {
  GeneratorSet g;
  g.name = name;
  if (name == "local-pd" || name == "standard-pd") {
    g.equation = diracEquation();
    for (int mu = 0; mu < 4; ++mu) g.p[mu] = deriv(mu);
    for (const auto& [mu, nu] : kPairs)
      g.j[pairIndex(mu, nu)] =
          coord(mu) * deriv(nu) - coord(nu) * deriv(mu) + mat(sLow(mu, nu));
    if (name == "standard-pd") {
      for (auto& e : g.p) e = sc(kI) * e;
      for (auto& e : g.j) e = sc(kI) * e;
    }
    return g;
  }
  if (name == "induced-pd") {
    g.equation = diracEquation();
    OperatorExpr p0 = OperatorExpr::matrix((-kI) * diracHamiltonian());
    g.p[0] = p0;
    for (int k = 1; k <= 3; ++k) g.p[k] = sc(dsym(k));
    for (int k = 1; k <= 3; ++k)
      for (int l = k + 1; l <= 3; ++l)
        g.j[pairIndex(k, l)] =
            coord(k) * sc(dsym(l)) - coord(l) * sc(dsym(k)) + mat(sPrim(k, l));
    for (int k = 1; k <= 3; ++k)
      g.j[pairIndex(0, k)] =
          OperatorExpr::t() * sc(dsym(k)) -
          sc(kHalfScalar) * (OperatorExpr::x(k) * p0 + p0 * OperatorExpr::x(k));
    return g;
  }
  if (name == "fw-fermi" || name == "fw-bose") {
    const bool bose = (name == "fw-bose");
    g.equation = fwEquation();
    g.p[0] = OperatorExpr::matrix((-kI) * (kW * lift(gammaMatrix(0))));
    for (int k = 1; k <= 3; ++k) g.p[k] = sc(dsym(k));
    for (int k = 1; k <= 3; ++k)
      for (int l = k + 1; l <= 3; ++l) {
        OperatorExpr spin = mat(sPrim(k, l));
        if (bose) spin += mat(sIIMat(k, l));
        g.j[pairIndex(k, l)] =
            coord(k) * sc(dsym(l)) - coord(l) * sc(dsym(k)) + spin;
      }
    std::array<CMat, 3> svec = spinVector(&sPrim);
    if (bose) {
      auto svecII = spinVector(&sIIMat);
      for (int a = 0; a < 3; ++a) svec[a] += svecII[a];
    }
    for (int k = 1; k <= 3; ++k) g.j[pairIndex(0, k)] = fwBoost(k, svec);
    return g;
  }
  if (name == "pd-bose") {
    g.equation = diracEquation();
    const OMat h = diracHamiltonian();
    const OmegaScalar inv2w = OmegaScalar(1) / (OmegaScalar(2) * kW);
    const OMat g2c = lift(gammaMatrix(2) * CMat::conjugation());
    // omega-dependent partner family
    std::array<OMat, 6> shat;
    shat[pairIndex(0, 1)] = lift(sIIMat(0, 1));
    shat[pairIndex(0, 2)] = lift(sIIMat(0, 2));
    shat[pairIndex(0, 3)] = -(inv2w * h);
    shat[pairIndex(1, 2)] = lift(sIIMat(1, 2));
    shat[pairIndex(1, 3)] = -((kI * inv2w) * (h * g2c));  // -shat_31
    shat[pairIndex(2, 3)] = inv2w * (h * g2c);
    OperatorExpr p0 = OperatorExpr::matrix((-kI) * h);
    g.p[0] = p0;
    for (int k = 1; k <= 3; ++k) g.p[k] = sc(dsym(k));
    for (int k = 1; k <= 3; ++k)
      for (int l = k + 1; l <= 3; ++l)
        g.j[pairIndex(k, l)] = coord(k) * sc(dsym(l)) - coord(l) * sc(dsym(k)) +
                               mat(sPrim(k, l)) +
                               OperatorExpr::matrix(shat[pairIndex(k, l)]);
    const OmegaScalar inv = OmegaScalar(1) / (kW + kMass());
    std::array<OMat, 3> shat0 = {lift(sIIMat(0, 1)), lift(sIIMat(0, 2)), -(inv2w * h)};
    for (int k = 1; k <= 3; ++k) {
      OperatorExpr jb = OperatorExpr::t() * sc(dsym(k)) - OperatorExpr::x(k) * p0 +
                        mat(sLow(0, k));
      for (int l = 1; l <= 3; ++l)
        for (int n = 1; n <= 3; ++n) {
          int e = eps3(k, l, n);
          if (e == 0) continue;
          jb += OperatorExpr::matrix(shat0[l - 1]) * sc(OmegaScalar(e) * dsym(n) * inv);
        }
      g.j[pairIndex(0, k)] = jb;
    }
    return g;
  }
  throw std::invalid_argument("generatorSet: unknown name " + name);
}

SpinFamily makeFamily(const std::string& name) {
  SpinFamily f;
  f.name = name;
  auto pushSpatial = [&](auto member) {
    f.members.push_back({2, 3, member(2, 3)});
    f.members.push_back({3, 1, member(3, 1)});
    f.members.push_back({1, 2, member(1, 2)});
  };
  if (name == "s18") {
    // hermitian display of the spatial spin, eigenvalues +-1/2
    pushSpatial([](int a, int b) {
      CMat s = (a < b) ? sPrim(a, b) : -sPrim(b, a);
      return lift(GaussianRational::i() * s);
    });
    return f;
  }
  if (name == "s-dirac") {
    // closed form of the conjugated spin: s_k + (i/2omega) eps_kab gamma^a d_b
    //   + (s_k d.d - (s.d) d_k) / (omega (omega + m))
    auto svec = spinVector(&sPrim);
    OmegaScalar dd = OmegaScalar(0);
    for (int l = 1; l <= 3; ++l) dd += dsym(l) * dsym(l);
    OMat sDotD = OMat::zero();
    for (int l = 1; l <= 3; ++l) sDotD += dsym(l) * lift(svec[l - 1]);
    const OmegaScalar invW2 = kI / (OmegaScalar(2) * kW);
    const OmegaScalar invWM = OmegaScalar(1) / (kW * (kW + kMass()));
    auto closed = [&](int k) {
      OMat r = lift(svec[k - 1]);
      for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
          int e = eps3(k, a, b);
          if (e == 0) continue;
          r += (OmegaScalar(e) * invW2 * dsym(b)) * lift(gammaMatrix(a));
        }
      r += invWM * (dd * lift(svec[k - 1]) - dsym(k) * sDotD);
      return r;
    };
    f.members.push_back({2, 3, closed(1)});
    f.members.push_back({3, 1, closed(2)});
    f.members.push_back({1, 2, closed(3)});
    return f;
  }
  for (const auto& [mu, nu] : kPairs)
    f.members.push_back({mu, nu, lift(spinMatrixConstant(name, mu, nu))});
  return f;
}

}  // namespace

const std::array<std::pair<int, int>, 6> kPairs = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

int pairIndex(int mu, int nu) {
  for (size_t i = 0; i < kPairs.size(); ++i)
    if (kPairs[i].first == mu && kPairs[i].second == nu) return static_cast<int>(i);
  throw std::invalid_argument("pairIndex: need 0 <= mu < nu <= 3");
}

OMat diracHamiltonian() {
  OMat spatial = OMat::zero();
  for (int l = 1; l <= 3; ++l) spatial += dsym(l) * lift(gammaMatrix(l));
  return lift(gammaMatrix(0)) * ((-kI) * spatial + kMass() * OMat::identity());
}

GeneratorSet generatorSet(const std::string& name) { return makeSet(name); }

std::vector<std::string> generatorSetNames() {
  return {"local-pd", "standard-pd", "induced-pd", "fw-fermi", "fw-bose", "pd-bose"};
}

OMat SpinFamily::member(int mu, int nu) const {
  for (const auto& m : members) {
    if (m.mu == mu && m.nu == nu) return m.op;
    if (m.mu == nu && m.nu == mu) return -m.op;
  }
  throw std::invalid_argument("SpinFamily::member: pair not present");
}

SpinFamily spinFamily(const std::string& name) { return makeFamily(name); }

CMat spinMatrixConstant(const std::string& name, int mu, int nu) {
  if (mu == nu) return CMat::zero();
  if (mu > nu) return -spinMatrixConstant(name, nu, mu);
  if (name == "sI") return sIMat(mu, nu);
  if (name == "sII") return sIIMat(mu, nu);
  if (name == "sTS") return sIMat(mu, nu) + sIIMat(mu, nu);
  if (name == "sV") {
    CMat m = sIMat(mu, nu);
    if (mu == 0) m = -m;
    return m + sIIMat(mu, nu);
  }
  throw std::invalid_argument("spinMatrixConstant: unknown family " + name);
}

OmegaScalar reflectMomentum(const OmegaScalar& s) {
  if (s.track() != Track::Momentum)
    throw std::invalid_argument("reflectMomentum: momentum track only");
  auto flipRat = [](const RatFunc& r) {
    auto flipPoly = [](const Poly& p) {
      Poly q;
      for (const auto& [mo, c] : p.terms()) {
        int odd = (mo[1] + mo[2] + mo[3]) % 2;
        q.addTerm(mo, odd ? -c : c);
      }
      return q;
    };
    return RatFunc(flipPoly(r.num()), flipPoly(r.den()));
  };
  OmegaScalar r(Track::Momentum);
  OmegaScalar basis[4] = {OmegaScalar(1).withTrack(Track::Momentum),
                          OmegaScalar::omega(Track::Momentum),
                          OmegaScalar::radical(Track::Momentum),
                          OmegaScalar::omega(Track::Momentum) *
                              OmegaScalar::radical(Track::Momentum)};
  for (int c = 0; c < 4; ++c)
    r += OmegaScalar::fromRat(flipRat(s.comp(c)), Track::Momentum) * basis[c];
  return r;
}

std::vector<std::string> spinFamilyNames() {
  return {"s18", "s-dirac", "sI", "sII", "sTS", "sV"};
}

CMat bose45Matrix(int mu, int nu, bool vectorRep) {
  using Mat = CMat::Mat;
  const GaussianRational one(1);
  const GaussianRational i = GaussianRational::i();
  Mat m = Mat::Zero();
  auto idx = pairIndex(mu, nu);
  if (idx == pairIndex(1, 2)) {
    m(0, 1) = -one;
    m(1, 0) = one;
  } else if (idx == pairIndex(1, 3)) {  // -s_31
    m(0, 2) = -one;
    m(2, 0) = one;
  } else if (idx == pairIndex(2, 3)) {
    m(1, 2) = -one;
    m(2, 1) = one;
  } else if (!vectorRep) {
    if (idx == pairIndex(0, 1)) {
      m(1, 2) = -i;
      m(2, 1) = i;
    } else if (idx == pairIndex(0, 2)) {
      m(0, 2) = i;
      m(2, 0) = -i;
    } else {
      m(0, 1) = -i;
      m(1, 0) = i;
    }
  } else {
    if (idx == pairIndex(0, 1)) {
      m(0, 3) = -one;
      m(3, 0) = -one;
    } else if (idx == pairIndex(0, 2)) {
      m(1, 3) = -one;
      m(3, 1) = -one;
    } else {
      m(2, 3) = -one;
      m(3, 2) = -one;
    }
  }
  return CMat::linear(m);
}

FwTransform fwTransform() {
  FwTransform t;
  t.u = (kW + kMass()) * OMat::identity();
  t.uPrime = t.u;
  for (int l = 1; l <= 3; ++l) {
    OMat gl = dsym(l) * lift(gammaMatrix(l));
    t.u += (-kI) * gl;
    t.uPrime += kI * gl;
  }
  const OmegaScalar n = OmegaScalar::radical();
  t.v = n * t.u;
  t.vInv = n * t.uPrime;
  return t;
}

CMat BoseTransform::conjugate(const CMat& x) const {
  return GaussianRational(1, 2) * (root2W * x * root2WInv);
}

bool BoseTransform::unitary() const {
  const CMat id = CMat::identity();
  return GaussianRational(1, 2) * (root2W * root2WInv) == id &&
         GaussianRational(1, 2) * (root2WInv * root2W) == id;
}

BoseTransform boseTransform() {
  using Mat = CMat::Mat;
  const GaussianRational one(1);
  const GaussianRational i = GaussianRational::i();
  Mat wl = Mat::Zero(), wa = Mat::Zero(), il = Mat::Zero(), ia = Mat::Zero();
  wl(0, 1) = -one; wa(0, 3) = one;
  wl(1, 1) = i;    wa(1, 3) = i;
  wl(2, 0) = -one; wa(2, 2) = one;
  wl(3, 0) = -one; wa(3, 2) = -one;
  il(0, 2) = -one; il(0, 3) = -one;
  il(1, 0) = -one; il(1, 1) = -i;
  ia(2, 2) = one;  ia(2, 3) = -one;
  ia(3, 0) = one;  ia(3, 1) = i;
  BoseTransform t;
  t.root2W = CMat(wl, wa);
  t.root2WInv = CMat(il, ia);
  return t;
}

SpinorBasis spinorBasis() {
  const Track mt = Track::Momentum;
  const OmegaScalar n = OmegaScalar::radical(mt);
  const OmegaScalar w = OmegaScalar::omega(mt);
  const OmegaScalar m = OmegaScalar::mass(mt);
  const OmegaScalar im = OmegaScalar::i(mt);
  auto k = [&](int l) { return OmegaScalar::sym(l, mt); };
  const OmegaScalar zero = OmegaScalar(0).withTrack(mt);
  const OmegaScalar wm = w + m;
  SpinorBasis b;
  auto vec = [&](OmegaScalar a0, OmegaScalar a1, OmegaScalar a2, OmegaScalar a3) {
    SpinorBasis::OVec v;
    v(0) = n * a0;
    v(1) = n * a1;
    v(2) = n * a2;
    v(3) = n * a3;
    return v;
  };
  // (sigma.k) acting on the two Cartesian 2-columns
  b.vMinus[0] = vec(wm, zero, k(3), k(1) + im * k(2));
  b.vMinus[1] = vec(zero, wm, k(1) - im * k(2), -k(3));
  b.vPlus[0] = vec(k(3), k(1) + im * k(2), wm, zero);
  b.vPlus[1] = vec(k(1) - im * k(2), -k(3), zero, wm);
  auto unit = [&](int pos) {
    SpinorBasis::OVec v;
    for (int r = 0; r < 4; ++r) v(r) = (r == pos) ? OmegaScalar(1).withTrack(mt) : zero;
    return v;
  };
  b.dMinus[0] = unit(0);
  b.dMinus[1] = unit(1);
  b.dPlus[0] = unit(2);
  b.dPlus[1] = unit(3);
  return b;
}

int eps4(int a, int b, int c, int d) {
  int idx[4] = {a, b, c, d};
  int sign = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (idx[i] == idx[j]) return 0;
      if (idx[i] > idx[j]) {
        std::swap(idx[i], idx[j]);
        sign = -sign;
      }
    }
  return -sign;  // calibration: eps(0,1,2,3) = -1
}

std::array<OperatorExpr, 4> pauliLubanski(const GeneratorSet& set) {
  std::array<OperatorExpr, 4> w;
  for (int mu = 0; mu < 4; ++mu) {
    OperatorExpr acc;
    for (int nu = 0; nu < 4; ++nu)
      for (int rho = 0; rho < 4; ++rho)
        for (int sig = 0; sig < 4; ++sig) {
          int e = eps4(mu, nu, rho, sig);
          if (e == 0) continue;
          OperatorExpr jns =
              (nu < sig) ? set.j[pairIndex(nu, sig)] : -set.j[pairIndex(sig, nu)];
          acc += sc(OmegaScalar(e) * kHalfScalar) * (set.p[rho] * jns);
        }
    w[mu] = acc;
  }
  return w;
}

}  // namespace ercd
