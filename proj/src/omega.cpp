#include "ercd/omega.hpp"

namespace ercd {

namespace {

struct Relations {
  RatFunc S;    // omega^2
  RatFunc n2a;  // N^2 = n2a + n2b * omega
  RatFunc n2b;
};

Relations relationsFor(Track t) {
  RatFunc S(omegaSquaredPoly(t));
  RatFunc m(MassMode::massPoly());
  RatFunc m2 = m * m;
  // N^2 = 1/(2*omega*(omega+m)) = 1/(2S + 2m*omega) rationalized:
  RatFunc diff = S - m2;  // -d.d resp. +k.k
  RatFunc n2a = RatFunc(1) / (RatFunc(2) * diff);
  RatFunc n2b = -m / (RatFunc(2) * S * diff);
  return {std::move(S), std::move(n2a), std::move(n2b)};
}

// Product of two basis elements as tower coordinates.
std::array<RatFunc, 4> basisProduct(int a, int b, const Relations& rel) {
  if (a > b) std::swap(a, b);
  const RatFunc zero;
  const RatFunc one(1);
  switch (a * 4 + b) {
    case 0 * 4 + 0: return {one, zero, zero, zero};
    case 0 * 4 + 1: return {zero, one, zero, zero};
    case 0 * 4 + 2: return {zero, zero, one, zero};
    case 0 * 4 + 3: return {zero, zero, zero, one};
    case 1 * 4 + 1: return {rel.S, zero, zero, zero};
    case 1 * 4 + 2: return {zero, zero, zero, one};
    case 1 * 4 + 3: return {zero, zero, rel.S, zero};
    case 2 * 4 + 2: return {rel.n2a, rel.n2b, zero, zero};
    case 2 * 4 + 3: return {rel.n2b * rel.S, rel.n2a, zero, zero};
    case 3 * 4 + 3: return {rel.n2a * rel.S, rel.n2b * rel.S, zero, zero};
  }
  throw std::logic_error("basisProduct: bad index");
}

}  // namespace

OmegaScalar operator*(const OmegaScalar& a, const OmegaScalar& b) {
  if (a.track_ != b.track_) {
    if (a.isConst()) return a.withTrack(b.track_) * b;
    if (b.isConst()) return a * b.withTrack(a.track_);
    a.checkTrack(b);
  }
  OmegaScalar r(a.track_);
  if (a.isZero() || b.isZero()) return r;
  const Relations rel = relationsFor(a.track_);
  for (int i = 0; i < 4; ++i) {
    if (a.c_[i].isZero()) continue;
    for (int j = 0; j < 4; ++j) {
      if (b.c_[j].isZero()) continue;
      RatFunc coeff = a.c_[i] * b.c_[j];
      auto basis = basisProduct(i, j, rel);
      for (int k = 0; k < 4; ++k) {
        if (!basis[k].isZero()) r.c_[k] += coeff * basis[k];
      }
    }
  }
  return r;
}

OmegaScalar OmegaScalar::inverse() const {
  if (isZero()) throw std::domain_error("OmegaScalar: division by zero");
  const Relations rel = relationsFor(track_);

  // Invert in the omega layer: (a + b*omega)^-1 = (a - b*omega)/(a^2 - b^2 S).
  auto invOmegaLayer = [&](const RatFunc& a, const RatFunc& b) -> std::array<RatFunc, 2> {
    RatFunc den = a * a - b * b * rel.S;
    if (den.isZero()) throw std::domain_error("OmegaScalar: non-invertible omega-layer element");
    RatFunc di = den.inverse();
    return {a * di, -b * di};
  };

  if (!hasRadical()) {
    auto inv = invOmegaLayer(c_[kOne], c_[kW]);
    OmegaScalar r(track_);
    r.c_[kOne] = inv[0];
    r.c_[kW] = inv[1];
    return r;
  }

  // z = u + v*N with u, v in the omega layer; z^-1 = (u - v*N) / (u^2 - v^2 N^2).
  OmegaScalar u(track_), v(track_);
  u.c_[kOne] = c_[kOne];
  u.c_[kW] = c_[kW];
  v.c_[kOne] = c_[kN];
  v.c_[kW] = c_[kWN];
  OmegaScalar n2(track_);
  n2.c_[kOne] = rel.n2a;
  n2.c_[kW] = rel.n2b;
  OmegaScalar den = u * u - v * v * n2;  // stays in the omega layer
  auto inv = invOmegaLayer(den.c_[kOne], den.c_[kW]);
  OmegaScalar deninv(track_);
  deninv.c_[kOne] = inv[0];
  deninv.c_[kW] = inv[1];
  OmegaScalar numer(track_);
  numer.c_[kOne] = c_[kOne];
  numer.c_[kW] = c_[kW];
  numer.c_[kN] = -c_[kN];
  numer.c_[kWN] = -c_[kWN];
  return numer * deninv;
}

OmegaScalar OmegaScalar::derive(int axis) const {
  if (track_ != Track::Operator)
    throw std::logic_error("OmegaScalar::derive: operator track only");
  if (axis < 1 || axis > 3) throw std::invalid_argument("OmegaScalar::derive: axis 1..3");

  const Relations rel = relationsFor(track_);
  // d(omega)/d(d_axis) = -d_axis/omega = -d_axis*omega/S.
  OmegaScalar dw(track_);
  dw.c_[kW] = -RatFunc::variable(axis) / rel.S;

  OmegaScalar result(track_);
  // Rational coefficients differentiate termwise.
  for (int k = 0; k < 4; ++k) {
    if (c_[k].isZero()) continue;
    OmegaScalar t(track_);
    t.c_[k] = c_[k].derivative(axis);
    result += t;
  }
  if (c_[kW].isZero() && c_[kN].isZero() && c_[kWN].isZero()) return result;

  // d(N)/d(d_axis) = d(omega) * (-(2*omega+m)/(2*omega*(omega+m))) * N.
  OmegaScalar w = omega(track_);
  OmegaScalar m = mass(track_);
  OmegaScalar two(track_);
  two.c_[kOne] = RatFunc(2);
  OmegaScalar dn = dw * (-(two * w + m)) * (two * w * (w + m)).inverse() * radical(track_);

  if (!c_[kW].isZero()) result += fromRat(c_[kW], track_) * dw;
  if (!c_[kN].isZero()) result += fromRat(c_[kN], track_) * dn;
  if (!c_[kWN].isZero())
    result += fromRat(c_[kWN], track_) * (dw * radical(track_) + w * dn);
  return result;
}

OmegaScalar OmegaScalar::toMomentum(int sectorSign) const {
  if (track_ != Track::Operator)
    throw std::logic_error("OmegaScalar::toMomentum: already on momentum track");
  const GaussianRational unit(mpq_class(0), mpq_class(sectorSign >= 0 ? 1 : -1));  // +-i

  auto mapPoly = [&](const Poly& p) {
    Poly r;
    for (const auto& [mo, c] : p.terms()) {
      int spatial = mo[1] + mo[2] + mo[3];
      GaussianRational f = c;
      for (int e = 0; e < spatial; ++e) f *= unit;
      r.addTerm(mo, f);
    }
    return r;
  };
  auto mapRat = [&](const RatFunc& r) { return RatFunc(mapPoly(r.num()), mapPoly(r.den())); };

  OmegaScalar out(Track::Momentum);
  for (int k = 0; k < 4; ++k) out.c_[k] = mapRat(c_[k]);
  return out;
}

std::string OmegaScalar::str() const {
  if (isZero()) return "0";
  static const char* basisNames[4] = {"", "w", "Nrm", "w*Nrm"};
  std::string s;
  for (int k = 0; k < 4; ++k) {
    if (c_[k].isZero()) continue;
    std::string part;
    if (k == 0) {
      part = c_[k].str(track_);
    } else if (c_[k] == RatFunc(1)) {
      part = basisNames[k];
    } else {
      part = "(" + c_[k].str(track_) + ")*" + basisNames[k];
    }
    if (!s.empty()) s += "+";
    s += part;
  }
  return s;
}

}  // namespace ercd
