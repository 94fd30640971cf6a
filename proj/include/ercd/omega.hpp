#pragma once

#include <array>

#include "ercd/mass.hpp"

namespace ercd {

/// Element of the exact field tower Q(i)(m,d1,d2,d3)(omega)(N) with
/// omega^2 = m^2 - d.d and N^2 = 1/(2*omega*(omega+m)).  Stored as the
/// reduced coordinates of 1, omega, N, omega*N; both extension degrees stay
/// <= 1 by construction, so equality is componentwise.
class OmegaScalar {
public:
  static constexpr int kOne = 0, kW = 1, kN = 2, kWN = 3;

  OmegaScalar() : track_(Track::Operator) {}
  explicit OmegaScalar(Track t) : track_(t) {}
  OmegaScalar(long v) : track_(Track::Operator) { c_[kOne] = RatFunc(v); }

  static OmegaScalar fromRat(RatFunc r, Track t = Track::Operator) {
    OmegaScalar s(t);
    s.c_[kOne] = std::move(r);
    return s;
  }
  static OmegaScalar constant(const GaussianRational& g, Track t = Track::Operator) {
    return fromRat(RatFunc(g), t);
  }
  static OmegaScalar i(Track t = Track::Operator) { return constant(GaussianRational::i(), t); }
  static OmegaScalar mass(Track t = Track::Operator) {
    return fromRat(RatFunc(MassMode::massPoly()), t);
  }
  /// d_l (operator track) or k_l (momentum track), l = 1..3.
  static OmegaScalar sym(int l, Track t = Track::Operator) {
    if (l < 1 || l > 3) throw std::invalid_argument("OmegaScalar::sym: axis 1..3");
    return fromRat(RatFunc::variable(l), t);
  }
  static OmegaScalar omega(Track t = Track::Operator) {
    OmegaScalar s(t);
    s.c_[kW] = RatFunc(1);
    return s;
  }
  static OmegaScalar radical(Track t = Track::Operator) {
    OmegaScalar s(t);
    s.c_[kN] = RatFunc(1);
    return s;
  }

  Track track() const { return track_; }
  const RatFunc& comp(int idx) const { return c_[idx]; }

  bool isZero() const {
    return c_[0].isZero() && c_[1].isZero() && c_[2].isZero() && c_[3].isZero();
  }
  bool isRat() const { return c_[1].isZero() && c_[2].isZero() && c_[3].isZero(); }
  /// Free of omega, N and the track symbols, hence meaningful on either track.
  bool isConst() const { return isRat() && c_[0].isConstant(); }
  OmegaScalar withTrack(Track t) const {
    OmegaScalar r = *this;
    r.track_ = t;
    return r;
  }
  bool hasRadical() const { return !c_[2].isZero() || !c_[3].isZero(); }
  const RatFunc& ratValue() const { return c_[kOne]; }

  OmegaScalar operator-() const {
    OmegaScalar r(track_);
    for (int k = 0; k < 4; ++k) r.c_[k] = -c_[k];
    return r;
  }

  friend OmegaScalar operator+(const OmegaScalar& a, const OmegaScalar& b) {
    if (a.track_ != b.track_) {
      // constants are track-agnostic
      if (a.isConst()) return a.withTrack(b.track_) + b;
      if (b.isConst()) return a + b.withTrack(a.track_);
      a.checkTrack(b);
    }
    OmegaScalar r(a.track_);
    for (int k = 0; k < 4; ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
  }
  friend OmegaScalar operator-(const OmegaScalar& a, const OmegaScalar& b) {
    if (a.track_ != b.track_) {
      if (a.isConst()) return a.withTrack(b.track_) - b;
      if (b.isConst()) return a - b.withTrack(a.track_);
      a.checkTrack(b);
    }
    OmegaScalar r(a.track_);
    for (int k = 0; k < 4; ++k) r.c_[k] = a.c_[k] - b.c_[k];
    return r;
  }
  friend OmegaScalar operator*(const OmegaScalar& a, const OmegaScalar& b);

  OmegaScalar& operator+=(const OmegaScalar& o) { return *this = *this + o; }
  OmegaScalar& operator-=(const OmegaScalar& o) { return *this = *this - o; }
  OmegaScalar& operator*=(const OmegaScalar& o) { return *this = *this * o; }

  OmegaScalar inverse() const;
  friend OmegaScalar operator/(const OmegaScalar& a, const OmegaScalar& b) {
    return a * b.inverse();
  }

  friend bool operator==(const OmegaScalar& a, const OmegaScalar& b) {
    if (a.track_ != b.track_) {
      if (a.isConst() || b.isConst()) return a.c_ == b.c_;
      return false;
    }
    return a.c_ == b.c_;
  }
  friend bool operator!=(const OmegaScalar& a, const OmegaScalar& b) { return !(a == b); }

  /// Complex-conjugation automorphism: conjugates Gaussian-rational
  /// coefficients, fixes m, d_l, omega and N.
  OmegaScalar conj() const {
    OmegaScalar r(track_);
    for (int k = 0; k < 4; ++k) r.c_[k] = c_[k].conj();
    return r;
  }

  /// Derivation d/d(d_axis), operator track only.
  OmegaScalar derive(int axis) const;

  /// Plane-wave substitution d_l -> (sectorSign * i) * k_l, omega -> omega(k).
  /// sectorSign = +1 for the negative-frequency sector e^{-ikx}, -1 for e^{+ikx}.
  OmegaScalar toMomentum(int sectorSign) const;

  std::string str() const;

private:
  void checkTrack(const OmegaScalar& o) const {
    if (track_ != o.track_) throw std::logic_error("OmegaScalar: mixed tracks");
  }

  std::array<RatFunc, 4> c_;
  Track track_;
};

}  // namespace ercd
