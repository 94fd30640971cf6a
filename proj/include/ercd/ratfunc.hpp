#pragma once

#include "ercd/polynomial.hpp"

namespace ercd {

/// Reduced fraction of multivariate polynomials.  Invariants: denominator
/// nonzero with lexicographic leading coefficient 1, gcd(num, den) = 1.
class RatFunc {
public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(const Poly& p) : num_(p), den_(1) {}
  RatFunc(long v) : num_(Poly(v)), den_(1) {}
  RatFunc(const GaussianRational& c) : num_(Poly(c)), den_(1) {}
  RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static RatFunc variable(int idx) { return RatFunc(Poly::variable(idx)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool isZero() const { return num_.isZero(); }
  bool isPolynomial() const { return den_ == Poly(1); }
  bool isConstant() const { return num_.isConstant() && den_.isConstant(); }
  GaussianRational constantValue() const {
    return num_.constantValue() / den_.constantValue();
  }

  RatFunc operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    // shared denominator factor keeps the cross products small
    Poly g = polyGcd(a.den_, b.den_);
    if (g == Poly(1)) return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    Poly bd = polyDivExact(b.den_, g);
    return RatFunc(a.num_ * bd + b.num_ * polyDivExact(a.den_, g), a.den_ * bd);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    // Cross-cancel before multiplying to keep intermediate degrees down.
    Poly g1 = polyGcd(a.num_, b.den_);
    Poly g2 = polyGcd(b.num_, a.den_);
    Poly n = polyDivExact(a.num_, g1) * polyDivExact(b.num_, g2);
    Poly d = polyDivExact(a.den_, g2) * polyDivExact(b.den_, g1);
    return RatFunc(std::move(n), std::move(d));
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  RatFunc inverse() const {
    if (isZero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(den_, num_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc conj() const {
    RatFunc r;
    r.num_ = conjPoly(num_);
    r.den_ = conjPoly(den_);
    r.normalize();  // conjugation can flip the monic leading coefficient
    return r;
  }

  RatFunc derivative(int var) const {
    return RatFunc(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
  }

  GaussianRational evaluate(const std::array<GaussianRational, kNumVars>& point) const {
    GaussianRational d = den_.evaluate(point);
    if (d.isZero()) throw std::domain_error("RatFunc::evaluate: pole at sample point");
    return num_.evaluate(point) / d;
  }

  std::string str(Track track = Track::Operator) const {
    if (isPolynomial()) return num_.str(track);
    return "(" + num_.str(track) + ")/(" + den_.str(track) + ")";
  }

private:
  static Poly conjPoly(const Poly& p) {
    Poly r;
    for (const auto& [mo, c] : p.terms()) r.addTerm(mo, c.conj());
    return r;
  }

  void normalize() {
    if (den_.isZero()) throw std::domain_error("RatFunc: zero denominator");
    if (num_.isZero()) {
      den_ = Poly(1);
      return;
    }
    Poly g = polyGcd(num_, den_);
    if (!(g == Poly(1))) {
      num_ = polyDivExact(num_, g);
      den_ = polyDivExact(den_, g);
    }
    GaussianRational lc = den_.leading().second;
    if (!(lc == GaussianRational(1))) {
      GaussianRational inv = lc.inverse();
      num_ = num_ * inv;
      den_ = den_ * inv;
    }
  }

  Poly num_, den_;
};

}  // namespace ercd
