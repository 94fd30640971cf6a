#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>

#include "ercd/rational.hpp"

namespace ercd {

/// Which commuting symbol set a scalar lives in.  The operator track uses
/// {m, d1, d2, d3} with d_l standing for the spatial derivative; the momentum
/// track uses {m, k1, k2, k3}.  The track only changes the omega relation and
/// the rendering; polynomial arithmetic is identical.
enum class Track { Operator, Momentum };

constexpr int kNumVars = 4;  // slot 0 is m, slots 1..3 are d_l / k_l

using Mono = std::array<int, kNumVars>;

/// Sparse multivariate polynomial over GaussianRational in the four commuting
/// symbols.  Terms are kept in lexicographic monomial order; zero coefficients
/// are pruned, so equality is representational.
class Poly {
public:
  using TermMap = std::map<Mono, GaussianRational>;

  Poly() = default;
  explicit Poly(const GaussianRational& c) {
    if (!c.isZero()) terms_[Mono{0, 0, 0, 0}] = c;
  }
  Poly(long v) : Poly(GaussianRational(v)) {}

  static Poly variable(int idx, int power = 1) {
    if (idx < 0 || idx >= kNumVars) throw std::invalid_argument("Poly: variable index");
    Poly p;
    Mono mo{0, 0, 0, 0};
    mo[idx] = power;
    p.terms_[mo] = GaussianRational(1);
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  bool isConstant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{0, 0, 0, 0});
  }
  GaussianRational constantValue() const {
    if (terms_.empty()) return GaussianRational(0);
    return terms_.begin()->second;
  }

  int degree(int var) const {
    int d = 0;
    for (const auto& [mo, c] : terms_) d = std::max(d, mo[var]);
    return d;
  }
  int totalDegree() const {
    int d = 0;
    for (const auto& [mo, c] : terms_)
      d = std::max(d, mo[0] + mo[1] + mo[2] + mo[3]);
    return d;
  }

  /// Leading term in lexicographic order.
  const std::pair<const Mono, GaussianRational>& leading() const {
    if (terms_.empty()) throw std::logic_error("Poly::leading on zero");
    return *terms_.rbegin();
  }

  void addTerm(const Mono& mo, const GaussianRational& c) {
    if (c.isZero()) return;
    auto it = terms_.find(mo);
    if (it == terms_.end()) {
      terms_.emplace(mo, c);
    } else {
      it->second += c;
      if (it->second.isZero()) terms_.erase(it);
    }
  }

  Poly operator-() const {
    Poly r;
    for (const auto& [mo, c] : terms_) r.terms_.emplace(mo, -c);
    return r;
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [mo, c] : o.terms_) addTerm(mo, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [mo, c] : o.terms_) addTerm(mo, -c);
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Mono mo;
        for (int v = 0; v < kNumVars; ++v) mo[v] = ma[v] + mb[v];
        r.addTerm(mo, ca * cb);
      }
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly operator*(const GaussianRational& c) const {
    Poly r;
    if (c.isZero()) return r;
    for (const auto& [mo, co] : terms_) r.terms_.emplace(mo, co * c);
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  friend bool operator<(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size();
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib) {
      if (ia->first != ib->first) return ia->first < ib->first;
      if (!(ia->second == ib->second)) {
        if (ia->second.re() != ib->second.re()) return ia->second.re() < ib->second.re();
        return ia->second.im() < ib->second.im();
      }
    }
    return false;
  }

  Poly derivative(int var) const {
    Poly r;
    for (const auto& [mo, c] : terms_) {
      if (mo[var] == 0) continue;
      Mono m2 = mo;
      m2[var] -= 1;
      r.addTerm(m2, c * GaussianRational(mo[var]));
    }
    return r;
  }

  /// Substitute a rational value for one variable.
  Poly substitute(int var, const GaussianRational& value) const;

  /// Exact evaluation at a full point.
  GaussianRational evaluate(const std::array<GaussianRational, kNumVars>& point) const;

  /// Canonical whitespace-free rendering, e.g. "m^2-d1^2" with variable names
  /// chosen by track.
  std::string str(Track track = Track::Operator) const;

private:
  TermMap terms_;
};

/// Exact multivariate gcd (evaluation-interpolation with PRS fallback).  Result is normalized so that its
/// lexicographic leading coefficient is 1; gcd(0,0) = 0.
Poly polyGcd(const Poly& a, const Poly& b);

/// Exact quotient; throws if b does not divide a.
Poly polyDivExact(const Poly& a, const Poly& b);

}  // namespace ercd
