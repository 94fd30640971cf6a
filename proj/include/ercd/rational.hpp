#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>

namespace ercd {

/// Exact complex rational a + b*i with arbitrary-precision components.
/// All arithmetic is exact; denominators are kept positive and reduced.
class GaussianRational {
public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long v) : re_(v), im_(0) {}
  GaussianRational(const mpq_class& re) : re_(re), im_(0) { canon(); }
  GaussianRational(mpq_class re, mpq_class im)
      : re_(std::move(re)), im_(std::move(im)) {
    canon();
  }
  GaussianRational(long num, long den) : re_(num, den), im_(0) { canon(); }

  static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool isZero() const { return re_ == 0 && im_ == 0; }
  bool isReal() const { return im_ == 0; }

  GaussianRational conj() const { return GaussianRational(re_, -im_); }

  GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }

  /// Multiplicative inverse; throws on zero.
  GaussianRational inverse() const;

  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * b.inverse();
  }
  GaussianRational& operator/=(const GaussianRational& o) { return *this = *this * o.inverse(); }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  /// Canonical whitespace-free rendering: "0", "3", "-1/2", "i", "-2i", "1+i", "1/2-3i".
  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& g) {
    return os << g.str();
  }

private:
  void canon() {
    re_.canonicalize();
    im_.canonicalize();
  }

  mpq_class re_, im_;
};

}  // namespace ercd
