#include "ercd/rational.hpp"

#include <stdexcept>

namespace ercd {

GaussianRational GaussianRational::inverse() const {
  if (isZero()) throw std::domain_error("GaussianRational: division by zero");
  mpq_class n2 = re_ * re_ + im_ * im_;
  return GaussianRational(re_ / n2, -im_ / n2);
}

namespace {

std::string ratStr(const mpq_class& q) {
  return q.get_str();
}

// Renders b*i without the leading sign; b != 0.
std::string imagMagnitude(const mpq_class& b) {
  mpq_class a = abs(b);
  if (a == 1) return "i";
  return ratStr(a) + "i";
}

}  // namespace

std::string GaussianRational::str() const {
  if (isZero()) return "0";
  if (im_ == 0) return ratStr(re_);
  if (re_ == 0) return (im_ < 0 ? "-" : "") + imagMagnitude(im_);
  std::string s = ratStr(re_);
  s += (im_ < 0 ? "-" : "+");
  s += imagMagnitude(im_);
  return s;
}

}  // namespace ercd
