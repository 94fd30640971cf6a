#pragma once

#include <string>
#include <vector>

#include "ercd/eigen_support.hpp"

namespace ercd {

/// Operator of the form A + B*Chat acting on 4-spinors, where Chat is the
/// antilinear involution psi -> conj(psi).  A is the linear part, B the
/// antilinear part.  Composition follows from Chat X = sigma(X) Chat and
/// Chat^2 = 1, with sigma the entrywise conjugation:
///   (A + B Chat)(A' + B' Chat) = (A A' + B sigma(B')) + (A B' + B sigma(A')) Chat
template <typename Scalar>
class ExtendedMatrix {
public:
  using Mat = Eigen::Matrix<Scalar, 4, 4>;
  using Vec = Eigen::Matrix<Scalar, 4, 1>;

  ExtendedMatrix() : lin_(Mat::Zero()), anti_(Mat::Zero()) {}
  ExtendedMatrix(Mat lin, Mat anti) : lin_(std::move(lin)), anti_(std::move(anti)) {}

  static ExtendedMatrix zero() { return ExtendedMatrix(); }
  static ExtendedMatrix identity() { return linear(Mat::Identity()); }
  static ExtendedMatrix linear(const Mat& a) { return ExtendedMatrix(a, Mat::Zero()); }
  static ExtendedMatrix antilinear(const Mat& b) { return ExtendedMatrix(Mat::Zero(), b); }
  /// Chat itself.
  static ExtendedMatrix conjugation() { return antilinear(Mat::Identity()); }

  const Mat& lin() const { return lin_; }
  const Mat& anti() const { return anti_; }

  bool isZero() const { return matZero(lin_) && matZero(anti_); }
  bool isLinear() const { return matZero(anti_); }
  bool isAntilinear() const { return matZero(lin_); }

  static Mat sigma(const Mat& m) {
    Mat r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r(i, j) = m(i, j).conj();
    return r;
  }
  static Vec sigmaVec(const Vec& v) {
    Vec r;
    for (int i = 0; i < 4; ++i) r(i) = v(i).conj();
    return r;
  }

  ExtendedMatrix operator-() const { return ExtendedMatrix(-lin_, -anti_); }

  friend ExtendedMatrix operator+(const ExtendedMatrix& x, const ExtendedMatrix& y) {
    return ExtendedMatrix(x.lin_ + y.lin_, x.anti_ + y.anti_);
  }
  friend ExtendedMatrix operator-(const ExtendedMatrix& x, const ExtendedMatrix& y) {
    return ExtendedMatrix(x.lin_ - y.lin_, x.anti_ - y.anti_);
  }
  friend ExtendedMatrix operator*(const ExtendedMatrix& x, const ExtendedMatrix& y) {
    return ExtendedMatrix(x.lin_ * y.lin_ + x.anti_ * sigma(y.anti_),
                          x.lin_ * y.anti_ + x.anti_ * sigma(y.lin_));
  }
  /// Left multiplication by the scalar operator s*1 (a linear operator, so it
  /// does not commute with the antilinear part unless s is real).
  friend ExtendedMatrix operator*(const Scalar& s, const ExtendedMatrix& x) {
    return ExtendedMatrix(s * x.lin_, s * x.anti_);
  }

  ExtendedMatrix& operator+=(const ExtendedMatrix& o) { return *this = *this + o; }
  ExtendedMatrix& operator-=(const ExtendedMatrix& o) { return *this = *this - o; }
  ExtendedMatrix& operator*=(const ExtendedMatrix& o) { return *this = *this * o; }

  friend bool operator==(const ExtendedMatrix& x, const ExtendedMatrix& y) {
    return matEq(x.lin_, y.lin_) && matEq(x.anti_, y.anti_);
  }
  friend bool operator!=(const ExtendedMatrix& x, const ExtendedMatrix& y) { return !(x == y); }

  /// Direct action on a spinor; the independent check for the composition law.
  Vec apply(const Vec& v) const { return lin_ * v + anti_ * sigmaVec(v); }

  std::string str() const {
    std::string s = "lin:\n" + matStr(lin_);
    if (!isLinear()) s += "anti:\n" + matStr(anti_);
    return s;
  }

private:
  static bool matZero(const Mat& m) {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (!m(i, j).isZero()) return false;
    return true;
  }
  static bool matEq(const Mat& x, const Mat& y) {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (!(x(i, j) == y(i, j))) return false;
    return true;
  }
  static std::string matStr(const Mat& m) {
    std::string s;
    for (int i = 0; i < 4; ++i) {
      s += "  [";
      for (int j = 0; j < 4; ++j) {
        if (j) s += ", ";
        s += m(i, j).str();
      }
      s += "]\n";
    }
    return s;
  }

  Mat lin_;
  Mat anti_;
};

template <typename Scalar>
ExtendedMatrix<Scalar> commutator(const ExtendedMatrix<Scalar>& x, const ExtendedMatrix<Scalar>& y) {
  return x * y - y * x;
}

template <typename Scalar>
ExtendedMatrix<Scalar> anticommutator(const ExtendedMatrix<Scalar>& x,
                                      const ExtendedMatrix<Scalar>& y) {
  return x * y + y * x;
}

/// V X Vinv with the inverse pair checked once by the caller via
/// isInversePair; kept separate so hot loops skip the check.
template <typename Scalar>
ExtendedMatrix<Scalar> conjugated(const ExtendedMatrix<Scalar>& v, const ExtendedMatrix<Scalar>& x,
                                  const ExtendedMatrix<Scalar>& vinv) {
  return v * x * vinv;
}

template <typename Scalar>
bool isInversePair(const ExtendedMatrix<Scalar>& v, const ExtendedMatrix<Scalar>& vinv) {
  return v * vinv == ExtendedMatrix<Scalar>::identity() &&
         vinv * v == ExtendedMatrix<Scalar>::identity();
}

/// Dimension over the real rationals of the span of the given operators.
/// Each operator flattens to 64 rational coordinates (real and imaginary part
/// of every linear and antilinear entry); the rank comes from exact Gaussian
/// elimination.
inline int realDimension(const std::vector<ExtendedMatrix<GaussianRational>>& ops) {
  std::vector<std::vector<mpq_class>> rows;
  rows.reserve(ops.size());
  for (const auto& op : ops) {
    std::vector<mpq_class> row;
    row.reserve(64);
    for (const auto* part : {&op.lin(), &op.anti()}) {
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          row.push_back((*part)(i, j).re());
          row.push_back((*part)(i, j).im());
        }
    }
    rows.push_back(std::move(row));
  }
  int rank = 0;
  for (int col = 0; col < 64 && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    const mpq_class lead = rows[rank][col];
    for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][col] == 0) continue;
      const mpq_class f = rows[r][col] / lead;
      for (int c = col; c < 64; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace ercd
