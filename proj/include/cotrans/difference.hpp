#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <functional>

#include "cotrans/cotranslation.hpp"
#include "cotrans/error.hpp"
#include "cotrans/report.hpp"

namespace cotrans {

// Invertible matrix sequence n -> A(n) generating the linear difference
// equation x(n+1) = A(n) x(n). Scalar is double or std::complex<double>.
template <class Scalar>
class MatrixSequenceT {
 public:
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Rule = std::function<Mat(long)>;

  MatrixSequenceT(int dim, Rule rule, long horizon = 10000)
      : dim_(dim), rule_(std::move(rule)), horizon_(horizon) {
    if (dim_ < 1) throw ConfigError("matrix dimension must be >= 1");
    if (horizon_ < 1) throw ConfigError("horizon must be >= 1");
  }

  int dim() const { return dim_; }
  long horizon() const { return horizon_; }

  Mat at(long n) const {
    Mat a = rule_(n);
    if (a.rows() != dim_ || a.cols() != dim_) {
      throw ConfigError("sequence value has the wrong shape at n=" +
                        std::to_string(n));
    }
    Eigen::FullPivLU<Mat> lu(a);
    if (!lu.isInvertible() || std::abs(lu.determinant()) < 1e-12) {
      throw SingularMatrixError("A(" + std::to_string(n) + ") is singular");
    }
    return a;
  }

  Mat inverse_at(long n) const {
    Mat a = rule_(n);
    Eigen::FullPivLU<Mat> lu(a);
    if (!lu.isInvertible() || std::abs(lu.determinant()) < 1e-12) {
      throw SingularMatrixError("A(" + std::to_string(n) + ") is singular");
    }
    return lu.inverse();
  }

 private:
  int dim_;
  Rule rule_;
  long horizon_;
};

using MatrixSequence = MatrixSequenceT<double>;
using ComplexMatrixSequence = MatrixSequenceT<std::complex<double>>;

// The transition cocycle of the equation:
//   A(n+m-1) A(n+m-2) ... A(n)          for m > 0,
//   Id                                  for m = 0,
//   A^-1(n+m) A^-1(n+m+1) ... A^-1(n-1) for m < 0.
template <class Scalar>
typename MatrixSequenceT<Scalar>::Mat transition_matrix(
    const MatrixSequenceT<Scalar>& S, long n, long m) {
  using Mat = typename MatrixSequenceT<Scalar>::Mat;
  if (m > S.horizon() || -m > S.horizon()) {
    throw RangeError("transition span exceeds the configured horizon");
  }
  Mat acc = Mat::Identity(S.dim(), S.dim());
  if (m > 0) {
    for (long k = n; k <= n + m - 1; ++k) acc = S.at(k) * acc;
  } else if (m < 0) {
    for (long k = n - 1; k >= n + m; --k) acc = S.inverse_at(k) * acc;
  }
  return acc;
}

// The cotranslation over the integers evaluating to the transition cocycle
// (transforms are linear maps of R^d).
Cotranslation cotranslation_from_sequence(const MatrixSequence& S);

// Recovers the generating sequence A(n) = Z(n, 1) from a cotranslation over
// the integers whose transforms are linear. Nonlinear transforms throw
// UnsupportedOperationError.
MatrixSequence generator_from_cotranslation(const Cotranslation& Z,
                                            long horizon = 10000);

// Relative Frobenius residual of Z(n, m+p) = Z(m+n, p) Z(n, m) over the
// sampled (n, m, p).
Report verify_cocycle(const MatrixSequence& S,
                      const std::vector<std::array<long, 3>>& samples,
                      double tol);

}  // namespace cotrans
