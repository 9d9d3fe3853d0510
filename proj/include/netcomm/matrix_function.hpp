#pragma once

#include <string>
#include <vector>

namespace netcomm {

/// Scalar function applied to the spectrum of a symmetric (Gram) matrix,
/// together with its power-series coefficients for test oracles.
///
/// All admissible functions here have nonnegative series coefficients,
/// which is what makes the derived communicability indices nonnegative.
class MatrixFunctionSpec {
 public:
  enum class Kind { exponential, cosh_sqrt, sinh_over_sqrt, polynomial };

  static MatrixFunctionSpec exponential() { return MatrixFunctionSpec(Kind::exponential); }
  /// f(t) = cosh(sqrt(t)); weights alternating walks of length 2k by 1/(2k)!.
  static MatrixFunctionSpec cosh_sqrt() { return MatrixFunctionSpec(Kind::cosh_sqrt); }
  /// f(t) = sinh(sqrt(t))/sqrt(t), f(0) = 1; the Gram-side kernel of the
  /// generalized hyperbolic sine.
  static MatrixFunctionSpec sinh_over_sqrt() { return MatrixFunctionSpec(Kind::sinh_over_sqrt); }
  /// f(t) = sum_k coeffs[k] t^k. Throws ParameterError on a negative coefficient.
  static MatrixFunctionSpec polynomial(std::vector<double> coeffs);

  Kind kind() const { return kind_; }
  std::string name() const;

  double operator()(double t) const;

  /// Coefficient c_k of f(t) = sum c_k t^k.
  double series_coefficient(int k) const;

  /// True for the sqrt-based kernels, which are only defined on
  /// nonnegative spectra (tiny negative eigenvalues are clamped to 0).
  bool requires_psd() const {
    return kind_ == Kind::cosh_sqrt || kind_ == Kind::sinh_over_sqrt;
  }

 private:
  explicit MatrixFunctionSpec(Kind kind, std::vector<double> coeffs = {})
      : kind_(kind), coeffs_(std::move(coeffs)) {}

  Kind kind_;
  std::vector<double> coeffs_;
};

}  // namespace netcomm
