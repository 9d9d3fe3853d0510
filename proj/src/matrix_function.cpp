#include "netcomm/matrix_function.hpp"

#include <cmath>

#include "netcomm/errors.hpp"

namespace netcomm {

MatrixFunctionSpec MatrixFunctionSpec::polynomial(std::vector<double> coeffs) {
  for (double c : coeffs)
    if (c < 0.0)
      throw ParameterError("polynomial spectral function has a negative coefficient");
  return MatrixFunctionSpec(Kind::polynomial, std::move(coeffs));
}

std::string MatrixFunctionSpec::name() const {
  switch (kind_) {
    case Kind::exponential: return "exp";
    case Kind::cosh_sqrt: return "cosh_sqrt";
    case Kind::sinh_over_sqrt: return "sinh_over_sqrt";
    case Kind::polynomial: return "polynomial";
  }
  return "?";
}

double MatrixFunctionSpec::operator()(double t) const {
  switch (kind_) {
    case Kind::exponential:
      return std::exp(t);
    case Kind::cosh_sqrt:
      // Gram eigenvalues are >= 0 up to roundoff; clamp the roundoff.
      return std::cosh(std::sqrt(std::max(t, 0.0)));
    case Kind::sinh_over_sqrt: {
      double s = std::sqrt(std::max(t, 0.0));
      if (s < 1e-8) return 1.0 + t / 6.0;  // series limit at 0
      return std::sinh(s) / s;
    }
    case Kind::polynomial: {
      double acc = 0.0;
      for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
      return acc;
    }
  }
  return 0.0;
}

double MatrixFunctionSpec::series_coefficient(int k) const {
  auto inv_factorial = [](int j) {
    double f = 1.0;
    for (int i = 2; i <= j; ++i) f *= i;
    return 1.0 / f;
  };
  switch (kind_) {
    case Kind::exponential: return inv_factorial(k);
    case Kind::cosh_sqrt: return inv_factorial(2 * k);
    case Kind::sinh_over_sqrt: return inv_factorial(2 * k + 1);
    case Kind::polynomial:
      return k < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(k)] : 0.0;
  }
  return 0.0;
}

}  // namespace netcomm
