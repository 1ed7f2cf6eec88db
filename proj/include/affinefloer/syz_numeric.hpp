#pragma once

// Floating-point side. Affine coordinates of the SYZ fibration
// T_{R,lambda} = {|uv - 1| = R, |u|^2 - |v|^2 = lambda} come from periodic
// quadrature. The mirror superpotential is W = (1 + w)/v + e^{-Lambda} v^2 / w
// in the (v, w) chart. F = x^2 + y^2/x is the Hessian-metric potential.

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace affinefloer {

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RootFindingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QuadratureResult {
  double value = 0;
  double error_estimate = 0;  // |M_{2N} - M_N| at the accepted level
  std::int64_t evaluations = 0;
};

/// Integral of a 2pi-periodic f over [0, 2pi] by the midpoint rule, doubling
/// N until two successive levels agree to `tol`. Nodes never include 0 or pi.
QuadratureResult periodic_integral(const std::function<double(double)>& f, double tol,
                                   std::int64_t max_nodes = std::int64_t{1} << 22);

struct FiberParams {
  double R = 0.5;
  double lambda = 0;
};

struct SyzCoordinates {
  double eta = 0;  // log R
  double xi = 0;
  double psi = 0;
  double xi_error = 0;
  double psi_error = 0;
};

/// Throws std::invalid_argument unless R > 0, (R, lambda) != (1, 0), tol > 0.
SyzCoordinates syz_coordinates(const FiberParams& params, double tol = 1e-8);

/// Integral of log|1 + R e^{i theta}| over one period; R = 1 is rejected.
double log_integral(double R, double tol = 1e-10);

struct CriticalPoint {
  std::complex<double> v;
  std::complex<double> w;
  std::complex<double> value;
  double residual = 0;  // |grad W| at (v, w)
};

struct CriticalPointReport {
  double Lambda = 0;
  std::vector<CriticalPoint> points;  // sorted by arg v in [0, 2pi)
  int starts = 0;
  int converged_starts = 0;
};

std::complex<double> superpotential(double Lambda, std::complex<double> v, std::complex<double> w);
std::array<std::complex<double>, 2> superpotential_gradient(double Lambda, std::complex<double> v,
                                                            std::complex<double> w);

/// Damped Newton on grad W from 12 starts on |v| = e^{Lambda/3}. Throws
/// RootFindingError unless exactly three distinct roots survive.
CriticalPointReport critical_points(double Lambda);

/// v = e^{Lambda/3} e^{2 pi i n/3}, w = 1, value 3 e^{-Lambda/3} e^{-2 pi i n/3}.
CriticalPoint expected_critical_point(double Lambda, int n);

using Matrix2 = std::array<std::array<double, 2>, 2>;

struct HessianReport {
  Matrix2 closed_form{};
  Matrix2 finite_difference{};
  double relative_difference = 0;  // max entry gap over the largest closed-form entry
  double ratio = 0;                // -F_xy / F_yy
  std::array<double, 2> eigenvalues{};
};

/// Throws std::invalid_argument for x <= 0.
HessianReport hessian_identity(double x, double y);

nlohmann::json to_json(const SyzCoordinates& c);
nlohmann::json to_json(const CriticalPointReport& report);
nlohmann::json to_json(const HessianReport& report);

}  // namespace affinefloer
