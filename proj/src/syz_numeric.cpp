#include "affinefloer/syz_numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace affinefloer {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

double midpoint_sum(const std::function<double(double)>& f, std::int64_t n) {
  const double h = kTwoPi / static_cast<double>(n);
  // Kahan summation; N reaches a few million near R = 1.
  double sum = 0, carry = 0;
  for (std::int64_t k = 0; k < n; ++k) {
    const double term = f((static_cast<double>(k) + 0.5) * h) - carry;
    const double next = sum + term;
    carry = (next - sum) - term;
    sum = next;
  }
  return sum * h;
}

// |1 + R e^{i theta}|^2 without cancellation near R = 1, theta = pi.
double modulus_squared(double R, double theta) {
  const double c = std::cos(theta / 2);
  return (1 - R) * (1 - R) + 4 * R * c * c;
}

// (l + sqrt(l^2 + 4c)) / 2, stable for either sign of l.
double positive_root(double l, double c) {
  const double s = std::sqrt(l * l + 4 * c);
  return l >= 0 ? (l + s) / 2 : 2 * c / (s - l);
}

void check_fiber(const FiberParams& p, double tol) {
  if (!(p.R > 0) || !std::isfinite(p.R)) throw std::invalid_argument("R must be positive");
  if (!std::isfinite(p.lambda)) throw std::invalid_argument("lambda must be finite");
  if (p.R == 1 && p.lambda == 0) throw std::invalid_argument("(R, lambda) = (1, 0) is the singular fiber");
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
}

}  // namespace

QuadratureResult periodic_integral(const std::function<double(double)>& f, double tol, std::int64_t max_nodes) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  std::int64_t n = 16;
  double coarse = midpoint_sum(f, n);
  std::int64_t evaluations = n;
  while (2 * n <= max_nodes) {
    n *= 2;
    const double fine = midpoint_sum(f, n);
    evaluations += n;
    const double err = std::abs(fine - coarse);
    if (!std::isfinite(fine)) throw QuadratureError("integrand is not finite on the nodes");
    if (err <= tol) return {fine, err, evaluations};
    coarse = fine;
  }
  std::ostringstream msg;
  msg << "periodic quadrature did not reach " << tol << " with " << n << " nodes";
  throw QuadratureError(msg.str());
}

SyzCoordinates syz_coordinates(const FiberParams& p, double tol) {
  check_fiber(p, tol);
  // xi uses |u|^2 = positive_root(lambda, |1 + R e^{i theta}|^2), psi the same with -lambda.
  const auto coordinate = [&](double l) {
    return periodic_integral(
        [&](double theta) { return 0.25 / std::numbers::pi * std::log(positive_root(l, modulus_squared(p.R, theta))); },
        tol);
  };
  const auto xi = coordinate(p.lambda);
  const auto psi = coordinate(-p.lambda);
  return {std::log(p.R), xi.value, psi.value, xi.error_estimate, psi.error_estimate};
}

double log_integral(double R, double tol) {
  if (!(R > 0) || !std::isfinite(R)) throw std::invalid_argument("R must be positive");
  if (R == 1) throw std::invalid_argument("R = 1 puts a logarithmic singularity on the contour");
  return periodic_integral([R](double theta) { return 0.5 * std::log(modulus_squared(R, theta)); }, tol).value;
}

std::complex<double> superpotential(double Lambda, std::complex<double> v, std::complex<double> w) {
  return (1.0 + w) / v + std::exp(-Lambda) * v * v / w;
}

std::array<std::complex<double>, 2> superpotential_gradient(double Lambda, std::complex<double> v,
                                                            std::complex<double> w) {
  const double q = std::exp(-Lambda);
  return {-(1.0 + w) / (v * v) + 2.0 * q * v / w, 1.0 / v - q * v * v / (w * w)};
}

namespace {

using Complex = std::complex<double>;

double norm2(const std::array<Complex, 2>& g) { return std::hypot(std::abs(g[0]), std::abs(g[1])); }

// One Newton step for grad W = 0; returns false on a singular Hessian.
bool newton_step(double Lambda, Complex& v, Complex& w) {
  const double q = std::exp(-Lambda);
  const auto g = superpotential_gradient(Lambda, v, w);
  const Complex hvv = 2.0 * (1.0 + w) / (v * v * v) + 2.0 * q / w;
  const Complex hvw = -1.0 / (v * v) - 2.0 * q * v / (w * w);
  const Complex hww = 2.0 * q * v * v / (w * w * w);
  const Complex det = hvv * hww - hvw * hvw;
  if (std::abs(det) == 0 || !std::isfinite(std::abs(det))) return false;
  const Complex dv = (hww * g[0] - hvw * g[1]) / det;
  const Complex dw = (hvv * g[1] - hvw * g[0]) / det;
  // Backtrack until the gradient norm decreases.
  const double r0 = norm2(g);
  double t = 1;
  for (int halvings = 0; halvings < 30; ++halvings, t /= 2) {
    const Complex nv = v - t * dv, nw = w - t * dw;
    if (nv == 0.0 || nw == 0.0) continue;
    if (norm2(superpotential_gradient(Lambda, nv, nw)) < r0) {
      v = nv;
      w = nw;
      return true;
    }
  }
  return false;
}

}  // namespace

CriticalPoint expected_critical_point(double Lambda, int n) {
  const Complex omega = std::polar(1.0, kTwoPi * n / 3);
  const Complex v = std::exp(Lambda / 3) * omega;
  return {v, 1.0, 3 * std::exp(-Lambda / 3) * std::conj(omega), 0};
}

CriticalPointReport critical_points(double Lambda) {
  if (!(Lambda > 0) || !std::isfinite(Lambda)) throw std::invalid_argument("Lambda must be positive");
  constexpr int kStarts = 12;
  constexpr double kResidual = 1e-12;
  constexpr double kDedup = 1e-6;
  CriticalPointReport report;
  report.Lambda = Lambda;
  report.starts = kStarts;
  const double radius = std::exp(Lambda / 3);
  std::vector<std::string> failures;
  for (int k = 0; k < kStarts; ++k) {
    Complex v = std::polar(radius, kTwoPi * (k + 0.5) / kStarts);
    Complex w = 1.0 + 0.25 * std::polar(1.0, kTwoPi * k / kStarts);
    // grad W -> 0 at infinity, so iterates leaving this annulus count as failures.
    const auto escaped = [&] {
      return std::abs(v) > 1e3 * radius || std::abs(v) < 1e-3 * radius || std::abs(w) > 1e3 || std::abs(w) < 1e-3;
    };
    bool ok = false;
    for (int iter = 0; iter < 200 && !escaped(); ++iter) {
      const Complex pv = v, pw = w;
      const bool moved = newton_step(Lambda, v, w);
      const double step = std::abs(v - pv) / radius + std::abs(w - pw);
      if (norm2(superpotential_gradient(Lambda, v, w)) <= kResidual && step <= 1e-10) {
        ok = true;
        break;
      }
      if (!moved) break;
    }
    ok = ok && !escaped();
    const double residual = norm2(superpotential_gradient(Lambda, v, w));
    if (!ok) {
      std::ostringstream msg;
      msg << "start " << k << " stalled at v=" << v << " w=" << w << " |grad W|=" << residual;
      failures.push_back(msg.str());
      continue;
    }
    ++report.converged_starts;
    const bool seen = std::any_of(report.points.begin(), report.points.end(), [&](const CriticalPoint& p) {
      return std::abs(p.v - v) <= kDedup * radius && std::abs(p.w - w) <= kDedup;
    });
    if (!seen) report.points.push_back({v, w, superpotential(Lambda, v, w), residual});
  }
  if (report.points.size() != 3) {
    std::ostringstream msg;
    msg << "expected 3 critical points, found " << report.points.size() << " from "
        << report.converged_starts << "/" << kStarts << " converged starts";
    for (const auto& f : failures) msg << "; " << f;
    throw RootFindingError(msg.str());
  }
  const auto angle = [](Complex z) {
    double a = std::arg(z);
    return a < -1e-9 ? a + kTwoPi : std::max(a, 0.0);
  };
  std::sort(report.points.begin(), report.points.end(),
            [&](const CriticalPoint& a, const CriticalPoint& b) { return angle(a.v) < angle(b.v); });
  return report;
}

HessianReport hessian_identity(double x, double y) {
  if (!(x > 0) || !std::isfinite(x) || !std::isfinite(y)) throw std::invalid_argument("need x > 0");
  HessianReport r;
  const double fxx = 2 + 2 * y * y / (x * x * x);
  const double fxy = -2 * y / (x * x);
  const double fyy = 2 / x;
  r.closed_form = {{{fxx, fxy}, {fxy, fyy}}};

  using Real = long double;
  const auto F = [](Real a, Real b) { return a * a + b * b / a; };
  const Real h = 1e-5L, X = x, Y = y;
  const Real dxx = (F(X + h, Y) - 2 * F(X, Y) + F(X - h, Y)) / (h * h);
  const Real dyy = (F(X, Y + h) - 2 * F(X, Y) + F(X, Y - h)) / (h * h);
  const Real dxy = (F(X + h, Y + h) - F(X + h, Y - h) - F(X - h, Y + h) + F(X - h, Y - h)) / (4 * h * h);
  r.finite_difference = {{{static_cast<double>(dxx), static_cast<double>(dxy)},
                          {static_cast<double>(dxy), static_cast<double>(dyy)}}};

  double scale = 0, gap = 0;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      scale = std::max(scale, std::abs(r.closed_form[a][b]));
      gap = std::max(gap, std::abs(r.closed_form[a][b] - r.finite_difference[a][b]));
    }
  }
  r.relative_difference = gap / scale;
  r.ratio = -fxy / fyy;
  const double mean = (fxx + fyy) / 2;
  const double spread = std::hypot((fxx - fyy) / 2, fxy);
  r.eigenvalues = {mean - spread, mean + spread};
  return r;
}

namespace {

nlohmann::json complex_json(Complex z) { return {z.real(), z.imag()}; }

nlohmann::json matrix_json(const Matrix2& m) { return {{m[0][0], m[0][1]}, {m[1][0], m[1][1]}}; }

}  // namespace

nlohmann::json to_json(const SyzCoordinates& c) {
  return {{"eta", c.eta}, {"xi", c.xi}, {"psi", c.psi}, {"xi_error", c.xi_error}, {"psi_error", c.psi_error}};
}

nlohmann::json to_json(const CriticalPointReport& report) {
  nlohmann::json j{{"Lambda", report.Lambda},
                   {"starts", report.starts},
                   {"converged_starts", report.converged_starts},
                   {"points", nlohmann::json::array()}};
  for (const auto& p : report.points) {
    j["points"].push_back({{"v", complex_json(p.v)},
                           {"w", complex_json(p.w)},
                           {"value", complex_json(p.value)},
                           {"residual", p.residual}});
  }
  return j;
}

nlohmann::json to_json(const HessianReport& r) {
  return {{"closed_form", matrix_json(r.closed_form)},
          {"finite_difference", matrix_json(r.finite_difference)},
          {"relative_difference", r.relative_difference},
          {"ratio", r.ratio},
          {"eigenvalues", {r.eigenvalues[0], r.eigenvalues[1]}}};
}

}  // namespace affinefloer
