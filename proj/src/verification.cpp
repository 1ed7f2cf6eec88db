#include "affinefloer/verification.hpp"

#include "affinefloer/coordinate_ring.hpp"
#include "affinefloer/floer_algebra.hpp"
#include "affinefloer/homotopy_words.hpp"
#include "affinefloer/syz_numeric.hpp"
#include "affinefloer/tropical_counts.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

namespace affinefloer {

namespace {

// Runs body(tally) and stamps timing and outcome.
class Tally {
 public:
  explicit Tally(Check& check) : check_(check) {}

  void record(bool ok, const std::function<std::string()>& describe) {
    ++check_.cases;
    if (ok) return;
    if (check_.failures++ == 0) check_.detail["first_failure"] = describe();
  }

 private:
  Check& check_;
};

Check run_check(const std::string& name, const std::function<void(Tally&, Check&)>& body) {
  Check check;
  check.name = name;
  const auto start = std::chrono::steady_clock::now();
  Tally tally(check);
  try {
    body(tally, check);
  } catch (const std::exception& e) {
    ++check.failures;
    check.detail["exception"] = e.what();
  }
  check.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  check.passed = check.failures == 0 && check.cases > 0;
  return check;
}

std::string show(const FractionalPoint& q) {
  std::ostringstream out;
  out << "q_{" << q.a << "," << q.i << "}@" << q.d;
  return out.str();
}

std::string show(const ExtendedPoint& q) { return show(FractionalPoint{q.a, q.i, q.d}); }

const FloerAlgebra& cp2_algebra() {
  static const FloerAlgebra algebra(cp2_model());
  return algebra;
}

void require_bound(const char* name, std::int64_t value, std::int64_t lo, std::int64_t hi) {
  if (value < lo || value > hi) {
    throw std::invalid_argument(std::string(name) + " must lie in [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
  }
}

constexpr ComplementCase kCases[] = {ComplementCase::L, ComplementCase::C, ComplementCase::D};

}  // namespace

bool SuiteResult::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return !checks.empty();
}

Check check_hilbert(std::int64_t max_d) {
  return run_check("hilbert polynomial", [&](Tally& t, Check& c) {
    const auto cp2 = cp2_model();
    for (std::int64_t d = 0; d <= max_d; ++d) {
      const auto got = static_cast<std::int64_t>(fractional_points(cp2, d).size());
      const auto want = (d + 2) * (d + 1) / 2;
      t.record(got == want, [&] { return "d=" + std::to_string(d) + ": " + std::to_string(got); });
    }
    c.detail["max_d"] = max_d;
  });
}

Check check_dp6_counts(std::int64_t max_d) {
  return run_check("dp6 point counts vs lattice scan", [&](Tally& t, Check& c) {
    const std::vector<std::array<std::int64_t, 4>> shapes{{1, 1, 1, 1}, {2, 1, 3, 1}, {1, 2, 1, 2}};
    for (const auto& w : shapes) {
      const auto dp6 = dp6_model(w[0], w[1], w[2], w[3]);
      for (std::int64_t d = 1; d <= max_d; ++d) {
        const auto got = fractional_points(dp6, d).size();
        const auto want = count_points(dp6, d);
        t.record(got == want, [&] { return "d=" + std::to_string(d) + ": " + std::to_string(got) + " vs " + std::to_string(want); });
      }
    }
    c.detail["max_d"] = max_d;
    c.detail["shapes"] = shapes.size();
  });
}

Check check_ring_iso(std::int64_t n_max) {
  return run_check("mu2 = Q-basis polynomial product", [&](Tally& t, Check& c) {
    const auto report = verify_iso(n_max);
    c.cases += static_cast<std::int64_t>(report.products_checked);
    c.failures += static_cast<std::int64_t>(report.mismatches.size());
    if (!report.ok()) {
      const auto& m = report.mismatches.front();
      c.detail["first_failure"] = show(FractionalPoint{m.lhs.a, m.lhs.i, m.lhs.d}) + " * " +
                                  show(FractionalPoint{m.rhs.a, m.rhs.i, m.rhs.d}) + ": " + m.detail;
    }
    (void)t;
    c.detail["n_max"] = n_max;
  });
}

Check check_associativity(std::int64_t max_total) {
  return run_check("associativity", [&](Tally& t, Check& c) {
    const auto& alg = cp2_algebra();
    for (std::int64_t n1 = 1; n1 + 2 <= max_total; ++n1) {
      for (std::int64_t n2 = 1; n1 + n2 + 1 <= max_total; ++n2) {
        for (std::int64_t n3 = 1; n1 + n2 + n3 <= max_total; ++n3) {
          for (const auto& p : cp2_index_range(n1)) {
            const auto x = FormalSum::of({0, n1, p});
            for (const auto& q : cp2_index_range(n2)) {
              const auto y = FormalSum::of({n1, n1 + n2, q});
              const auto xy = alg.ring_product(x, y);
              for (const auto& r : cp2_index_range(n3)) {
                const auto z = FormalSum::of({n1 + n2, n1 + n2 + n3, r});
                const bool ok = alg.ring_product(xy, z) == alg.ring_product(x, alg.ring_product(y, z));
                t.record(ok, [&] { return show(p) + ", " + show(q) + ", " + show(r); });
              }
            }
          }
        }
      }
    }
    c.detail["max_total_degree"] = max_total;
  });
}

Check check_homotopy_enumeration(std::int64_t max_k) {
  return run_check("admissible sequences = brute force, 2^k", [&](Tally& t, Check& c) {
    for (std::int64_t k = 0; k <= max_k; ++k) {
      const auto fast = enumerate_admissible(k);
      const auto slow = brute_force_admissible(k, 2);
      t.record(fast == slow, [&] { return "k=" + std::to_string(k) + ": enumeration differs from brute force"; });
      t.record(fast.size() == (std::size_t{1} << k), [&] { return "k=" + std::to_string(k) + ": " + std::to_string(fast.size()); });
    }
    c.detail["max_k"] = max_k;
    c.detail["brute_force_bound"] = 2;
  });
}

Check check_homotopy_counts(std::int64_t max_k) {
  return run_check("homotopy count = binom(k, h - i - j)", [&](Tally& t, Check& c) {
    for (std::int64_t k = 0; k <= max_k; ++k) {
      for (std::int64_t i = 0; i <= 2; ++i) {
        for (std::int64_t j = 0; j <= 2; ++j) {
          for (std::int64_t h = i + j - 2; h <= i + j + k + 2; ++h) {
            const bool ok = Integer(homotopy_count(k, i, j, h)) == binomial(k, h - i - j);
            t.record(ok, [&] { return "k=" + std::to_string(k) + " h=" + std::to_string(h); });
          }
        }
      }
    }
    c.detail["max_k"] = max_k;
  });
}

Check check_homotopy_vs_mu2(std::int64_t n_max) {
  return run_check("homotopy counts = mu2 coefficients", [&](Tally& t, Check& c) {
    const auto& alg = cp2_algebra();
    for (std::int64_t n = 1; n <= n_max; ++n) {
      for (std::int64_t m = 1; m <= n_max; ++m) {
        for (const auto& p : cp2_index_range(n)) {
          for (const auto& q : cp2_index_range(m)) {
            const auto out = alg.mu2({n, n + m, q}, {0, n, p});
            const auto k = k_value_cp2(p.a, q.a);
            for (std::int64_t h = 0; 2 * h <= n + m; ++h) {
              const bool ok = Integer(homotopy_count(k, p.i, q.i, h)) == out.coefficient(p.a + q.a, h);
              t.record(ok, [&] { return show(p) + " * " + show(q) + " h=" + std::to_string(h); });
            }
          }
        }
      }
    }
    c.detail["n_max"] = n_max;
  });
}

Check check_tropical_vs_mu2(std::int64_t n_max) {
  return run_check("tropical count = mu2 coefficient", [&](Tally& t, Check& c) {
    const auto& alg = cp2_algebra();
    for (std::int64_t n = 1; n <= n_max; ++n) {
      for (std::int64_t m = 1; m <= n_max; ++m) {
        for (const auto& p : cp2_index_range(n)) {
          for (const auto& q : cp2_index_range(m)) {
            const auto out = alg.mu2({n, n + m, q}, {0, n, p});
            for (std::int64_t h = 0; 2 * h <= n + m; ++h) {
              const bool ok = tropical_structure_constant(p, q, h) == out.coefficient(p.a + q.a, h);
              t.record(ok, [&] { return show(p) + " * " + show(q) + " h=" + std::to_string(h); });
            }
          }
        }
      }
    }
    c.detail["n_max"] = n_max;
  });
}

Check check_tropical_balancing(std::int64_t n_max) {
  return run_check("tropical triangles balance", [&](Tally& t, Check& c) {
    const Rational placements[] = {Rational(-1, 4), Rational(-1, 2) + Rational(1, 1000), Rational(-1, 100)};
    std::int64_t built = 0;
    for (std::int64_t n = 1; n <= n_max; ++n) {
      for (std::int64_t m = 1; m <= n_max; ++m) {
        for (const auto& p : cp2_index_range(n)) {
          for (const auto& q : cp2_index_range(m)) {
            for (std::int64_t h = 0; 2 * h <= n + m; ++h) {
              for (const auto& xi : placements) {
                const auto tri = build_triangle(p, q, h, xi);
                if (!tri) continue;
                ++built;
                t.record(check_balancing(*tri), [&] { return show(p) + " * " + show(q) + " h=" + std::to_string(h); });
              }
            }
          }
        }
      }
    }
    c.detail["triangles"] = built;
  });
}

Check check_position_invariance(std::int64_t max_k) {
  return run_check("singularity position invariance", [&](Tally& t, Check& c) {
    for (std::int64_t a = 1; a <= max_k; ++a) {
      for (std::int64_t b = 1; b <= max_k; ++b) {
        // q_{-a,0}@a * q_{b,0}@b has k = min(a, b); both orientations
        for (const auto& [p, q] : {std::pair{FractionalPoint{-a, 0, a}, FractionalPoint{b, 0, b}},
                                   std::pair{FractionalPoint{a, 0, a}, FractionalPoint{-b, 0, b}}}) {
          for (std::int64_t h = 0; 2 * h <= a + b; ++h) {
            t.record(singularity_position_invariance(p, q, h),
                     [&] { return show(p) + " * " + show(q) + " h=" + std::to_string(h); });
          }
        }
      }
    }
    c.detail["max_k"] = max_k;
  });
}

Check check_doubled_triangle() {
  return run_check("x^2 * z^2 has y^2 p with multiplicity 2", [&](Tally& t, Check& c) {
    const FractionalPoint x2{-2, 0, 2}, z2{2, 0, 2};
    const auto tri = build_triangle(x2, z2, 1);
    t.record(tri.has_value(), [] { return std::string("no triangle"); });
    if (!tri) return;
    t.record(tri->multiplicity == 2, [&] { return "multiplicity " + tri->multiplicity.str(); });
    t.record(tri->bend && *tri->bend == RationalPoint{0, Rational(-1, 4)}, [] { return std::string("bend is not (0,-1/4)"); });
    t.record(check_balancing(*tri), [] { return std::string("unbalanced"); });
    const auto mu = cp2_algebra().mu2({2, 4, z2}, {0, 2, x2});
    t.record(mu.coefficient(0, 1) == 2, [] { return std::string("mu2 coefficient is not 2"); });
    c.detail["triangle"] = to_json(*tri);
  });
}

Check check_partition_identity(std::int64_t max_total_k) {
  return run_check("partition sum = binom(sum k, s)", [&](Tally& t, Check& c) {
    // every composition of every total up to max_total_k
    std::vector<std::int64_t> parts;
    std::function<void(std::int64_t)> extend = [&](std::int64_t remaining) {
      if (!parts.empty()) {
        std::int64_t total = 0;
        for (auto k : parts) total += k;
        for (std::int64_t s = 0; s <= total + 1; ++s) {
          t.record(classP_partition_constant(parts, s) == binomial(total, s), [&] {
            std::string text = "k=(";
            for (auto k : parts) text += std::to_string(k) + ",";
            return text + ") s=" + std::to_string(s);
          });
        }
      }
      for (std::int64_t k = 1; k <= remaining; ++k) {
        parts.push_back(k);
        extend(remaining - k);
        parts.pop_back();
      }
    };
    extend(max_total_k);
    c.detail["max_total_k"] = max_total_k;
  });
}

Check check_dp6_partition(std::int64_t n_max) {
  return run_check("dp6 partition count = mu2 coefficient", [&](Tally& t, Check& c) {
    const FloerAlgebra dp6(dp6_model());
    for (std::int64_t n = 1; n <= n_max; ++n) {
      for (std::int64_t m = 1; m <= n_max; ++m) {
        for (const auto& p : dp6.index_range(0, n)) {
          for (const auto& q : dp6.index_range(n, n + m)) {
            const auto out = dp6.mu2({n, n + m, q}, {0, n, p});
            for (std::int64_t h = p.i + q.i; h <= p.i + q.i + 2 * (n + m); ++h) {
              const bool ok = classP_structure_constant(dp6.manifold(), p, q, h) == out.coefficient(p.a + q.a, h);
              t.record(ok, [&] { return show(p) + " * " + show(q) + " h=" + std::to_string(h); });
            }
          }
        }
      }
    }
    c.detail["n_max"] = n_max;
  });
}

Check check_wrapped_localized(std::int64_t max_degree, const Window& window) {
  return run_check("wrapped product = localized multiplication", [&](Tally& t, Check& c) {
    for (const auto kase : kCases) {
      for (std::int64_t n = -2; n <= max_degree; ++n) {
        for (std::int64_t m = -2; m <= max_degree; ++m) {
          for (const auto& q1 : wrapped_basis(kase, n, window)) {
            for (const auto& q2 : wrapped_basis(kase, m, window)) {
              t.record(wrapped_product(kase, q2, q1) == localized_product(kase, q2, q1),
                       [&] { return to_string(kase) + ": " + show(q1) + " * " + show(q2); });
            }
          }
        }
      }
    }
    c.detail["degrees"] = {-2, max_degree};
    c.detail["window"] = {window.a_max, window.i_max};
  });
}

Check check_continuation(std::int64_t max_r, std::int64_t max_degree, const Window& window) {
  return run_check("continuation = e_r product = dilation", [&](Tally& t, Check& c) {
    nlohmann::json centers;
    for (const auto kase : kCases) {
      const auto step = wrap_step(kase);
      const auto center = dilation_center(kase);
      centers[to_string(kase)] = {to_string(center.first), to_string(center.second)};
      for (std::int64_t r = step; r <= max_r; r += step) {
        for (std::int64_t d = 1; d <= max_degree; ++d) {
          for (const auto& [q, image] : continuation_map(kase, 0, d, r, window)) {
            const auto prod = wrapped_product(kase, q, e_element(kase, r));
            const bool product_ok = prod.terms.size() == 1 && prod.coefficient(image.a, image.i) == 1;
            t.record(product_ok, [&] { return to_string(kase) + ": e_r * " + show(q); });
            t.record(embedded_coordinates(image) == dilation_image(kase, q, r),
                     [&] { return to_string(kase) + ": dilation of " + show(q); });
            // fixed point of P -> F(P) with F(P) = c + t (P - c)
            const Rational s = ratio(d, image.d);
            const auto [pe, px] = embedded_coordinates(q);
            const auto [fe, fx] = embedded_coordinates(image);
            const std::pair<Rational, Rational> fixed{(fe - s * pe) / (1 - s), (fx - s * px) / (1 - s)};
            t.record(fixed == center, [&] { return to_string(kase) + ": fixed point from " + show(q); });
          }
        }
      }
    }
    c.detail["centers"] = centers;
    c.detail["max_r"] = max_r;
  });
}

Check check_directed_system(std::int64_t max_r, std::int64_t max_degree, const Window& window) {
  return run_check("continuation maps compose", [&](Tally& t, Check& c) {
    for (const auto kase : kCases) {
      const auto step = wrap_step(kase);
      for (std::int64_t r = 0; r <= max_r; r += step) {
        for (std::int64_t r2 = 0; r + r2 <= max_r; r2 += step) {
          for (std::int64_t d = 1; d <= max_degree; ++d) {
            for (const auto& q : wrapped_basis(kase, d, window)) {
              const bool ok = continuation_image(kase, continuation_image(kase, q, r), r2) ==
                              continuation_image(kase, q, r + r2);
              t.record(ok, [&] { return to_string(kase) + ": " + show(q); });
            }
          }
          const auto prod = wrapped_product(kase, e_element(kase, r2), e_element(kase, r));
          const auto e = e_element(kase, r + r2);
          t.record(prod.terms.size() == 1 && prod.coefficient(e.a, e.i) == 1,
                   [&] { return to_string(kase) + ": e_r e_r' != e_{r+r'}"; });
        }
      }
    }
    c.detail["max_r"] = max_r;
  });
}

Check check_coordinate_relations(double tol) {
  return run_check("xi + psi relations on the (R, lambda) grid", [&](Tally& t, Check& c) {
    double worst = 0;
    std::vector<double> radii;
    for (int k = 0; k < 5; ++k) radii.push_back(0.2 + 0.7 * k / 4);
    for (int k = 0; k < 5; ++k) radii.push_back(1.1 + 3.9 * k / 4);
    for (const double R : radii) {
      double previous = -INFINITY;
      for (int k = 0; k < 10; ++k) {
        const double l = -2 + 4.0 * k / 9;
        const auto s = syz_coordinates({R, l}, tol / 100);
        const double err = std::abs(s.xi + s.psi - (R < 1 ? 0.0 : std::log(R)));
        worst = std::max(worst, err);
        t.record(err <= tol, [&] { return "R=" + std::to_string(R) + " lambda=" + std::to_string(l); });
        t.record(s.xi >= previous, [&] { return "xi decreases at R=" + std::to_string(R); });
        previous = s.xi;
      }
    }
    c.detail["max_error"] = worst;
    c.detail["tol"] = tol;
  });
}

Check check_log_integral(double tol) {
  return run_check("Cauchy log integral", [&](Tally& t, Check& c) {
    const double pi = std::numbers::pi;
    const double e1 = std::abs(log_integral(0.5, tol / 100));
    const double e2 = std::abs(log_integral(2, tol / 100) - 2 * pi * std::log(2.0));
    const double e3 = std::abs(log_integral(0.999, tol));
    t.record(e1 <= tol, [&] { return "R=1/2 error " + std::to_string(e1); });
    t.record(e2 <= tol, [&] { return "R=2 error " + std::to_string(e2); });
    t.record(e3 <= 1e-6, [&] { return "R=0.999 error " + std::to_string(e3); });
    c.detail["errors"] = {{"R=0.5", e1}, {"R=2", e2}, {"R=0.999", e3}};
  });
}

Check check_critical_values(const std::vector<double>& lambdas) {
  return run_check("superpotential critical values", [&](Tally& t, Check& c) {
    double worst = 0, worst_residual = 0;
    for (const double Lambda : lambdas) {
      const auto report = critical_points(Lambda);
      t.record(report.points.size() == 3, [&] { return "Lambda=" + std::to_string(Lambda); });
      std::complex<double> product = 1;
      for (int n = 0; n < static_cast<int>(report.points.size()); ++n) {
        const auto& p = report.points[n];
        const auto want = expected_critical_point(Lambda, n).value;
        const double rel = std::abs(p.value - want) / std::abs(want);
        worst = std::max(worst, rel);
        worst_residual = std::max(worst_residual, p.residual);
        t.record(rel <= 1e-10, [&] { return "Lambda=" + std::to_string(Lambda) + " n=" + std::to_string(n); });
        t.record(p.residual <= 1e-12, [&] { return "residual at Lambda=" + std::to_string(Lambda); });
        product *= p.value;
      }
      const double target = 27 * std::exp(-Lambda);
      t.record(std::abs(product - target) <= 1e-10 * target, [&] { return "product at Lambda=" + std::to_string(Lambda); });
    }
    c.detail["max_relative_error"] = worst;
    c.detail["max_residual"] = worst_residual;
  });
}

Check check_hessian(double tol) {
  return run_check("Hessian metric closed form", [&](Tally& t, Check& c) {
    double worst = 0;
    t.record(hessian_identity(1, 0).ratio == 0, [] { return std::string("ratio at (1,0)"); });
    t.record(std::abs(hessian_identity(2, 3).ratio - 1.5) <= 1e-15, [] { return std::string("ratio at (2,3)"); });
    for (double x = 0.25; x <= 4; x += 0.25) {
      for (double y = -3; y <= 3; y += 0.5) {
        const auto h = hessian_identity(x, y);
        worst = std::max(worst, h.relative_difference);
        t.record(h.relative_difference <= tol, [&] { return "finite differences at (" + std::to_string(x) + "," + std::to_string(y) + ")"; });
        t.record(h.eigenvalues[0] > 0, [&] { return "not positive definite at x=" + std::to_string(x); });
        t.record(std::abs(h.ratio - y / x) <= 1e-14 * (1 + std::abs(y / x)), [&] { return "ratio at x=" + std::to_string(x); });
      }
    }
    c.detail["max_relative_difference"] = worst;
    c.detail["example"] = to_json(hessian_identity(1.3, -0.4));
  });
}

std::vector<std::string> suite_names() { return {"points", "ring", "homotopy", "tropical", "wrapped", "numeric"}; }

SuiteResult run_suite(const std::string& suite, const VerifyBounds& b) {
  SuiteResult out{suite, {}};
  if (suite == "points") {
    out.checks = {check_hilbert(50), check_dp6_counts(10)};
  } else if (suite == "ring") {
    require_bound("max-degree", b.max_degree, 1, 10);
    require_bound("max-total-degree", b.max_total_degree, 3, 12);
    out.checks = {check_ring_iso(b.max_degree), check_associativity(b.max_total_degree)};
  } else if (suite == "homotopy") {
    require_bound("max-k", b.max_k, 0, 12);
    out.checks = {check_homotopy_enumeration(b.max_k), check_homotopy_counts(b.max_k),
                  check_homotopy_vs_mu2(std::min<std::int64_t>(b.max_degree, 6))};
  } else if (suite == "tropical") {
    require_bound("max", b.max, 1, 8);
    require_bound("max-k", b.max_k, 0, 16);
    out.checks = {check_tropical_vs_mu2(b.max), check_tropical_balancing(b.max),
                  check_position_invariance(std::max<std::int64_t>(b.max_k, 10)), check_doubled_triangle(),
                  check_partition_identity(12), check_dp6_partition(3)};
  } else if (suite == "wrapped") {
    require_bound("max-degree", b.wrapped_degree, 0, 6);
    require_bound("max-r", b.max_r, 0, 12);
    const Window window{3, 3};
    out.checks = {check_wrapped_localized(b.wrapped_degree, window),
                  check_continuation(b.max_r, b.wrapped_degree, window),
                  check_directed_system(b.max_r, b.wrapped_degree, window)};
  } else if (suite == "numeric") {
    if (!(b.tol > 0) || b.tol < 1e-12) throw std::invalid_argument("tol must lie in [1e-12, inf)");
    out.checks = {check_coordinate_relations(b.tol), check_log_integral(b.tol), check_critical_values({1, 3, 6}),
                  check_hessian(1e-6)};
  } else {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  return out;
}

nlohmann::json to_json(const Check& c) {
  return {{"name", c.name}, {"passed", c.passed}, {"cases", c.cases},
          {"failures", c.failures}, {"seconds", c.seconds}, {"detail", c.detail}};
}

nlohmann::json to_json(const SuiteResult& r) {
  nlohmann::json j{{"suite", r.suite}, {"passed", r.passed()}, {"checks", nlohmann::json::array()}};
  for (const auto& c : r.checks) j["checks"].push_back(to_json(c));
  return j;
}

}  // namespace affinefloer
