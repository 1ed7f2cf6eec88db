#include "affinefloer/coordinate_ring.hpp"
#include "affinefloer/floer_algebra.hpp"
#include "affinefloer/homotopy_words.hpp"
#include "affinefloer/render_svg.hpp"
#include "affinefloer/syz_numeric.hpp"
#include "affinefloer/tropical_counts.hpp"
#include "affinefloer/verification.hpp"
#include "affinefloer/wrapped_floer.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace affinefloer;

namespace {

// Structured results cross the boundary as JSON text and are decoded on the Python side.
using Json = std::string;

py::int_ to_py(const Integer& value) { return py::int_(py::str(value.str())); }

ClassPManifold instance(const std::string& name) {
  if (name == "cp2") return cp2_model();
  if (name == "dp6") return dp6_model();
  return manifold_from_json(nlohmann::json::parse(name));
}

std::map<std::pair<std::int64_t, std::int64_t>, py::int_> terms_to_py(
    const std::map<std::pair<std::int64_t, std::int64_t>, Integer>& terms) {
  std::map<std::pair<std::int64_t, std::int64_t>, py::int_> out;
  for (const auto& [key, c] : terms) out.emplace(key, to_py(c));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Floer products on class-P affine bases and their mirrors";

  py::register_exception<QuadratureError>(m, "QuadratureError", PyExc_ArithmeticError);
  py::register_exception<RootFindingError>(m, "RootFindingError", PyExc_ArithmeticError);
  py::register_exception<WindowTooSmall>(m, "WindowTooSmall", PyExc_ValueError);

  // instances take "cp2", "dp6" or an instance JSON document
  m.def("instance_json", [](const std::string& name) -> Json { return to_json(instance(name)).dump(); });
  m.def("dp6_json", [](std::int64_t l, std::int64_t mid, std::int64_t r, std::int64_t h) -> Json {
    return to_json(dp6_model(l, mid, r, h)).dump();
  });
  m.def("validate", [](const std::string& name) {
    std::vector<std::string> out;
    for (const auto& v : validate(instance(name))) out.push_back(to_string(v.axiom) + " at " + v.location + ": " + v.message);
    return out;
  });
  m.def("fractional_points", [](const std::string& name, std::int64_t d) {
    std::vector<std::tuple<std::int64_t, std::int64_t>> out;
    for (const auto& q : fractional_points(instance(name), d)) out.emplace_back(q.a, q.i);
    return out;
  }, py::arg("instance"), py::arg("d"));
  m.def("count_points", [](const std::string& name, std::int64_t d) { return count_points(instance(name), d); });
  m.def("coordinates", [](const std::string& name, std::int64_t a, std::int64_t i, std::int64_t d) {
    const auto p = coordinates(instance(name), {a, i, d});
    return std::pair{to_string(p.eta), to_string(p.xi)};
  });

  m.def("mu2", [](const std::string& name, std::int64_t n, std::int64_t mm, std::int64_t a, std::int64_t i,
                  std::int64_t b, std::int64_t j) {
    const FloerAlgebra algebra(instance(name));
    return terms_to_py(algebra.mu2({n, n + mm, {b, j, mm}}, {0, n, {a, i, n}}).terms());
  }, py::arg("instance"), py::arg("n"), py::arg("m"), py::arg("a"), py::arg("i"), py::arg("b"), py::arg("j"));
  m.def("mu2_json", [](const std::string& name, std::int64_t n, std::int64_t mm, std::int64_t a, std::int64_t i,
                       std::int64_t b, std::int64_t j) -> Json {
    const FloerAlgebra algebra(instance(name));
    return to_json(algebra.mu2({n, n + mm, {b, j, mm}}, {0, n, {a, i, n}})).dump();
  });
  m.def("formal_sum_roundtrip", [](const std::string& text) -> Json {
    return to_json(formal_sum_from_json(nlohmann::json::parse(text))).dump();
  });
  m.def("k_value_cp2", &k_value_cp2);
  m.def("critical_cover", [](const std::string& name, std::int64_t a, std::int64_t i, std::int64_t n, std::int64_t b,
                             std::int64_t j, std::int64_t mm) {
    return critical_cover_classP(instance(name), {a, i, n}, {b, j, mm}).per_singularity;
  });

  m.def("q_product", [](std::int64_t n, std::int64_t a, std::int64_t i, std::int64_t mm, std::int64_t b, std::int64_t j) {
    std::map<std::pair<std::int64_t, std::int64_t>, py::int_> out;
    for (const auto& [idx, c] : expand_in_qbasis(multiply(q_monomial({a, i, n}), q_monomial({b, j, mm})))) {
      out.emplace(std::pair{idx.a, idx.i}, to_py(c));
    }
    return out;
  });
  m.def("verify_iso", [](std::int64_t n_max) {
    const auto r = verify_iso(n_max);
    return std::pair{r.products_checked, r.mismatches.size()};
  });

  m.def("enumerate_admissible", &enumerate_admissible);
  m.def("brute_force_admissible", &brute_force_admissible);
  m.def("homotopy_count", &homotopy_count);
  m.def("triangle_word", [](std::int64_t i, std::int64_t j, std::int64_t h, std::int64_t k, const DeltaSequence& delta) {
    return to_string(free_reduce(triangle_word(i, j, h, k, delta)));
  });

  m.def("tropical_structure_constant", [](std::int64_t a, std::int64_t i, std::int64_t n, std::int64_t b,
                                          std::int64_t j, std::int64_t mm, std::int64_t h) {
    return to_py(tropical_structure_constant({a, i, n}, {b, j, mm}, h));
  });
  m.def("build_triangle", [](std::int64_t a, std::int64_t i, std::int64_t n, std::int64_t b, std::int64_t j,
                             std::int64_t mm, std::int64_t h) -> std::optional<Json> {
    const auto t = build_triangle({a, i, n}, {b, j, mm}, h);
    if (!t) return std::nullopt;
    return to_json(*t).dump();
  });
  m.def("classP_partition_constant", [](const std::vector<std::int64_t>& k, std::int64_t s) {
    return to_py(classP_partition_constant(k, s));
  });

  m.def("wrapped_product", [](const std::string& kase, std::tuple<std::int64_t, std::int64_t, std::int64_t> q2,
                              std::tuple<std::int64_t, std::int64_t, std::int64_t> q1) {
    const auto [b, j, mm] = q2;
    const auto [a, i, n] = q1;
    return terms_to_py(wrapped_product(parse_case(kase), {b, j, mm}, {a, i, n}).terms);
  }, py::arg("case"), py::arg("q2"), py::arg("q1"));
  m.def("localized_product", [](const std::string& kase, std::tuple<std::int64_t, std::int64_t, std::int64_t> q2,
                                std::tuple<std::int64_t, std::int64_t, std::int64_t> q1) {
    const auto [b, j, mm] = q2;
    const auto [a, i, n] = q1;
    return terms_to_py(localized_product(parse_case(kase), {b, j, mm}, {a, i, n}).terms);
  }, py::arg("case"), py::arg("q2"), py::arg("q1"));
  m.def("e_element", [](const std::string& kase, std::int64_t r) {
    const auto e = e_element(parse_case(kase), r);
    return std::tuple{e.a, e.i, e.d};
  });
  m.def("continuation_image", [](const std::string& kase, std::tuple<std::int64_t, std::int64_t, std::int64_t> q,
                                 std::int64_t r) {
    const auto [a, i, d] = q;
    const auto e = continuation_image(parse_case(kase), {a, i, d}, r);
    return std::tuple{e.a, e.i, e.d};
  });
  m.def("dilation_center", [](const std::string& kase) {
    const auto c = dilation_center(parse_case(kase));
    return std::pair{to_string(c.first), to_string(c.second)};
  });
  m.def("rational_function", [](const std::string& kase, std::tuple<std::int64_t, std::int64_t, std::int64_t> q) {
    const auto [a, i, d] = q;
    return to_string(rational_function(parse_case(kase), {a, i, d}));
  });

  m.def("syz_coordinates", [](double R, double lambda, double tol) {
    const auto c = syz_coordinates({R, lambda}, tol);
    return std::tuple{c.eta, c.xi, c.psi};
  }, py::arg("R"), py::arg("lam"), py::arg("tol") = 1e-8);
  m.def("log_integral", &log_integral, py::arg("R"), py::arg("tol") = 1e-10);
  m.def("critical_points", [](double Lambda) {
    std::vector<std::tuple<std::complex<double>, std::complex<double>, std::complex<double>>> out;
    for (const auto& p : critical_points(Lambda).points) out.emplace_back(p.v, p.w, p.value);
    return out;
  });
  m.def("hessian_identity", [](double x, double y) -> Json { return to_json(hessian_identity(x, y)).dump(); });

  m.def("run_suite", [](const std::string& name, std::int64_t max_degree, std::int64_t max_k, std::int64_t max,
                        double tol) -> Json {
    VerifyBounds b;
    b.max_degree = max_degree;
    b.max_k = max_k;
    b.max = max;
    b.tol = tol;
    return to_json(run_suite(name, b)).dump();
  }, py::arg("name"), py::arg("max_degree") = 6, py::arg("max_k") = 8, py::arg("max") = 4, py::arg("tol") = 1e-8);

  m.def("render_svg", [](const std::string& name, std::optional<std::int64_t> points,
                         std::optional<std::vector<std::int64_t>> triangle) {
    RenderOptions options;
    options.points_d = points;
    if (triangle) {
      if (triangle->size() != 7) throw std::invalid_argument("triangle needs a i n b j m h");
      const auto& t = *triangle;
      options.triangle = build_triangle({t[0], t[1], t[2]}, {t[3], t[4], t[5]}, t[6]);
      if (!options.triangle) throw std::invalid_argument("no tropical triangle for these indices");
    }
    return render_svg(instance(name), options);
  }, py::arg("instance"), py::arg("points") = std::nullopt, py::arg("triangle") = std::nullopt);
}
