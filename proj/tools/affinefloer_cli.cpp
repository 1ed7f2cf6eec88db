#include "affinefloer/affine_base.hpp"
#include "affinefloer/coordinate_ring.hpp"
#include "affinefloer/floer_algebra.hpp"
#include "affinefloer/render_svg.hpp"
#include "affinefloer/syz_numeric.hpp"
#include "affinefloer/tropical_counts.hpp"
#include "affinefloer/verification.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace affinefloer;
using nlohmann::json;

namespace {

// Input problems (bad files, inadmissible indices) exit with 2, failed checks with 1.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Report {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  std::vector<Check> checks;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void check(const std::string& name, bool ok, json detail = json::object()) {
    Check c;
    c.name = name;
    c.passed = ok;
    c.cases = 1;
    c.failures = ok ? 0 : 1;
    c.detail = std::move(detail);
    checks.push_back(std::move(c));
  }

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }

  json to_json() const {
    json j{{"command", command}, {"inputs", inputs}, {"results", results}, {"passed", passed()},
           {"checks", json::array()}};
    for (const auto& c : checks) j["checks"].push_back(affinefloer::to_json(c));
    j["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return j;
  }
};

struct InstanceArgs {
  std::string path;
  std::string builtin;
  std::vector<std::int64_t> dp6_widths{1, 1, 1, 1};
};

// Resolves --instance/--builtin or the leading positional; returns the remaining positionals.
std::pair<ClassPManifold, std::string> load_instance(const InstanceArgs& args, std::vector<std::string>& positional) {
  std::string name;
  if (!args.path.empty()) {
    name = args.path;
  } else if (!args.builtin.empty()) {
    name = args.builtin;
  } else {
    if (positional.empty()) throw InputError("missing instance (builtin name or JSON path)");
    name = positional.front();
    positional.erase(positional.begin());
  }
  ClassPManifold m;
  if (args.path.empty() && name == "cp2") {
    m = cp2_model();
  } else if (args.path.empty() && name == "dp6") {
    const auto& w = args.dp6_widths;
    if (w.size() != 4) throw InputError("--dp6 takes four integers: left middle right height");
    m = dp6_model(w[0], w[1], w[2], w[3]);
  } else {
    std::ifstream in(name);
    if (!in) throw InputError("cannot open instance file '" + name + "'");
    try {
      m = manifold_from_json(json::parse(in));
    } catch (const std::exception& e) {
      throw InputError("cannot parse '" + name + "': " + e.what());
    }
  }
  const auto violations = validate(m);
  if (!violations.empty()) {
    std::string text = "invalid instance '" + name + "':";
    for (const auto& v : violations) text += "\n  " + to_string(v.axiom) + " at " + v.location + ": " + v.message;
    throw InputError(text);
  }
  return {m, name};
}

std::int64_t to_int(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const auto v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InputError(std::string("expected an integer for ") + what + ", got '" + s + "'");
  }
}

std::string show_q(std::int64_t a, std::int64_t i) { return "q_{" + std::to_string(a) + "," + std::to_string(i) + "}"; }

std::string show_sum(const FormalSum& sum) {
  std::string text;
  for (const auto& [key, c] : sum.terms()) {
    if (!text.empty()) text += " + ";
    if (c != 1) text += c.str() + " ";
    text += show_q(key.first, key.second);
  }
  return text.empty() ? "0" : text;
}

// Q_{a,i} written in x, y, z and p = xz - y^2.
std::string show_Q(const QBasisIndex& q) {
  const auto abs_a = std::llabs(q.a);
  const auto y = q.d - abs_a - 2 * q.i;
  std::string text;
  const auto factor = [&](const char* var, std::int64_t e) {
    if (e == 0) return;
    if (!text.empty()) text += " ";
    text += var;
    if (e > 1) text += "^" + std::to_string(e);
  };
  factor(q.a <= 0 ? "x" : "z", abs_a);
  factor("y", y);
  factor("p", q.i);
  return text.empty() ? "1" : text;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (!out) throw InputError("write to '" + path + "' failed");
}

Report cmd_points(const InstanceArgs& ia, std::vector<std::string> pos) {
  Report r{"points"};
  auto [m, name] = load_instance(ia, pos);
  if (pos.size() != 1) throw InputError("points takes one denominator d");
  const auto d = to_int(pos[0], "d");
  if (d < 0) throw InputError("d must be nonnegative");
  r.inputs = {{"instance", name}, {"d", d}};
  const auto pts = fractional_points(m, d);
  json list = json::array();
  for (const auto& q : pts) {
    const auto c = coordinates(m, q);
    list.push_back({{"a", q.a}, {"i", q.i}, {"d", q.d}, {"eta", to_string(c.eta)}, {"xi", to_string(c.xi)}});
  }
  r.results = {{"count", pts.size()}, {"points", list}};
  if (d > 0) {
    const auto scan = count_points(m, d);
    r.check("count matches lattice scan", scan == pts.size(), {{"scan", scan}});
  }
  if (name == "cp2") {
    const auto hilbert = (d + 2) * (d + 1) / 2;
    r.check("count matches (d+2)(d+1)/2", static_cast<std::int64_t>(pts.size()) == hilbert, {{"expected", hilbert}});
  }
  return r;
}

Report cmd_mu2(const InstanceArgs& ia, std::vector<std::string> pos) {
  Report r{"mu2"};
  auto [m, name] = load_instance(ia, pos);
  if (pos.size() != 6) throw InputError("mu2 takes n m a i b j");
  std::int64_t v[6];
  const char* names[] = {"n", "m", "a", "i", "b", "j"};
  for (int k = 0; k < 6; ++k) v[k] = to_int(pos[k], names[k]);
  const auto [n, mm, a, i, b, j] = std::tuple{v[0], v[1], v[2], v[3], v[4], v[5]};
  if (n < 0 || mm < 0) throw InputError("n and m must be nonnegative");
  r.inputs = {{"instance", name}, {"n", n}, {"m", mm}, {"a", a}, {"i", i}, {"b", b}, {"j", j}};
  const FloerAlgebra algebra(m);
  const BasisVector q1{0, n, {a, i, n}}, q2{n, n + mm, {b, j, mm}};
  if (!algebra.is_admissible(q1)) throw InputError("inadmissible first input " + show_q(a, i) + " for d=" + std::to_string(n));
  if (!algebra.is_admissible(q2)) throw InputError("inadmissible second input " + show_q(b, j) + " for d=" + std::to_string(mm));
  FormalSum sum(0, n + mm);
  try {
    sum = algebra.mu2(q2, q1);
  } catch (const std::domain_error& e) {
    throw InputError(e.what());
  }
  r.results = {{"sum", to_json(sum)}, {"text", show_sum(sum)}};
  if (name == "cp2" && n > 0 && mm > 0) {
    const QBasisIndex p{a, i, n}, q{b, j, mm};
    const auto ring = expand_in_qbasis(multiply(q_monomial(p), q_monomial(q)));
    QExpansion floer;
    for (const auto& [key, c] : sum.terms()) floer.emplace(QBasisIndex{key.first, key.second, n + mm}, c);
    std::string rhs;
    for (const auto& [idx, c] : ring) {
      if (!rhs.empty()) rhs += " + ";
      if (c != 1) rhs += c.str() + " ";
      rhs += show_Q(idx);
    }
    const std::string identity = show_Q(p) + " * " + show_Q(q) + " = " + (rhs.empty() ? "0" : rhs);
    r.results["polynomial_identity"] = identity;
    r.check("matches polynomial multiplication", ring == floer, {{"identity", identity}});
  } else {
    r.check("output lies in B", true);
  }
  return r;
}

Report cmd_verify(const std::string& suite, const VerifyBounds& bounds) {
  Report r{"verify"};
  r.inputs = {{"suite", suite}, {"max_degree", bounds.max_degree}, {"max_k", bounds.max_k},
              {"max", bounds.max}, {"max_r", bounds.max_r}, {"tol", bounds.tol}};
  std::vector<std::string> suites;
  if (suite == "all") {
    suites = suite_names();
  } else {
    suites = {suite};
  }
  json results = json::array();
  for (const auto& s : suites) {
    SuiteResult result;
    try {
      result = run_suite(s, bounds);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    results.push_back(to_json(result));
    for (auto& c : result.checks) {
      c.name = s + ": " + c.name;
      r.checks.push_back(std::move(c));
    }
  }
  r.results = {{"suites", results}};
  return r;
}

Report cmd_render(const InstanceArgs& ia, std::vector<std::string> pos, std::optional<std::int64_t> points_d,
                  const std::vector<std::int64_t>& triangle, std::string out_path) {
  Report r{"render"};
  auto [m, name] = load_instance(ia, pos);
  if (out_path.empty()) {
    if (pos.size() != 1) throw InputError("render needs an output path");
    out_path = pos[0];
  } else if (!pos.empty()) {
    throw InputError("unexpected argument '" + pos[0] + "'");
  }
  RenderOptions options;
  options.points_d = points_d;
  r.inputs = {{"instance", name}, {"out", out_path}};
  if (points_d) {
    if (*points_d < 0) throw InputError("--points must be nonnegative");
    r.inputs["points"] = *points_d;
  }
  if (!triangle.empty()) {
    if (name != "cp2") throw InputError("--triangle is available for the cp2 instance only");
    const FractionalPoint q1{triangle[0], triangle[1], triangle[2]}, q2{triangle[3], triangle[4], triangle[5]};
    r.inputs["triangle"] = triangle;
    std::optional<TropicalTriangle> t;
    try {
      t = build_triangle(q1, q2, triangle[6]);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    if (!t) throw InputError("no tropical triangle for these indices");
    options.triangle = t;
    r.results["triangle"] = to_json(*t);
    r.check("triangle balances", check_balancing(*t));
  }
  const auto svg = render_svg(m, options);
  write_text(out_path, svg);
  r.results["bytes"] = svg.size();
  if (points_d) r.results["points"] = fractional_points(m, *points_d).size();
  r.check("svg written", true);
  return r;
}

Report cmd_numeric(double tol) {
  Report r{"numeric"};
  r.inputs = {{"tol", tol}};
  r.results["examples"] = {
      {"syz(R=0.5,lambda=0.3)", to_json(syz_coordinates({0.5, 0.3}, tol))},
      {"syz(R=2,lambda=-0.7)", to_json(syz_coordinates({2, -0.7}, tol))},
      {"log_integral(0.5)", log_integral(0.5, tol)},
      {"log_integral(2)", log_integral(2, tol)},
      {"critical_points(3)", to_json(critical_points(3))},
      {"hessian(2,3)", to_json(hessian_identity(2, 3))},
  };
  VerifyBounds b;
  b.tol = tol;
  SuiteResult suite;
  try {
    suite = run_suite("numeric", b);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  r.results["suite"] = to_json(suite);
  for (auto& c : suite.checks) r.checks.push_back(std::move(c));
  return r;
}

void print_human(const Report& r) {
  const auto& res = r.results;
  if (r.command == "points") {
    std::cout << res["count"].get<std::int64_t>() << " points\n";
    for (const auto& p : res["points"]) {
      std::cout << "  " << show_q(p["a"], p["i"]) << "  (" << p["eta"].get<std::string>() << ", "
                << p["xi"].get<std::string>() << ")\n";
    }
  } else if (r.command == "mu2") {
    std::cout << res["text"].get<std::string>() << "\n";
    if (res.contains("polynomial_identity")) std::cout << res["polynomial_identity"].get<std::string>() << "\n";
  } else if (r.command == "render") {
    std::cout << "wrote " << r.inputs["out"].get<std::string>() << " (" << res["bytes"].get<std::size_t>() << " bytes)\n";
  }
  for (const auto& c : r.checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (c.cases > 1) std::cout << " [" << c.cases << " cases, " << c.failures << " failed]";
    if (!c.passed && c.detail.contains("first_failure")) std::cout << " first: " << c.detail["first_failure"].get<std::string>();
    if (!c.passed && c.detail.contains("exception")) std::cout << " error: " << c.detail["exception"].get<std::string>();
    std::cout << "\n";
  }
  std::cout << (r.passed() ? "all checks passed" : "some checks FAILED") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Floer products on class-P affine bases and their mirrors"};
  app.require_subcommand(1);
  bool as_json = false;
  std::string report_path;
  app.add_flag("--json", as_json, "print the JSON report instead of text");

  InstanceArgs ia;
  const auto add_instance = [&](CLI::App* sub) {
    auto* path = sub->add_option("--instance", ia.path, "instance JSON file");
    auto* builtin = sub->add_option("--builtin", ia.builtin, "builtin instance")->check(CLI::IsMember({"cp2", "dp6"}));
    path->excludes(builtin);
    sub->add_option("--dp6", ia.dp6_widths, "dp6 widths: left middle right height")->expected(4)->allow_extra_args(false);
    sub->add_flag("--json", as_json, "print the JSON report instead of text");
  };

  std::vector<std::string> pos;
  auto* points = app.add_subcommand("points", "list B((1/d)Z)");
  add_instance(points);
  points->add_option("args", pos, "[instance] d");
  points->add_option("--out", report_path, "also write the JSON report here");

  auto* mu2 = app.add_subcommand("mu2", "triangle product of q_{b,j} and q_{a,i}");
  add_instance(mu2);
  mu2->add_option("args", pos, "[instance] n m a i b j")->allow_extra_args();
  mu2->add_option("--out", report_path, "also write the JSON report here");

  std::string suite;
  VerifyBounds bounds;
  auto* verify = app.add_subcommand("verify", "run a cross-check suite");
  verify->add_option("suite", suite, "points|ring|homotopy|tropical|wrapped|numeric|all")
      ->required()
      ->check(CLI::IsMember({"points", "ring", "homotopy", "tropical", "wrapped", "numeric", "all"}));
  verify->add_option("--max-degree", bounds.max_degree, "largest n, m for the ring and homotopy sweeps");
  verify->add_option("--max-total-degree", bounds.max_total_degree, "associativity bound");
  verify->add_option("--max-k", bounds.max_k, "largest k for homotopy enumeration");
  verify->add_option("--max", bounds.max, "largest n, m for the tropical sweep");
  verify->add_option("--max-r", bounds.max_r, "largest wrapping level");
  verify->add_option("--wrapped-degree", bounds.wrapped_degree, "largest degree in the wrapped sweep");
  verify->add_option("--tol", bounds.tol, "numeric tolerance");
  verify->add_option("--out", report_path, "also write the JSON report here");
  verify->add_flag("--json", as_json, "print the JSON report instead of text");

  std::optional<std::int64_t> points_d;
  std::vector<std::int64_t> triangle;
  std::string svg_path;
  auto* render = app.add_subcommand("render", "draw B as SVG");
  add_instance(render);
  render->add_option("args", pos, "[instance] [out.svg]");
  render->add_option("--points", points_d, "mark B((1/d)Z)");
  render->add_option("--triangle", triangle, "a i n b j m h")->expected(7)->allow_extra_args(false);
  render->add_option("--out", svg_path, "SVG path");

  double tol = 1e-8;
  auto* numeric = app.add_subcommand("numeric", "SYZ coordinates, critical points, Hessian metric");
  numeric->add_option("--tol", tol, "quadrature tolerance");
  numeric->add_option("--out", report_path, "also write the JSON report here");
  numeric->add_flag("--json", as_json, "print the JSON report instead of text");

  CLI11_PARSE(app, argc, argv);

  try {
    Report report;
    if (*points) report = cmd_points(ia, pos);
    else if (*mu2) report = cmd_mu2(ia, pos);
    else if (*verify) report = cmd_verify(suite, bounds);
    else if (*render) report = cmd_render(ia, pos, points_d, triangle, svg_path);
    else report = cmd_numeric(tol);
    const auto j = report.to_json();
    if (!report_path.empty()) write_text(report_path, j.dump(2) + "\n");
    if (as_json) {
      std::cout << j.dump(2) << "\n";
    } else {
      print_human(report);
    }
    return report.passed() ? 0 : 1;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
