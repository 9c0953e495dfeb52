#include "cli.hpp"

#include "../acceptance/acceptance.hpp"
#include "json_out.hpp"
#include "shape_parse.hpp"

#include <inclab/inclab.hpp>

#include <CLI11.hpp>
#include <Eigen/Dense>
#include <Eigen/Geometry>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>

namespace inclab::cli {

namespace {

constexpr double kPi = std::numbers::pi;

struct Options {
  std::string shape;
  std::vector<double> k;
  std::string lame;
  int n = 0;
  double tol = 0.0;
  std::string out_dir;
  std::string format = "json";
  // shapeopt
  std::vector<double> start;
  int max_mode = 6;
  // suite
  std::vector<int> only;
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  const Options& opt;
};

struct Check {
  std::string name;
  double value = 0.0;
  double limit = 0.0;
  bool at_most = true;

  bool pass() const { return at_most ? value <= limit : value >= limit; }
};

Json checks_json(const std::vector<Check>& checks, bool& all) {
  Json arr = Json::array();
  all = true;
  for (const Check& c : checks) {
    Json j;
    j["name"] = c.name;
    j["value"] = c.value;
    j["value_tol"] = c.limit;
    j["relation"] = c.at_most ? "<=" : ">=";
    j["pass"] = c.pass();
    all = all && c.pass();
    arr.push_back(j);
  }
  return arr;
}

int finish(Context& ctx, Json report, const std::vector<Check>& checks) {
  bool all = true;
  report["checks"] = checks_json(checks, all);
  report["pass"] = all;
  ctx.out << dump(report) << '\n';
  return all ? kExitOk : kExitCheckFailed;
}

ShapeSpec require_shape(const Options& o, const std::string& fallback = "") {
  const std::string text = o.shape.empty() ? fallback : o.shape;
  if (text.empty()) throw ConfigError("shape", "--shape is required");
  return parse_shape(text);
}

double single_k(const Options& o, double fallback) {
  if (o.k.size() > 1) throw ConfigError("k", "this command takes a single contrast");
  const double k = o.k.empty() ? fallback : o.k.front();
  try {
    return Contrast(k).k;
  } catch (const DomainError& e) {
    throw ConfigError("k", e.what());
  }
}

double tolerance(const Options& o, double fallback) { return o.tol > 0.0 ? o.tol : fallback; }

int resolution(const Options& o, const ShapeSpec& s) {
  if (o.n == 0) return default_resolution(s);
  if (o.n < 16) throw ConfigError("n", "must be at least 16");
  return o.n;
}

void require_json(const Options& o) {
  if (o.format != "json") throw ConfigError("format", "only json is available for this command");
}

void require_dim(const ShapeSpec& s, int d, const std::string& why) {
  if (dimension(s) != d) throw ConfigError("shape", why);
}

// Accuracy of the discretized quantities on this shape.
double accuracy(const ShapeSpec& s) {
  if (std::holds_alternative<Polygon>(s)) return 1e-4;
  if (dimension(s) == 3) return 1e-12;
  return 1e-8;
}

Eigen::Vector2d bbox_extent(const BoundaryGrid& g) {
  return (g.nodes.rowwise().maxCoeff() - g.nodes.rowwise().minCoeff()).head<2>();
}

double sample_margin(const ShapeSpec& s) {
  const BoundaryGrid g = discretize(s, 64);
  const Eigen::VectorXd ext = g.nodes.rowwise().maxCoeff() - g.nodes.rowwise().minCoeff();
  return 0.1 * ext.minCoeff();
}

Json header(const std::string& command, const ShapeSpec& s) {
  Json j;
  j["command"] = command;
  j["shape"] = describe(s);
  j["dim"] = dimension(s);
  j["dim_tol"] = 0;
  return j;
}

PolarizationTensor compute_pt(const ShapeSpec& s, double k, int n) {
  if (dimension(s) == 2) return polarization_tensor(discretize(s, n), k);
  if (const auto* e = std::get_if<Ellipsoid>(&s)) return ellipsoid_pt(*e, k);
  throw ConfigError("shape", "3D polarization tensors are available for ellipsoids only");
}

// ---------------------------------------------------------------------------

int cmd_pt(Context& ctx) {
  const Options& o = ctx.opt;
  require_json(o);
  const ShapeSpec s = require_shape(o);
  const double k = single_k(o, 3.0);
  const int n = resolution(o, s);
  const PolarizationTensor pt = compute_pt(s, k, n);
  const double acc = accuracy(s);

  Json r = header("pt", s);
  put(r, "k", k, 0.0);
  put(r, "n", n, 0.0);
  put(r, "volume", pt.volume, acc * pt.volume);
  put(r, "M", to_json(pt.M), acc * pt.M.norm());
  put(r, "asymmetry", pt.asymmetry, 1e-8 * pt.M.norm());

  std::vector<Check> checks;
  checks.push_back({"asymmetry", pt.asymmetry, 1e-8 * pt.M.norm(), true});
  const double smallest = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(pt.M).eigenvalues().minCoeff();
  const double largest = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(pt.M).eigenvalues().maxCoeff();
  if (k > 1.0) {
    checks.push_back({"min eigenvalue (positive definite)", smallest, 0.0, false});
  } else {
    checks.push_back({"max eigenvalue (negative definite)", largest, 0.0, true});
  }
  std::optional<PolarizationTensor> closed;
  if (const auto* e = std::get_if<Ellipse>(&s)) closed = ellipsoid_pt(*e, k);
  if (closed && dimension(s) == 2) {
    put(r, "closed_form_M", to_json(closed->M), 1e-12 * closed->M.norm());
    checks.push_back({"max |M - closed form|", (pt.M - closed->M).cwiseAbs().maxCoeff(), tolerance(o, 1e-6), true});
  }
  return finish(ctx, r, checks);
}

int cmd_bounds(Context& ctx) {
  const Options& o = ctx.opt;
  require_json(o);
  const ShapeSpec s = require_shape(o);
  const double k = single_k(o, 3.0);
  const int n = resolution(o, s);
  const PolarizationTensor pt = compute_pt(s, k, n);
  const BoundReport b = hs_bounds(pt);
  const double acc = accuracy(s);

  Json r = header("bounds", s);
  put(r, "k", k, 0.0);
  put(r, "n", n, 0.0);
  r["form"] = to_string(b.form);
  put(r, "tr_M", b.tr_M, acc * std::abs(b.tr_M));
  put(r, "tr_Minv_scaled", b.tr_Minv_scaled, acc * std::abs(b.tr_Minv_scaled));
  put(r, "bound1_rhs", b.bound1_rhs, 1e-15 * std::abs(b.bound1_rhs));
  put(r, "bound2_rhs", b.bound2_rhs, 1e-15 * std::abs(b.bound2_rhs));
  put(r, "slack1", b.slack1, b.tol1);
  put(r, "slack2", b.slack2, b.tol2);
  r["saturated1"] = b.saturated1;
  r["saturated2"] = b.saturated2;

  std::vector<Check> checks;
  checks.push_back({"slack1", b.slack1, -tolerance(o, 1.0) * b.tol1, false});
  checks.push_back({"slack2", b.slack2, -tolerance(o, 1.0) * b.tol2, false});
  return finish(ctx, r, checks);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int cmd_eshelby(Context& ctx) {
  const Options& o = ctx.opt;
  if (o.format != "json" && o.format != "csv") throw ConfigError("format", "must be json or csv");
  const ShapeSpec s = require_shape(o);
  require_dim(s, 2, "eshelby runs on 2D shapes");
  std::vector<double> ks = o.k.empty() ? std::vector<double>{0.5, 2.0, 10.0} : o.k;
  for (double k : ks) {
    try {
      Contrast{k};
    } catch (const DomainError& e) {
      throw ConfigError("k", e.what());
    }
  }
  if (ks.size() < 2) ks.push_back(ks.front() == 2.0 ? 0.5 : 2.0);
  const int n = resolution(o, s);
  const BoundaryGrid g = discretize(s, n);
  const InteriorSample sample = interior_points(s, 40, sample_margin(s));
  const auto rows = k_independence_check(g, ks, sample);
  const bool ellipse = std::holds_alternative<Ellipse>(s);
  const double tol = tolerance(o, 1e-6);

  std::vector<Check> checks;
  if (ellipse) {
    double worst = 0.0;
    for (const auto& row : rows) worst = std::max(worst, row.delta);
    checks.push_back({"max delta (uniform field)", worst, tol, true});
  }
  bool all = true;
  for (const Check& c : checks) all = all && c.pass();

  if (o.format == "csv") {
    ctx.out << "shape,k,direction,mean_gx,mean_gy,delta\n";
    for (const auto& row : rows) {
      ctx.out << csv_field(describe(s)) << ',' << num(row.k) << ",e" << row.direction + 1 << ','
              << num(row.mean_gradient(0)) << ',' << num(row.mean_gradient(1)) << ',' << num(row.delta) << '\n';
    }
    return all ? kExitOk : kExitCheckFailed;
  }
  Json r = header("eshelby", s);
  put(r, "n", n, 0.0);
  put(r, "samples", static_cast<int>(sample.size()), 0.0);
  put(r, "margin", sample.margin, 0.0);
  Json table = Json::array();
  for (const auto& row : rows) {
    Json j;
    put(j, "k", row.k, 0.0);
    j["direction"] = "e" + std::to_string(row.direction + 1);
    put(j, "mean_gradient", to_json(row.mean_gradient), accuracy(s));
    put(j, "delta", row.delta, accuracy(s));
    table.push_back(j);
  }
  r["rows"] = table;
  return finish(ctx, r, checks);
}

int cmd_newtonian(Context& ctx) {
  const Options& o = ctx.opt;
  require_json(o);
  const ShapeSpec s = require_shape(o);
  const int d = dimension(s);
  const InteriorSample sample = interior_points(s, d == 2 ? 30 : 60, sample_margin(s));
  const QuadraticFitReport f = quadratic_interior_fit(s, sample);
  const double tol = tolerance(o, 1e-6);

  Json r = header("newtonian", s);
  put(r, "samples", f.samples, 0.0);
  put(r, "margin", sample.margin, 0.0);
  std::vector<Check> checks;
  std::optional<Eigen::MatrixXd> expected_A;
  if (const auto* e = std::get_if<Ellipse>(&s)) {
    const DepolarizationFactors a = depolarization_factors_2d(*e);
    put(r, "depolarization_factors", to_json(a.a), 1e-15);
    const Eigen::Matrix2d rot = Eigen::Rotation2Dd(e->rotation).toRotationMatrix();
    expected_A = rot * (0.5 * a.a).asDiagonal() * rot.transpose();
  } else if (const auto* e3 = std::get_if<Ellipsoid>(&s)) {
    const DepolarizationFactors a = depolarization_factors(*e3);
    put(r, "depolarization_factors", to_json(a.a), 1e-13);
    expected_A = Eigen::MatrixXd((0.5 * a.a).asDiagonal());
  } else {
    r["depolarization_factors"] = nullptr;
    r["depolarization_factors_tol"] = nullptr;
  }
  put(r, "A", to_json(f.A), 1e-5);
  put(r, "b", to_json(f.b), 1e-5);
  put(r, "C", f.C, 1e-5);
  put(r, "rms_residual", f.rms_residual, 1e-6);
  put(r, "max_residual", f.max_residual, 1e-6);

  // Cross-check the boundary route against the independent volume route.
  const Eigen::VectorXd x = sample.points.col(0);
  const double boundary = newtonian_potential(s, x);
  const double volume = newtonian_potential_volume(s, x);
  put(r, "probe_point", to_json(x), 0.0);
  put(r, "potential_boundary_route", boundary, 1e-6);
  put(r, "potential_volume_route", volume, 1e-6);
  checks.push_back({"|boundary - volume route|", std::abs(boundary - volume), 1e-6, true});
  if (expected_A) {
    checks.push_back({"rms residual (quadratic)", f.rms_residual, tol, true});
    checks.push_back({"max |A - diag(a_j)/2|", (f.A - *expected_A).cwiseAbs().maxCoeff(), 1e-5, true});
  }
  return finish(ctx, r, checks);
}

LameParams parse_lame(const std::string& text) {
  LameParams p{2.0, 1.0, 1.0, 0.5};
  if (!text.empty()) {
    std::vector<double> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        v.push_back(std::stod(item));
      } catch (const std::logic_error&) {
        throw ConfigError("lame", "cannot parse number '" + item + "'");
      }
    }
    if (v.size() != 4) throw ConfigError("lame", "expects lambda,mu,lambda_t,mu_t");
    p = {v[0], v[1], v[2], v[3]};
  }
  if (auto bad = lame_violation(p, 3)) throw ConfigError("lame", *bad);
  return p;
}

int cmd_elastic(Context& ctx) {
  const Options& o = ctx.opt;
  require_json(o);
  const ShapeSpec s = require_shape(o, "ellipsoid:2,1.5,1");
  const auto* e = std::get_if<Ellipsoid>(&s);
  if (e == nullptr) throw ConfigError("shape", "elastic-identity runs on ellipsoids");
  const LameParams p = parse_lame(o.lame);
  const int n = o.n == 0 ? 96 : resolution(o, s);
  const BoundaryGrid g = discretize(s, n);
  const double margin = std::max(0.25 * std::min({e->c1, e->c2, e->c3}), 2.2 * g.spacing.maxCoeff());
  const InteriorSample sample = interior_points(s, 20, margin);
  const double tol = tolerance(o, 1e-6);

  double matrix_phase = 0.0;
  double inclusion_phase = 0.0;
  double difference = 0.0;
  double green = 0.0;
  for (Eigen::Index i = 0; i < sample.size(); ++i) {
    const Eigen::Vector3d x = sample.points.col(i);
    const TraceIdentityReport t = trace_identity_check(g, p, x);
    matrix_phase = std::max(matrix_phase, t.matrix_phase.residual);
    inclusion_phase = std::max(inclusion_phase, t.inclusion_phase.residual);
    difference = std::max(difference, t.difference.residual);
    green = std::max(green, green_identity_check(g, x));
  }
  Json r = header("elastic-identity", s);
  put(r, "lame", Json::array({p.lambda, p.mu, p.lambda_t, p.mu_t}), 0.0);
  put(r, "n", n, 0.0);
  put(r, "points", static_cast<int>(sample.size()), 0.0);
  put(r, "margin", margin, 0.0);
  put(r, "matrix_phase_residual", matrix_phase, tol);
  put(r, "inclusion_phase_residual", inclusion_phase, tol);
  put(r, "difference_residual", difference, tol);
  put(r, "difference_coefficient", -(2.0 * (p.mu_t - p.mu) + 3.0 * (p.lambda_t - p.lambda)) / (2.0 * p.mu + p.lambda),
      1e-15);
  put(r, "green_identity_residual", green, tol);
  put(r, "kolosov_matrix", kolosov(p.lambda, p.mu), 1e-15);
  put(r, "kolosov_inclusion", kolosov(p.lambda_t, p.mu_t), 1e-15);
  return finish(ctx, r,
                {{"matrix-phase identity", matrix_phase, tol, true},
                 {"inclusion-phase identity", inclusion_phase, tol, true},
                 {"difference identity", difference, tol, true},
                 {"Green identity", green, tol, true}});
}

int cmd_hodograph(Context& ctx) {
  const Options& o = ctx.opt;
  require_json(o);
  const ShapeSpec s = require_shape(o, "ellipse:2,1");
  const auto* e = std::get_if<Ellipse>(&s);
  if (e == nullptr || e->rotation != 0.0 || e->center.norm() != 0.0) {
    throw ConfigError("shape", "hodograph runs on centred axis-aligned ellipses");
  }
  const double a = e->a;
  const double b = e->b;
  const ExteriorMap F = ellipse_exterior_map(a, b);
  auto psi = [&](Complex w) { return hodograph_map(a, b, w); };

  double boundary = 0.0;
  for (int i = 0; i < 512; ++i) {
    const double th = 2.0 * kPi * i / 512;
    const Complex w(a * std::cos(th), b * std::sin(th));
    boundary = std::max(boundary, std::abs(psi(w) - Complex(0.0, w.imag())));
  }
  const UnivalenceReport u = univalence_check(psi, F);
  const Complex alpha = asymptotic_coefficient(psi, {10.0, 100.0, 1000.0});
  const double tol = tolerance(o, 1e-10);

  Json r = header("hodograph", s);
  put(r, "gamma", F.gamma.real(), 1e-15);
  put(r, "C", F.C.real(), 0.0);
  put(r, "beta", F.beta.real(), 1e-15);
  put(r, "boundary_identity_error", boundary, tol);
  put(r, "min_abs_derivative", u.min_abs_derivative, 1e-6);
  put(r, "slit_lo", u.slit_lo, tol);
  put(r, "slit_hi", u.slit_hi, tol);
  put(r, "max_boundary_real", u.max_boundary_real, tol);
  put(r, "cauchy_riemann_residual", u.cauchy_riemann_residual, 1e-6);
  put(r, "winding", u.max_winding, 0.0);
  r["univalent"] = u.pass;
  put(r, "alpha", alpha.real(), 1e-4);
  put(r, "alpha_exact", hodograph_leading_coefficient(a, b), 1e-15);
  return finish(ctx, r,
                {{"boundary identity", boundary, tol, true},
                 {"slit endpoint error", std::max(std::abs(u.slit_lo + b), std::abs(u.slit_hi - b)), tol, true},
                 {"univalence (1 = pass)", u.pass ? 1.0 : 0.0, 1.0, false},
                 {"|alpha - b/(a+b)|", std::abs(alpha.real() - b / (a + b)), 1e-4, true}});
}

Json record_json(const OptRecord& rec, double acc) {
  Json j;
  put(j, "iteration", rec.iteration, 0.0);
  put(j, "evaluations", rec.evaluations, 0.0);
  put(j, "objective", rec.objective, acc);
  put(j, "coefficients", to_json(rec.coefficients), 1e-6);
  return j;
}

int cmd_shapeopt(Context& ctx) {
  const Options& o = ctx.opt;
  require_json(o);
  if (!o.shape.empty()) throw ConfigError("shape", "shapeopt starts from --start coefficients, not --shape");
  OptProblem p;
  p.k = single_k(o, 3.0);
  if (p.k <= 1.0) throw ConfigError("k", "shape optimization needs k > 1");
  p.n = o.n == 0 ? 256 : o.n;
  if (p.n < 128) throw ConfigError("n", "shape optimization needs n >= 128");
  if (o.max_mode < 2) throw ConfigError("max-mode", "must be at least 2");
  p.max_mode = o.max_mode;
  Eigen::VectorXd x0 = Eigen::VectorXd::Zero(coefficient_count(p));
  if (o.start.empty()) {
    x0(0) = 0.2;
    if (x0.size() > 2) x0(2) = 0.1;
  } else {
    if (static_cast<Eigen::Index>(o.start.size()) > x0.size()) {
      throw ConfigError("start", "more coefficients than 2 (max-mode - 1)");
    }
    for (std::size_t i = 0; i < o.start.size(); ++i) x0(static_cast<Eigen::Index>(i)) = o.start[i];
  }
  try {
    star_from_coefficients(x0, p.max_mode, p.target_area);
  } catch (const InvalidShapeError& e) {
    throw ConfigError("start", e.what());
  }

  const OptTrace tr = minimize(p, x0);
  const double acc = 1e-7 * tr.target;
  const double tol = tolerance(o, 1e-3);

  std::ostringstream lines;
  for (const OptRecord& rec : tr.history) lines << dump(record_json(rec, acc), -1) << '\n';
  Json summary;
  summary["final"] = true;
  put(summary, "k", p.k, 0.0);
  put(summary, "target_area", p.target_area, 1e-10);
  put(summary, "max_mode", p.max_mode, 0.0);
  put(summary, "n", p.n, 0.0);
  put(summary, "evaluations", tr.evaluations, 0.0);
  put(summary, "invalid_evaluations", tr.invalid_evaluations, 0.0);
  put(summary, "initial_coefficients", to_json(tr.initial_coefficients), 0.0);
  put(summary, "final_coefficients", to_json(tr.final_coefficients), 1e-6);
  put(summary, "final_objective", tr.final_objective, acc);
  put(summary, "target", tr.target, 1e-15 * tr.target);
  put(summary, "gap", tr.gap, acc);
  put(summary, "min_evaluated", tr.min_evaluated, acc);
  put(summary, "max_area_error", tr.max_area_error, 1e-10);
  summary["converged"] = tr.converged;

  std::vector<Check> checks = {{"gap / target", tr.gap / tr.target, tol, true},
                               {"max |coefficient|", tr.final_coefficients.cwiseAbs().maxCoeff(), 1e-2, true},
                               {"(min evaluated - target) / target", (tr.min_evaluated - tr.target) / tr.target,
                                -1e-5, false}};
  bool all = true;
  summary["checks"] = checks_json(checks, all);
  summary["pass"] = all;
  lines << dump(summary, -1) << '\n';

  if (!o.out_dir.empty()) {
    std::filesystem::create_directories(o.out_dir);
    std::ofstream(std::filesystem::path(o.out_dir) / "shapeopt_trace.jsonl") << lines.str();
    std::ofstream(std::filesystem::path(o.out_dir) / "shapeopt_overlay.svg")
        << svg_overlay(tr.initial_shape, tr.final_shape, std::sqrt(p.target_area / kPi));
  }
  ctx.out << lines.str();
  return all ? kExitOk : kExitCheckFailed;
}

int cmd_suite(Context& ctx) {
  const Options& o = ctx.opt;
  const std::set<int> only(o.only.begin(), o.only.end());
  for (int id : only) {
    if (id < 1 || id > static_cast<int>(acceptance::criteria().size())) {
      throw ConfigError("only", "no criterion " + std::to_string(id));
    }
  }
  const auto results = acceptance::run(only, ctx.out);
  int failed = 0;
  for (const auto& r : results) failed += r.pass ? 0 : 1;
  ctx.out << results.size() - static_cast<std::size_t>(failed) << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"inclab: inclusion problems in potential theory and elastostatics"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* sub, bool with_shape) {
    if (with_shape) sub->add_option("--shape", opt.shape, "type:params or @file.json");
    sub->add_option("--k", opt.k, "contrast(s), comma separated")->delimiter(',');
    sub->add_option("--n", opt.n, "boundary resolution");
    sub->add_option("--tol", opt.tol, "check tolerance override");
    sub->add_option("--out", opt.out_dir, "output directory");
    sub->add_option("--format", opt.format, "json or csv");
  };
  CLI::App* pt = app.add_subcommand("pt", "polarization tensor");
  common(pt, true);
  CLI::App* bounds = app.add_subcommand("bounds", "Hashin-Shtrikman bound report");
  common(bounds, true);
  CLI::App* eshelby = app.add_subcommand("eshelby", "interior field uniformity per k and direction");
  common(eshelby, true);
  CLI::App* newtonian = app.add_subcommand("newtonian", "quadratic fit of the Newtonian potential");
  common(newtonian, true);
  CLI::App* elastic = app.add_subcommand("elastic-identity", "elastic trace identities on an ellipsoid");
  common(elastic, true);
  elastic->add_option("--lame", opt.lame, "lambda,mu,lambda_t,mu_t");
  CLI::App* hodo = app.add_subcommand("hodograph", "hodograph map and univalence check");
  common(hodo, true);
  CLI::App* shapeopt = app.add_subcommand("shapeopt", "minimize Tr M over star shapes");
  common(shapeopt, true);
  shapeopt->add_option("--start", opt.start, "initial coefficients eps2,delta2,eps3,...")->delimiter(',');
  shapeopt->add_option("--max-mode", opt.max_mode, "largest Fourier mode");
  CLI::App* suite = app.add_subcommand("suite", "run the acceptance battery");
  suite->add_option("--only", opt.only, "criterion ids, comma separated")->delimiter(',');

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  Context ctx{out, err, opt};
  try {
    if (opt.tol < 0.0 || (opt.tol == 0.0 && std::any_of(args.begin(), args.end(), [](const std::string& a) {
                            return a == "--tol" || a.rfind("--tol=", 0) == 0;
                          }))) {
      throw ConfigError("tol", "must be positive");
    }
    if (opt.format != "json" && opt.format != "csv") throw ConfigError("format", "must be json or csv");
    if (pt->parsed()) return cmd_pt(ctx);
    if (bounds->parsed()) return cmd_bounds(ctx);
    if (eshelby->parsed()) return cmd_eshelby(ctx);
    if (newtonian->parsed()) return cmd_newtonian(ctx);
    if (elastic->parsed()) return cmd_elastic(ctx);
    if (hodo->parsed()) return cmd_hodograph(ctx);
    if (shapeopt->parsed()) return cmd_shapeopt(ctx);
    if (suite->parsed()) return cmd_suite(ctx);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitConfig;
}

}  // namespace inclab::cli
