// Command line frontend for the ellrot library.
//
// Subcommands: rotate, solve, qmul, trace, verify, reflect.
// Matrix-producing commands emit a JSON document on stdout; trace emits CSV.
// Exit codes: 0 success, 2 invalid input, 3 numerical failure.

#include <ellrot/ellrot.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using ellrot::EllipticSpace;
using ellrot::Error;
using ellrot::ErrorCode;
using ellrot::Mat;
using ellrot::Vec;
using nlohmann::ordered_json;

constexpr double kPi = 3.14159265358979323846;

// Accepts plain decimals and simple fractions like "1/4" or "-3/2".
double parse_number(const std::string& tok) {
  auto parse_part = [&](const std::string& part) {
    double value = 0.0;
    const char* first = part.data();
    const char* last = part.data() + part.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
      throw Error(ErrorCode::InvalidArgument, "cannot parse number '" + tok + "'");
    }
    return value;
  };
  auto slash = tok.find('/');
  if (slash == std::string::npos) return parse_part(tok);
  double num = parse_part(tok.substr(0, slash));
  double den = parse_part(tok.substr(slash + 1));
  if (den == 0.0) {
    throw Error(ErrorCode::InvalidArgument, "zero denominator in '" + tok + "'");
  }
  return num / den;
}

std::vector<double> parse_list(const std::string& csv, const std::string& what) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    auto comma = csv.find(',', pos);
    if (comma == std::string::npos) comma = csv.size();
    std::string tok = csv.substr(pos, comma - pos);
    if (tok.empty()) {
      throw Error(ErrorCode::InvalidArgument, "empty entry in " + what);
    }
    out.push_back(parse_number(tok));
    pos = comma + 1;
  }
  if (out.empty()) {
    throw Error(ErrorCode::InvalidArgument, what + " is empty");
  }
  return out;
}

Vec parse_vec(const std::string& csv, const std::string& what) {
  return Vec(parse_list(csv, what));
}

std::string format_double(double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  (void)ec;
  return std::string(buf, ptr);
}

ordered_json vec_json(const Vec& v) {
  ordered_json arr = ordered_json::array();
  for (std::size_t i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

ordered_json coeffs_json(const EllipticSpace& s) {
  ordered_json arr = ordered_json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) arr.push_back(s.coeff(i));
  return arr;
}

ordered_json mat_json(const Mat& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

void emit(const ordered_json& doc, const std::string& out_path) {
  std::string text = doc.dump(2);
  text.push_back('\n');
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot open '" + out_path + "'");
    f << text;
  }
}

// Shared state filled by CLI11 before a subcommand runs.
struct Options {
  std::string a;
  std::string method;
  std::string axis;
  std::string from;
  std::string to;
  std::string start;
  std::string v;
  std::string x;
  std::string p;
  std::string q;
  std::string file;
  std::string out;
  double angle = 0.0;
  bool has_angle = false;
  bool degrees = false;
  int steps = 0;
  double tol = ellrot::kDefaultTol;
};

double angle_in_radians(const Options& opt) {
  return opt.degrees ? opt.angle * kPi / 180.0 : opt.angle;
}

Vec unit_axis(const EllipticSpace& s, const Vec& axis) {
  double n = ellrot::norm(s, axis);
  if (n == 0.0) throw Error(ErrorCode::ZeroVector, "axis is zero");
  return axis * (1.0 / n);
}

// Builds a rotation by angle about an axis (3D) or in the plane (2D) with
// the requested construction route.
Mat build_rotation(const EllipticSpace& s, const Options& opt) {
  const double theta = angle_in_radians(opt);
  if (s.dim() == 2) {
    if (!opt.axis.empty()) {
      throw Error(ErrorCode::InvalidArgument, "--axis is not meaningful in dimension 2");
    }
    if (!opt.has_angle) {
      throw Error(ErrorCode::InvalidArgument, "dimension 2 requires --angle");
    }
    if (opt.method == "rodrigues") return ellrot::rotate2d(s, theta);
    if (opt.method == "cayley") {
      double c = std::cos(theta);
      if (1.0 + c <= ellrot::kTightTol) {
        throw Error(ErrorCode::HalfTurn, "angle pi is outside the Cayley image");
      }
      Mat params(2);
      params(1, 0) = std::tan(theta / 2.0);
      return ellrot::cayley_map(s, ellrot::skew_from_params(s, params));
    }
    if (opt.method == "householder") {
      Vec xhat{1.0 / std::sqrt(s.coeff(0)), 0.0};
      Vec y = ellrot::rotate2d(s, theta) * xhat;
      if (ellrot::norm(s, xhat + y) <= ellrot::kTightTol) {
        Mat h1 = ellrot::householder_matrix(s, Vec{0.0, 1.0});
        Mat h2 = ellrot::householder_matrix(s, Vec{1.0, 0.0});
        return h1 * h2;
      }
      return ellrot::rotation_between(s, xhat, y);
    }
    if (opt.method == "quat") {
      throw Error(ErrorCode::InvalidArgument, "quaternions require dimension 3");
    }
    throw Error(ErrorCode::InvalidArgument, "unknown method '" + opt.method + "'");
  }
  if (s.dim() != 3) {
    throw Error(ErrorCode::InvalidArgument,
                "axis/angle rotations need dimension 2 or 3; use --from/--to with "
                "--method householder for higher dimensions");
  }
  if (opt.axis.empty()) {
    throw Error(ErrorCode::InvalidArgument, "dimension 3 requires --axis");
  }
  Vec axis_raw = parse_vec(opt.axis, "--axis");
  ellrot::detail::require_dim(s, axis_raw, "--axis");

  if (opt.method == "cayley" && !opt.has_angle) {
    // Raw Cayley parameter vector: rotation angle is 2*atan of its norm.
    return ellrot::cayley_closed_form(s, axis_raw);
  }
  if (!opt.has_angle) {
    throw Error(ErrorCode::InvalidArgument, "--angle is required for this method");
  }
  Vec u = unit_axis(s, axis_raw);
  if (opt.method == "rodrigues") return ellrot::rodrigues3d(s, u, theta);
  if (opt.method == "cayley") {
    double c = std::cos(theta);
    if (1.0 + c <= ellrot::kTightTol) {
      throw Error(ErrorCode::HalfTurn, "angle pi is outside the Cayley image");
    }
    return ellrot::cayley_closed_form(s, u * std::tan(theta / 2.0));
  }
  if (opt.method == "quat") {
    return ellrot::to_rotation_matrix(ellrot::from_axis_angle(s, u, theta));
  }
  if (opt.method == "householder") {
    // Pick a seed point in the rotation plane and compose reflections that
    // carry it to its image. A single pair degenerates near angle pi, so the
    // turn is split into two halves.
    Vec xhat = ellrot::orthogonal_complement_unit(s, u);
    Mat r = ellrot::rodrigues3d(s, u, theta);
    Vec y = r * xhat;
    if (ellrot::norm(s, xhat + y) > 1e-6) {
      return ellrot::rotation_between(s, xhat, y);
    }
    Mat half = ellrot::rodrigues3d(s, u, theta / 2.0);
    Vec mid = half * xhat;
    return ellrot::rotation_between(s, mid, y) * ellrot::rotation_between(s, xhat, mid);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown method '" + opt.method + "'");
}

int cmd_rotate(const Options& opt) {
  EllipticSpace s = ellrot::make_space(parse_list(opt.a, "--a"));
  Mat r(s.dim());
  if (!opt.from.empty() || !opt.to.empty()) {
    if (opt.from.empty() || opt.to.empty()) {
      throw Error(ErrorCode::InvalidArgument, "--from and --to must be given together");
    }
    if (opt.has_angle || !opt.axis.empty()) {
      throw Error(ErrorCode::InvalidArgument, "--from/--to excludes --axis/--angle");
    }
    Vec x = parse_vec(opt.from, "--from");
    Vec y = parse_vec(opt.to, "--to");
    if (opt.method == "householder") {
      r = ellrot::rotation_between(s, x, y, opt.tol);
    } else if (s.dim() == 3) {
      auto sol = ellrot::solve(s, x, y, opt.tol);
      if (opt.method == "rodrigues") {
        r = sol.r_rodrigues;
      } else if (opt.method == "quat") {
        r = sol.r_quaternion;
      } else if (opt.method == "cayley") {
        if (!sol.r_cayley) {
          throw Error(ErrorCode::HalfTurn, "antipodal pair is outside the Cayley image");
        }
        r = *sol.r_cayley;
      } else {
        throw Error(ErrorCode::InvalidArgument, "unknown method '" + opt.method + "'");
      }
    } else {
      throw Error(ErrorCode::InvalidArgument,
                  "--from/--to with this method needs dimension 3; "
                  "--method householder works in any dimension");
    }
  } else {
    r = build_rotation(s, opt);
  }

  double residual = ellrot::b_orthogonality_residual(s, r);
  double d = ellrot::det(r);
  ordered_json doc;
  doc["a"] = coeffs_json(s);
  doc["matrix"] = mat_json(r);
  doc["det"] = d;
  doc["residual_orthogonality"] = residual;
  emit(doc, opt.out);

  double scale = std::max(1.0, ellrot::max_abs(r));
  if (residual > opt.tol * scale || std::abs(d - 1.0) > opt.tol * scale) return 3;
  return 0;
}

int cmd_solve(const Options& opt) {
  auto coeffs = parse_list(opt.a, "--a");
  EllipticSpace s = ellrot::make_space(coeffs);
  Vec x = parse_vec(opt.from, "--from");
  Vec y = parse_vec(opt.to, "--to");
  auto sol = ellrot::solve(s, x, y, opt.tol);

  ordered_json methods;
  methods["rodrigues"] = mat_json(sol.r_rodrigues);
  methods["householder"] = mat_json(sol.r_householder);
  methods["quaternion"] = mat_json(sol.r_quaternion);
  if (sol.r_cayley) methods["cayley"] = mat_json(*sol.r_cayley);

  ordered_json residuals;
  residuals["rodrigues"] = sol.residuals.rodrigues;
  residuals["householder"] = sol.residuals.householder;
  residuals["quaternion"] = sol.residuals.quaternion;
  if (sol.residuals.cayley) residuals["cayley"] = *sol.residuals.cayley;
  residuals["max_pairwise"] = sol.residuals.max_pairwise;

  ordered_json doc;
  doc["a"] = coeffs_json(s);
  doc["axis"] = vec_json(sol.axis);
  doc["cos"] = sol.cos_angle;
  doc["sin"] = sol.sin_angle;
  doc["methods"] = methods;
  doc["residuals"] = residuals;
  emit(doc, opt.out);

  double xn = ellrot::norm(s, x);
  double worst = std::max({sol.residuals.rodrigues, sol.residuals.householder,
                           sol.residuals.quaternion,
                           sol.residuals.cayley.value_or(0.0)});
  if (worst > opt.tol * std::max(1.0, xn)) return 3;
  return 0;
}

int cmd_qmul(const Options& opt) {
  EllipticSpace s = ellrot::make_space(parse_list(opt.a, "--a"));
  if (s.dim() != 3) {
    throw Error(ErrorCode::InvalidArgument, "quaternions require three coefficients");
  }
  auto pv = parse_list(opt.p, "--p");
  auto qv = parse_list(opt.q, "--q");
  if (pv.size() != 4 || qv.size() != 4) {
    throw Error(ErrorCode::InvalidArgument, "--p and --q need four components w,x,y,z");
  }
  ellrot::EllipticQuaternion p(s, pv[0], pv[1], pv[2], pv[3]);
  ellrot::EllipticQuaternion q(s, qv[0], qv[1], qv[2], qv[3]);
  auto prod = ellrot::qmul(p, q);

  ordered_json doc;
  doc["a"] = coeffs_json(s);
  doc["p"] = ordered_json{pv[0], pv[1], pv[2], pv[3]};
  doc["q"] = ordered_json{qv[0], qv[1], qv[2], qv[3]};
  doc["product"] = ordered_json{prod[0], prod[1], prod[2], prod[3]};
  doc["norm"] = ellrot::qnorm(prod);
  emit(doc, opt.out);
  return 0;
}

int cmd_trace(const Options& opt) {
  EllipticSpace s = ellrot::make_space(parse_list(opt.a, "--a"));
  if (s.dim() != 2 && s.dim() != 3) {
    throw Error(ErrorCode::InvalidArgument, "trace supports dimensions 2 and 3");
  }
  if (!opt.has_angle) {
    throw Error(ErrorCode::InvalidArgument, "--angle (total sweep) is required");
  }
  if (opt.steps < 2) {
    throw Error(ErrorCode::InvalidArgument, "--steps must be at least 2");
  }
  Vec start = parse_vec(opt.start, "--start");
  ellrot::detail::require_dim(s, start, "--start");
  const double sweep = angle_in_radians(opt);

  Vec axis(3);
  if (s.dim() == 3) {
    if (opt.axis.empty()) {
      throw Error(ErrorCode::InvalidArgument, "dimension 3 requires --axis");
    }
    axis = unit_axis(s, parse_vec(opt.axis, "--axis"));
  } else if (!opt.axis.empty()) {
    throw Error(ErrorCode::InvalidArgument, "--axis is not meaningful in dimension 2");
  }

  const double level = ellrot::inner(s, start, start);
  std::vector<Vec> points;
  points.reserve(static_cast<std::size_t>(opt.steps));
  bool drift = false;
  for (int k = 0; k < opt.steps; ++k) {
    double t = sweep * static_cast<double>(k) / static_cast<double>(opt.steps - 1);
    Mat r = (s.dim() == 3) ? ellrot::rodrigues3d(s, axis, t) : ellrot::rotate2d(s, t);
    Vec p = r * start;
    if (std::abs(ellrot::inner(s, p, p) - level) > 1e-9 * std::max(1.0, level)) {
      drift = true;
    }
    points.push_back(p);
  }

  std::string text = (s.dim() == 3) ? "t,x,y,z\n" : "t,x,y\n";
  for (int k = 0; k < opt.steps; ++k) {
    double t = sweep * static_cast<double>(k) / static_cast<double>(opt.steps - 1);
    text += format_double(t);
    for (std::size_t i = 0; i < s.dim(); ++i) {
      text.push_back(',');
      text += format_double(points[static_cast<std::size_t>(k)][i]);
    }
    text.push_back('\n');
  }
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot open '" + opt.out + "'");
    f << text;
  }
  return drift ? 3 : 0;
}

int cmd_verify(const Options& opt) {
  std::ifstream f(opt.file);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot open '" + opt.file + "'");
  ordered_json doc;
  try {
    doc = ordered_json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("bad JSON: ") + e.what());
  }

  std::vector<double> coeffs;
  if (!opt.a.empty()) {
    coeffs = parse_list(opt.a, "--a");
  } else if (doc.contains("a")) {
    coeffs = doc["a"].get<std::vector<double>>();
  } else {
    throw Error(ErrorCode::InvalidArgument, "no coefficients: pass --a or include \"a\"");
  }
  EllipticSpace s = ellrot::make_space(coeffs);

  if (!doc.contains("matrix")) {
    throw Error(ErrorCode::InvalidArgument, "document has no \"matrix\" key");
  }
  auto rows = doc["matrix"].get<std::vector<std::vector<double>>>();
  if (rows.size() != s.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix size does not match coefficients");
  }
  Mat m(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (rows[i].size() != s.dim()) {
      throw Error(ErrorCode::DimensionMismatch, "matrix is not square");
    }
    for (std::size_t j = 0; j < s.dim(); ++j) m(i, j) = rows[i][j];
  }

  auto report = ellrot::verify(s, m, opt.tol);
  ordered_json out;
  out["a"] = coeffs_json(s);
  out["class"] = ellrot::to_string(report.matrix_class);
  out["det"] = report.det;
  out["residual_orthogonality"] = report.orthogonality_residual;
  out["trace"] = report.trace;
  if (report.axis_angle && !report.axis_angle->degenerate) {
    out["angle"] = report.axis_angle->angle;
    out["axis"] = vec_json(report.axis_angle->axis);
  }
  emit(out, opt.out);
  return report.matrix_class == ellrot::MatrixClass::NotBOrthogonal ? 3 : 0;
}

int cmd_reflect(const Options& opt) {
  EllipticSpace s = ellrot::make_space(parse_list(opt.a, "--a"));
  Vec v = parse_vec(opt.v, "--v");
  Vec x = parse_vec(opt.x, "--x");
  Vec y = ellrot::reflect(s, v, x);

  ordered_json doc;
  doc["a"] = coeffs_json(s);
  doc["v"] = vec_json(v);
  doc["x"] = vec_json(x);
  doc["reflected"] = vec_json(y);
  emit(doc, opt.out);

  double nx = ellrot::norm(s, x);
  if (std::abs(ellrot::norm(s, y) - nx) > 1e-9 * std::max(1.0, nx)) return 3;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rotations and reflections of ellipsoids with a weighted inner product"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--a", opt.a, "comma separated positive coefficients, fractions allowed")
        ->required();
    sub->add_option("--tol", opt.tol, "verification tolerance");
    sub->add_option("--out", opt.out, "write output to a file instead of stdout");
  };

  auto* rotate = app.add_subcommand("rotate", "build a rotation matrix");
  add_common(rotate);
  rotate->add_option("--method", opt.method, "rodrigues | cayley | householder | quat")
      ->required();
  rotate->add_option("--axis", opt.axis, "rotation axis (dimension 3)");
  auto* rotate_angle = rotate->add_option("--angle", opt.angle, "rotation angle");
  rotate->add_flag("--degrees", opt.degrees, "interpret angles as degrees");
  rotate->add_option("--from", opt.from, "point to rotate from");
  rotate->add_option("--to", opt.to, "point to rotate to");

  auto* solve = app.add_subcommand("solve", "rotation taking one point to another, all methods");
  add_common(solve);
  solve->add_option("--from", opt.from, "source point")->required();
  solve->add_option("--to", opt.to, "target point")->required();

  auto* qmul = app.add_subcommand("qmul", "multiply two elliptic quaternions");
  add_common(qmul);
  qmul->add_option("--p", opt.p, "left factor w,x,y,z")->required();
  qmul->add_option("--q", opt.q, "right factor w,x,y,z")->required();

  auto* trace = app.add_subcommand("trace", "sample a rotation orbit as CSV");
  add_common(trace);
  trace->add_option("--start", opt.start, "starting point")->required();
  trace->add_option("--axis", opt.axis, "rotation axis (dimension 3)");
  auto* trace_angle = trace->add_option("--angle", opt.angle, "total sweep angle");
  trace->add_flag("--degrees", opt.degrees, "interpret angles as degrees");
  trace->add_option("--steps", opt.steps, "number of rows, at least 2")->required();

  auto* verify = app.add_subcommand("verify", "classify a matrix from a JSON document");
  verify->add_option("--a", opt.a, "coefficients; overrides the document");
  verify->add_option("--tol", opt.tol, "verification tolerance");
  verify->add_option("--out", opt.out, "write output to a file instead of stdout");
  verify->add_option("--file", opt.file, "JSON document with a \"matrix\" key")->required();

  auto* reflect = app.add_subcommand("reflect", "reflect a point in a mirror hyperplane");
  add_common(reflect);
  reflect->add_option("--v", opt.v, "mirror normal vector")->required();
  reflect->add_option("--x", opt.x, "point to reflect")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "InvalidArgument: " << e.what() << "\n";
    return 2;
  }

  opt.has_angle = (rotate_angle->count() > 0) || (trace_angle->count() > 0);

  try {
    if (rotate->parsed()) return cmd_rotate(opt);
    if (solve->parsed()) return cmd_solve(opt);
    if (qmul->parsed()) return cmd_qmul(opt);
    if (trace->parsed()) return cmd_trace(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (reflect->parsed()) return cmd_reflect(opt);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "InvalidArgument: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
