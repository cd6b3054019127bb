#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

#include <cmath>
#include <numbers>

using ellrot::EllipticSpace;
using ellrot::Error;
using ellrot::ErrorCode;
using ellrot::Mat;
using ellrot::Vec;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kSqrt3 = std::numbers::sqrt3;
}  // namespace

TEST_CASE("cayley_closed_form reproduces the worked matrix") {
  EllipticSpace s = ellrot::make_space({0.25, 1.0 / 9.0, 1.0});
  Mat r = ellrot::cayley_closed_form(s, Vec{2.0, 3.0, 1.0});
  Mat expected(3, {0.0, 0.0, 2.0, 1.5, 0.0, 0.0, 0.0, 1.0 / 3.0, 0.0});
  CHECK(ellrot::max_abs_diff(r, expected) < 1e-12);
  CHECK(ellrot::classify(s, r) == ellrot::MatrixClass::Rotation);

  // The parameter vector is fixed by the rotation.
  Vec u{2.0, 3.0, 1.0};
  Vec ru = r * u;
  for (std::size_t i = 0; i < 3; ++i) CHECK(ru[i] == Catch::Approx(u[i]).margin(1e-12));
}

TEST_CASE("cayley_map agrees with the closed form") {
  EllipticSpace s = ellrot::make_space({0.25, 1.0 / 9.0, 1.0});
  Mat t = ellrot::skew_from_axis(s, Vec{2.0, 3.0, 1.0});
  Mat via_resolvent = ellrot::cayley_map(s, t);
  Mat expected(3, {0.0, 0.0, 2.0, 1.5, 0.0, 0.0, 0.0, 1.0 / 3.0, 0.0});
  CHECK(ellrot::max_abs_diff(via_resolvent, expected) < 1e-12);

  auto g = support::rng(401);
  for (int it = 0; it < 500; ++it) {
    EllipticSpace s2 = support::random_space(g, 3);
    Vec u = support::random_vec(g, 3);
    Mat a = ellrot::cayley_map(s2, ellrot::skew_from_axis(s2, u));
    Mat b = ellrot::cayley_closed_form(s2, u);
    CHECK(support::diff_at_scale(a, b) < 1e-12);
  }
}

TEST_CASE("cayley_map of zero is the identity and non-skew input throws") {
  EllipticSpace s = ellrot::make_space({1.0, 2.0, 3.0});
  CHECK(ellrot::max_abs_diff(ellrot::cayley_map(s, Mat(3)), Mat::identity(3)) == 0.0);
  try {
    (void)ellrot::cayley_map(s, Mat::identity(3));
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSkew);
  }
}

TEST_CASE("cayley_map works in higher dimensions") {
  auto g = support::rng(402);
  for (int it = 0; it < 200; ++it) {
    std::size_t n = 2 + static_cast<std::size_t>(it % 4);
    EllipticSpace s = support::random_space(g, n);
    Mat params(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) params(i, j) = support::uniform(g, -1.0, 1.0);
    Mat t = ellrot::skew_from_params(s, params);
    Mat r = ellrot::cayley_map(s, t);
    double scale = std::max(1.0, ellrot::max_abs(r));
    CHECK(ellrot::b_orthogonality_residual(s, r) < 1e-10 * scale);
    CHECK(ellrot::det(r) == Catch::Approx(1.0).margin(1e-10 * scale));
  }
}

TEST_CASE("cayley parameter of unit norm gives a quarter turn") {
  EllipticSpace s = ellrot::make_space({0.25, 1.0 / 9.0, 1.0});
  // A parameter whose B-norm is exactly 1.0 in doubles; a normalized generic
  // vector rounds to 1 +/- ulp and lands on either side of the branch point.
  Vec u{2.0, 0.0, 0.0};
  REQUIRE(ellrot::inner(s, u, u) == 1.0);
  CHECK(ellrot::cayley_angle(s, u) == Catch::Approx(kPi / 2.0).margin(1e-12));
  Mat r = ellrot::cayley_closed_form(s, u);
  CHECK(r.trace() == Catch::Approx(1.0).margin(1e-12));

  // Just off the branch point the magnitude is still a quarter turn.
  Vec near = Vec{2.0, 3.0, 1.0} * (1.0 / kSqrt3);
  CHECK(std::abs(ellrot::cayley_angle(s, near)) == Catch::Approx(kPi / 2.0).margin(1e-12));
}

TEST_CASE("cayley_angle takes the principal branch") {
  EllipticSpace s = ellrot::make_space({0.25, 1.0 / 9.0, 1.0});
  CHECK(ellrot::cayley_angle(s, Vec(3)) == 0.0);
  CHECK(ellrot::cayley_angle(s, Vec{2.0, 3.0, 1.0}) == Catch::Approx(-kPi / 3.0).margin(1e-12));

  auto g = support::rng(403);
  for (int it = 0; it < 500; ++it) {
    EllipticSpace s2 = support::random_space(g, 3);
    Vec u = support::random_vec(g, 3);
    double n = ellrot::norm(s2, u);
    if (std::abs(n - 1.0) < 1e-6) continue;
    double expected = std::atan(2.0 * n / (1.0 - n * n));
    CHECK(ellrot::cayley_angle(s2, u) == Catch::Approx(expected).margin(1e-12));
    // The full turning angle satisfies tan(theta/2) = norm.
    double theta = 2.0 * std::atan(n);
    CHECK(std::tan(theta / 2.0) == Catch::Approx(n).margin(1e-9));
  }
}

TEST_CASE("cayley_closed_form matches rodrigues3d through the half-angle") {
  auto g = support::rng(404);
  for (int it = 0; it < 500; ++it) {
    EllipticSpace s = support::random_space(g, 3);
    Vec axis = support::random_unit(g, s);
    double theta = support::uniform(g, 0.01, kPi - 0.01);
    Mat via_cayley = ellrot::cayley_closed_form(s, axis * std::tan(theta / 2.0));
    Mat via_rodrigues = ellrot::rodrigues3d(s, axis, theta);
    CHECK(support::diff_at_scale(via_cayley, via_rodrigues) < 1e-11);
  }
}

TEST_CASE("inverse_cayley undoes the map in both directions") {
  auto g = support::rng(405);
  for (int it = 0; it < 500; ++it) {
    EllipticSpace s = support::random_space(g, 3);
    Vec u = support::random_vec(g, 3, -1.0, 1.0);
    Mat t = ellrot::skew_from_axis(s, u);
    Mat r = ellrot::cayley_map(s, t);
    Mat t_back = ellrot::inverse_cayley(s, r);
    CHECK(support::diff_at_scale(t_back, t) < 1e-9);
    Mat r_back = ellrot::cayley_map(s, t_back);
    CHECK(support::diff_at_scale(r_back, r) < 1e-9);
  }
}

TEST_CASE("inverse_cayley rejects half turns and non-rotations") {
  EllipticSpace s = ellrot::make_space({2.0, 2.0, 1.0});
  Mat half_turn(3, {0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, -1.0});
  try {
    (void)ellrot::inverse_cayley(s, half_turn);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::HalfTurn);
  }
  try {
    (void)ellrot::inverse_cayley(s, Mat::identity(3) * 2.0);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotARotation);
  }
}

TEST_CASE("resolvent determinant shrinks toward the half turn") {
  // det(R + I) = 4 (1 + cos theta) in dimension 3, which explains HalfTurn.
  auto g = support::rng(406);
  for (int it = 0; it < 200; ++it) {
    EllipticSpace s = support::random_space(g, 3);
    Vec u = support::random_unit(g, s);
    double theta = support::uniform(g, -kPi + 0.05, kPi - 0.05);
    Mat r = ellrot::rodrigues3d(s, u, theta);
    double d = ellrot::det(r + Mat::identity(3));
    CHECK(d == Catch::Approx(4.0 * (1.0 + std::cos(theta))).margin(1e-9));
  }
}
