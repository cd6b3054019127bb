// Walks through the four ways to build the same elliptical rotation and
// checks them against each other.

#include <ellrot/ellrot.hpp>

#include <cmath>
#include <cstdio>

using ellrot::EllipticSpace;
using ellrot::Mat;
using ellrot::Vec;

namespace {

void print_matrix(const char* label, const Mat& m) {
  std::printf("%s\n", label);
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) std::printf(" % .6f", m(i, j));
    std::printf("\n");
  }
}

}  // namespace

int main() {
  // The ellipsoid 2x^2 + 2y^2 + z^2 = 25, with two points of equal B-norm.
  EllipticSpace s = ellrot::make_space({2.0, 2.0, 1.0});
  Vec x{0.0, 0.0, 5.0};
  Vec y{2.0, 2.0, 3.0};

  auto sol = ellrot::solve(s, x, y);
  std::printf("axis (%g, %g, %g), cos %g, sin %g\n", sol.axis[0], sol.axis[1], sol.axis[2],
              sol.cos_angle, sol.sin_angle);

  print_matrix("rodrigues:", sol.r_rodrigues);
  print_matrix("householder pair:", sol.r_householder);
  print_matrix("quaternion:", sol.r_quaternion);
  if (sol.r_cayley) print_matrix("cayley:", *sol.r_cayley);
  std::printf("max pairwise difference: %.3e\n", sol.residuals.max_pairwise);

  // The same rotation, built directly from axis and angle.
  double theta = std::atan2(sol.sin_angle, sol.cos_angle);
  Mat direct = ellrot::rodrigues3d(s, sol.axis, theta);
  auto report = ellrot::verify(s, direct);
  std::printf("direct build verifies as %s, det %.12f, residual %.3e\n",
              ellrot::to_string(report.matrix_class), report.det,
              report.orthogonality_residual);

  // Quaternions give the same action on vectors.
  auto q = ellrot::from_axis_angle(s, sol.axis, theta);
  Vec image = ellrot::rotate_vector(q, x);
  std::printf("quaternion sandwich sends x to (%g, %g, %g)\n", image[0], image[1], image[2]);
  return 0;
}
