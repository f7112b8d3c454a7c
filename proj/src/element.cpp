#include "topress/element.hpp"

#include <string>

#include "topress/common.hpp"

namespace topress {

namespace {

// Lower triangle of 144*(1+nu)*(2nu-1)*Ke, column by column: A + nu*B.
constexpr int kKeA[kStiffnessLowerSize] = {
    -32,  -6,  -6,   8,   6,   6,  10,   6,   3,  -4,  -6,  -3,  -4,  -3,  -6,  10,   3,   6,   8,   3,
      3,   4,  -3,  -3, -32,  -6,  -6,  -4,  -3,   6,  10,   3,   6,   8,   6,  -3,  -4,  -6,  -3,   4,
     -3,   3,   8,   3,   3,  10,   6, -32,  -6,  -3,  -4,  -3,  -3,   4,  -3,  -6,  -4,   6,   6,   8,
      6,   3,  10,   3,   3,   8,   3,   6,  10, -32,   6,   6,  -4,   6,   3,  10,  -6,  -3,  10,  -3,
     -6,  -4,   3,   6,   4,   3,   3,   8,  -3,  -3, -32,  -6,  -6,   8,   6,  -6,  10,   3,   3,   4,
     -3,   3,  -4,  -6,  -3,  10,   6,  -3,   8,   3, -32,   3,  -6,  -4,   3,  -3,   4,  -6,   3,  10,
     -6,   6,   8,  -3,   6,  10,  -3,   3,   8, -32,  -6,   6,   8,   6,  -6,   8,   3,  -3,   4,  -3,
      3,  -4,  -3,   6,  10,   3,  -6, -32,   6,  -6,  -4,   3,   3,   8,  -3,   3,  10,  -6,  -3,  -4,
      6,  -3,   4,   3, -32,   6,   3,  -4,  -3,  -3,   8,  -3,  -6,  10,  -6,  -6,   8,  -6,  -3,  10,
    -32,   6,  -6,   4,   3,  -3,   8,  -3,   3,  10,  -3,   6,  -4,   3,  -6, -32,   6,  -3,  10,  -6,
     -3,   8,  -3,   3,   4,   3,   3,  -4,   6, -32,   3,  -6,  10,   3,  -3,   8,   6,  -3,  10,   6,
     -6,   8, -32,  -6,   6,   8,   6,  -6,  10,   6,  -3,  -4,  -6,   3, -32,   6,  -6,  -4,   3,   6,
     10,  -3,   6,   8,  -6, -32,   6,   3,  -4,   3,   3,   4,   3,   6,  -4, -32,   6,  -6,  -4,   6,
     -3,  10,  -6,   3, -32,   6,  -6,   8,  -6,  -6,  10,  -3, -32,  -3,   6,  -4,  -3,   3,   4, -32,
     -6,  -6,   8,   6,   6, -32,  -6,  -6,  -4,  -3, -32,  -6,  -3,  -4, -32,   6,   6, -32,  -6, -32,
};

constexpr int kKeB[kStiffnessLowerSize] = {
     48,   0,   0,   0, -24, -24, -12,   0, -12,   0,  24,   0,   0,   0,  24, -12, -12,   0, -12,   0,
      0, -12,  12,  12,  48,   0,  24,   0,   0,   0, -12, -12, -24,   0, -24,   0,   0,  24,  12, -12,
     12,   0, -12,   0, -12, -12,   0,  48,  24,   0,   0,  12,  12, -12,   0,  24,   0, -24, -24,   0,
      0, -12, -12,   0,   0, -12, -12,   0, -12,  48,   0,   0,   0, -24,   0, -12,   0,  12, -12,  12,
      0,   0,   0, -24, -12, -12, -12, -12,   0,   0,  48,   0,  24,   0, -24,   0, -12, -12, -12, -12,
     12,   0,   0,  24,  12, -12,   0,   0, -12,   0,  48,   0,  24,   0, -12,  12, -12,   0, -12, -12,
     24, -24,   0,  12,   0, -12,   0,   0, -12,  48,   0,   0,   0, -24,  24, -12,   0,   0, -12,  12,
    -12,   0,   0, -24, -12, -12,   0,  48,   0,  24,   0,   0,   0, -12,   0, -12, -12,   0,   0,   0,
    -24,  12, -12, -12,  48, -24,   0,   0,   0,   0, -12,  12,   0, -12,  24,  24,   0,   0,  12, -12,
     48,   0,   0, -12, -12,  12, -12,   0,   0, -12,  12,   0,   0,   0,  24,  48,   0,  12, -12,   0,
      0, -12,   0, -12, -12, -12,   0,   0, -24,  48, -12,   0, -12,   0,   0, -12,   0,  12, -12, -24,
     24,   0,  48,   0,   0,   0, -24,  24, -12,   0,  12,   0,  24,   0,  48,   0,  24,   0,   0,   0,
    -12,  12, -24,   0,  24,  48, -24,   0,   0, -12, -12, -12,   0, -24,   0,  48,   0,   0,   0, -24,
      0, -12,   0, -12,  48,   0,  24,   0,  24,   0, -12,  12,  48,   0, -24,   0,  12, -12, -12,  48,
      0,   0,   0, -24, -24,  48,   0,  24,   0,   0,  48,  24,   0,   0,  48,   0,   0,  48,   0,  48,
};

Mat8 expand_lower8(const double* lower, double scale) {
  Mat8 m;
  int k = 0;
  for (int j = 0; j < 8; ++j) {
    for (int i = j; i < 8; ++i) {
      m(i, j) = m(j, i) = lower[k++] * scale;
    }
  }
  return m;
}

}  // namespace

const Mat8& darcy_matrix() {
  static const Mat8 kp = [] {
    constexpr double lower[36] = {4, 0, -1, 0, 0, -1, -1, -1, 4, 0, -1, -1, 0, -1, -1, 4, 0, -1,
                                   -1, 0, -1, 4, -1, -1, -1, 0, 4, 0, -1, 0, 4, 0, -1, 4, 0, 4};
    return expand_lower8(lower, 1.0 / 12.0);
  }();
  return kp;
}

const Mat8& drainage_matrix() {
  static const Mat8 kdp = [] {
    constexpr double lower[36] = {8, 4, 2, 4, 4, 2, 1, 2, 8, 4, 2, 2, 4, 2, 1, 8, 4, 1,
                                   2, 4, 2, 8, 2, 1, 2, 4, 8, 4, 2, 4, 8, 4, 2, 8, 4, 8};
    return expand_lower8(lower, 1.0 / 216.0);
  }();
  return kdp;
}

const Mat24x8& transformation_matrix() {
  static const Mat24x8 te = [] {
    Mat24x8 m;
    // clang-format off
    m << -4,  4,  2, -2, -2,  2,  1, -1,
         -4, -2,  2,  4, -2, -1,  1,  2,
         -4, -2, -1, -2,  4,  2,  1,  2,
         -4,  4,  2, -2, -2,  2,  1, -1,
         -2, -4,  4,  2, -1, -2,  2,  1,
         -2, -4, -2, -1,  2,  4,  2,  1,
         -2,  2,  4, -4, -1,  1,  2, -2,
         -2, -4,  4,  2, -1, -2,  2,  1,
         -1, -2, -4, -2,  1,  2,  4,  2,
         -2,  2,  4, -4, -1,  1,  2, -2,
         -4, -2,  2,  4, -2, -1,  1,  2,
         -2, -1, -2, -4,  2,  1,  2,  4,
         -2,  2,  1, -1, -4,  4,  2, -2,
         -2, -1,  1,  2, -4, -2,  2,  4,
         -4, -2, -1, -2,  4,  2,  1,  2,
         -2,  2,  1, -1, -4,  4,  2, -2,
         -1, -2,  2,  1, -2, -4,  4,  2,
         -2, -4, -2, -1,  2,  4,  2,  1,
         -1,  1,  2, -2, -2,  2,  4, -4,
         -1, -2,  2,  1, -2, -4,  4,  2,
         -1, -2, -4, -2,  1,  2,  4,  2,
         -1,  1,  2, -2, -2,  2,  4, -4,
         -2, -1,  1,  2, -4, -2,  2,  4,
         -2, -1, -2, -4,  2,  1,  2,  4;
    // clang-format on
    return Mat24x8(m / 72.0);
  }();
  return te;
}

Eigen::Matrix<double, kStiffnessLowerSize, 1> stiffness_lower(double nu) {
  if (!(nu >= 0.0 && nu < 0.5)) {
    throw InvalidArgument("Poisson ratio must satisfy 0 <= nu < 0.5, got " + std::to_string(nu));
  }
  const double scale = 1.0 / (1.0 + nu) / (2.0 * nu - 1.0) / 144.0;
  Eigen::Matrix<double, kStiffnessLowerSize, 1> v;
  for (int k = 0; k < kStiffnessLowerSize; ++k) v[k] = scale * (kKeA[k] + nu * kKeB[k]);
  return v;
}

Mat24 stiffness_matrix(double nu) {
  const auto lower = stiffness_lower(nu);
  Mat24 ke;
  int k = 0;
  for (int j = 0; j < 24; ++j) {
    for (int i = j; i < 24; ++i) {
      ke(i, j) = ke(j, i) = lower[k++];
    }
  }
  return ke;
}

}  // namespace topress
