#pragma once

#include <array>
#include <cmath>

namespace walker {

using Vec3 = std::array<double, 3>;
using Vec4 = std::array<double, 4>;
using Mat3 = std::array<std::array<double, 3>, 3>;
using Mat4 = std::array<std::array<double, 4>, 4>;

inline Mat3 zero3() { return Mat3{}; }
inline Mat4 zero4() { return Mat4{}; }

inline Mat3 identity3() {
  Mat3 m{};
  for (int i = 0; i < 3; ++i) m[i][i] = 1.0;
  return m;
}

inline Mat4 identity4() {
  Mat4 m{};
  for (int i = 0; i < 4; ++i) m[i][i] = 1.0;
  return m;
}

inline Mat3 matmul(const Mat3& a, const Mat3& b) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      for (int j = 0; j < 3; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

inline Mat4 matmul(const Mat4& a, const Mat4& b) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

inline Vec3 matvec(const Mat3& a, const Vec3& x) {
  Vec3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i] += a[i][j] * x[j];
  return r;
}

inline Vec4 matvec(const Mat4& a, const Vec4& x) {
  Vec4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i] += a[i][j] * x[j];
  return r;
}

inline Mat3 transpose(const Mat3& a) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[j][i];
  return r;
}

inline Mat3 scaled(const Mat3& a, double s) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[i][j] * s;
  return r;
}

inline double frobenius_norm(const Mat3& a) {
  double s = 0;
  for (const auto& row : a)
    for (double v : row) s += v * v;
  return std::sqrt(s);
}

inline double frobenius_norm(const Mat4& a) {
  double s = 0;
  for (const auto& row : a)
    for (double v : row) s += v * v;
  return std::sqrt(s);
}

inline double max_abs_entry(const Mat3& a) {
  double s = 0;
  for (const auto& row : a)
    for (double v : row) s = std::max(s, std::fabs(v));
  return s;
}

inline double max_abs_entry(const Mat4& a) {
  double s = 0;
  for (const auto& row : a)
    for (double v : row) s = std::max(s, std::fabs(v));
  return s;
}

inline double dot(const Vec4& x, const Vec4& y) {
  return x[0] * y[0] + x[1] * y[1] + x[2] * y[2] + x[3] * y[3];
}

inline double euclidean_norm(const Vec4& x) { return std::sqrt(dot(x, x)); }

}  // namespace walker
