#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "geokit/core/parallel.hpp"
#include "geokit/core/point.hpp"
#include "geokit/core/rng.hpp"

namespace geokit::gen {

using core::Point;
using core::PointSet;
using core::Rng;

enum class Kind { UniformCube, InSphere, OnSphere, OnCube };

inline Kind kind_from_string(const std::string& s) {
  if (s == "U") return Kind::UniformCube;
  if (s == "IS") return Kind::InSphere;
  if (s == "OS") return Kind::OnSphere;
  if (s == "OC") return Kind::OnCube;
  throw std::invalid_argument("unknown distribution '" + s + "'");
}

inline const char* kind_tag(Kind k) {
  switch (k) {
    case Kind::UniformCube: return "U";
    case Kind::InSphere: return "IS";
    case Kind::OnSphere: return "OS";
    default: return "OC";
  }
}

namespace detail {

inline void check_params(std::size_t n, int d) {
  if (n == 0) throw std::invalid_argument("generator: n must be positive");
  if (d < 2) throw std::invalid_argument("generator: dim must be >= 2");
}

/// One standard normal via Box-Muller from two counter-derived uniforms.
inline double gaussian(Rng& rng) {
  double u1 = core::unit_double(rng.next_u64());
  double u2 = rng.next_double();
  // shift into (0,1] so the log is finite
  u1 = 1.0 - u1;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

}  // namespace detail

/// n points i.i.d. uniform in [0, sqrt(n)]^D.
template <int D>
PointSet<D> uniform_cube(std::size_t n, std::uint64_t seed) {
  detail::check_params(n, D);
  double side = std::sqrt(static_cast<double>(n));
  PointSet<D> pts(n);
  core::parallel_for(0, n, [&](std::size_t i) {
    Rng rng = Rng(seed).split(i);
    for (int j = 0; j < D; ++j) pts[i][j] = rng.next_double() * side;
  });
  return pts;
}

/// n points uniform in the origin-centered ball of radius sqrt(n),
/// by rejection from the bounding cube.
template <int D>
PointSet<D> in_sphere(std::size_t n, std::uint64_t seed) {
  detail::check_params(n, D);
  double radius = std::sqrt(static_cast<double>(n));
  PointSet<D> pts(n);
  core::parallel_for(0, n, [&](std::size_t i) {
    Rng rng = Rng(seed).split(i);
    Point<D> p;
    do {
      for (int j = 0; j < D; ++j)
        p[j] = (2.0 * rng.next_double() - 1.0) * radius;
    } while (p.norm() > radius);
    pts[i] = p;
  });
  return pts;
}

/// n points on a spherical shell: direction uniform on the sphere,
/// radius uniform in [0.9, 1.0] * sqrt(n).
template <int D>
PointSet<D> on_sphere(std::size_t n, std::uint64_t seed) {
  detail::check_params(n, D);
  double radius = std::sqrt(static_cast<double>(n));
  PointSet<D> pts(n);
  core::parallel_for(0, n, [&](std::size_t i) {
    Rng rng = Rng(seed).split(i);
    Point<D> dir;
    double norm;
    do {
      for (int j = 0; j < D; ++j) dir[j] = detail::gaussian(rng);
      norm = dir.norm();
    } while (norm == 0.0);
    double r = radius * (0.9 + 0.1 * rng.next_double());
    pts[i] = dir * (r / norm);
  });
  return pts;
}

/// n points in the 0.1-thick inward band of the faces of [0, sqrt(n)]^D:
/// pick a face uniformly, then displace inward by a uniform offset.
template <int D>
PointSet<D> on_cube(std::size_t n, std::uint64_t seed) {
  detail::check_params(n, D);
  double side = std::sqrt(static_cast<double>(n));
  PointSet<D> pts(n);
  core::parallel_for(0, n, [&](std::size_t i) {
    Rng rng = Rng(seed).split(i);
    Point<D> p;
    for (int j = 0; j < D; ++j) p[j] = rng.next_double() * side;
    auto face = rng.next_below(2 * D);
    int axis = static_cast<int>(face) / 2;
    double offset = rng.next_double() * 0.1 * side;
    p[axis] = (face & 1) ? side - offset : offset;
    pts[i] = p;
  });
  return pts;
}

template <int D>
PointSet<D> generate(Kind kind, std::size_t n, std::uint64_t seed) {
  switch (kind) {
    case Kind::UniformCube: return uniform_cube<D>(n, seed);
    case Kind::InSphere: return in_sphere<D>(n, seed);
    case Kind::OnSphere: return on_sphere<D>(n, seed);
    default: return on_cube<D>(n, seed);
  }
}

/// Dataset tag in the Dimension-Name-Size convention, e.g. "3D-U-10M".
inline std::string dataset_tag(Kind kind, std::size_t n, int d) {
  std::string size;
  if (n % 1000000 == 0) size = std::to_string(n / 1000000) + "M";
  else if (n % 1000 == 0) size = std::to_string(n / 1000) + "K";
  else size = std::to_string(n);
  return std::to_string(d) + "D-" + kind_tag(kind) + "-" + size;
}

}  // namespace geokit::gen
