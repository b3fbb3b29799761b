#pragma once

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "geokit/core/point.hpp"

namespace geokit::core {

/// Scale factor for the orientation zero band. The band is relative to
/// the magnitude of the inputs so that rescaling a configuration does
/// not change which determinants count as zero.
inline constexpr double kOrientEps = 1e-12;

/// Sign of det(b-a, c-a, p-a): +1 if p is on the positive side of the
/// oriented plane (a,b,c), 0 within the tolerance band, -1 otherwise.
inline int orient3d(const Point<3>& a, const Point<3>& b, const Point<3>& c,
                    const Point<3>& p) {
  Eigen::Matrix3d m;
  m.row(0) = (b - a).transpose();
  m.row(1) = (c - a).transpose();
  m.row(2) = (p - a).transpose();
  double det = m.determinant();
  double s = std::max(
      {a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff(),
       c.cwiseAbs().maxCoeff(), p.cwiseAbs().maxCoeff()});
  double tol = kOrientEps * s * s * s;
  if (det > tol) return 1;
  if (det < -tol) return -1;
  return 0;
}

/// Runtime-dimension wrapper; rejects inputs that are not 3d.
inline int orient3d(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                    const Eigen::VectorXd& c, const Eigen::VectorXd& p) {
  if (a.size() != 3 || b.size() != 3 || c.size() != 3 || p.size() != 3)
    throw std::invalid_argument("orient3d: points must be 3-dimensional");
  return orient3d(Point<3>(a), Point<3>(b), Point<3>(c), Point<3>(p));
}

/// 2d analogue: sign of cross(b-a, p-a); +1 means p lies left of a->b.
inline int orient2d(const Point<2>& a, const Point<2>& b, const Point<2>& p) {
  double det = (b.x() - a.x()) * (p.y() - a.y()) -
               (b.y() - a.y()) * (p.x() - a.x());
  double s = std::max({a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff(),
                       p.cwiseAbs().maxCoeff()});
  double tol = kOrientEps * s * s;
  if (det > tol) return 1;
  if (det < -tol) return -1;
  return 0;
}

/// Raw 3d orientation determinant; callers compare it against
/// orient_tol3 of the same inputs when they need the signed magnitude.
inline double orient3d_value(const Point<3>& a, const Point<3>& b,
                             const Point<3>& c, const Point<3>& p) {
  Eigen::Matrix3d m;
  m.row(0) = (b - a).transpose();
  m.row(1) = (c - a).transpose();
  m.row(2) = (p - a).transpose();
  return m.determinant();
}

inline double orient_tol3(double max_abs_coord) {
  return kOrientEps * max_abs_coord * max_abs_coord * max_abs_coord;
}

inline double orient_tol2(double max_abs_coord) {
  return kOrientEps * max_abs_coord * max_abs_coord;
}

}  // namespace geokit::core
