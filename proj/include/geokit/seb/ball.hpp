#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "geokit/core/point.hpp"

namespace geokit::seb {

using core::kNoPoint;
using core::Point;
using core::PointId;
using core::PointSet;

/// Relative tolerance for the outside-the-ball test and termination.
inline constexpr double kBallEps = 1e-9;

template <int D>
struct Ball {
  Point<D> center = Point<D>::Zero();
  double radius = -1.0;  // radius < 0 encloses nothing
  std::vector<PointId> support;

  bool valid() const { return radius >= 0.0; }

  double sqdist(const Point<D>& p) const { return (p - center).squaredNorm(); }

  /// True if p lies strictly outside the (1 + eps)-inflated ball.
  bool outside(const Point<D>& p) const {
    if (!valid()) return true;
    double t = radius * (1.0 + kBallEps);
    return sqdist(p) > t * t;
  }
};

/// Smallest ball with every point of S on its boundary: the circumball
/// of S with center in S's affine hull. Affinely dependent points are
/// dropped from the support and the solve retried without them.
template <int D>
Ball<D> ball_from_support(const PointSet<D>& pts,
                          std::span<const PointId> ids) {
  if (ids.empty())
    throw std::invalid_argument("ball_from_support: empty support");

  Ball<D> b;
  const Point<D>& s0 = pts[ids[0]];
  if (ids.size() == 1) {
    b.center = s0;
    b.radius = 0.0;
    b.support.assign(ids.begin(), ids.end());
    return b;
  }

  // Keep a maximal affinely independent subset, dropping redundant rows.
  Eigen::Matrix<double, Eigen::Dynamic, D> rows(ids.size() - 1, D);
  std::vector<PointId> kept;
  kept.push_back(ids[0]);
  int m = 0;
  for (std::size_t i = 1; i < ids.size(); ++i) {
    rows.row(m) = (pts[ids[i]] - s0).transpose();
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(
        rows.topRows(m + 1).transpose());
    if (qr.rank() == m + 1) {
      ++m;
      kept.push_back(ids[i]);
    }
  }

  if (m == 0) {
    // every point coincides with s0
    b.center = s0;
    b.radius = 0.0;
    b.support = {ids[0]};
    return b;
  }

  // Equidistance constraints: 2 A A^T mu = |s_i - s0|^2, center = s0 + A^T mu.
  Eigen::MatrixXd gram = 2.0 * rows.topRows(m) * rows.topRows(m).transpose();
  Eigen::VectorXd rhs(m);
  for (int i = 0; i < m; ++i) rhs[i] = rows.row(i).squaredNorm();
  Eigen::VectorXd mu = gram.ldlt().solve(rhs);
  b.center = s0 + rows.topRows(m).transpose() * mu;
  b.radius = (s0 - b.center).norm();
  b.support = std::move(kept);
  return b;
}

}  // namespace geokit::seb
