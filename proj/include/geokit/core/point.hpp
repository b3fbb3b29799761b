#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace geokit::core {

template <int D>
using Point = Eigen::Matrix<double, D, 1>;

/// A point set in dimension D; a point's id is its position.
template <int D>
using PointSet = std::vector<Point<D>>;

using PointId = std::uint32_t;
inline constexpr PointId kNoPoint = static_cast<PointId>(-1);

/// Instantiates f.operator()<D>() for a runtime dimension.
template <class F>
decltype(auto) dispatch_dim(int d, F&& f) {
  switch (d) {
    case 2: return f.template operator()<2>();
    case 3: return f.template operator()<3>();
    case 4: return f.template operator()<4>();
    case 5: return f.template operator()<5>();
    case 6: return f.template operator()<6>();
    case 7: return f.template operator()<7>();
    case 8: return f.template operator()<8>();
    default:
      throw std::invalid_argument("unsupported dimension " + std::to_string(d));
  }
}

}  // namespace geokit::core
