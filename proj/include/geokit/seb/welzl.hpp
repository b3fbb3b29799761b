#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "geokit/core/parallel.hpp"
#include "geokit/core/rng.hpp"
#include "geokit/seb/ball.hpp"

namespace geokit::seb {

struct WelzlOpts {
  bool mtf = false;    // move encountered outliers to the front
  bool pivot = false;  // process the globally furthest point instead
};

/// Prefix size below which the parallel algorithm falls back to the
/// sequential one.
inline constexpr std::size_t kWelzlSerialCutoff = 500000;

namespace detail {

/// Sequential Welzl over order[0:end), with the points in `boundary`
/// forced onto the ball surface. Mutates `order` when mtf is set.
template <int D>
Ball<D> welzl_rec(const PointSet<D>& pts, std::vector<PointId>& order,
                  std::size_t end, std::vector<PointId>& boundary, bool mtf) {
  Ball<D> b;
  if (!boundary.empty()) b = ball_from_support<D>(pts, boundary);
  if (boundary.size() >= D + 1) return b;
  for (std::size_t i = 0; i < end; ++i) {
    if (b.outside(pts[order[i]])) {
      boundary.push_back(order[i]);
      b = welzl_rec<D>(pts, order, i, boundary, mtf);
      boundary.pop_back();
      if (mtf)
        std::rotate(order.begin(), order.begin() + i, order.begin() + i + 1);
    }
  }
  return b;
}

template <int D>
Ball<D> welzl_pivot(const PointSet<D>& pts, std::vector<PointId>& order,
                    bool mtf) {
  std::vector<PointId> boundary;
  Ball<D> b = welzl_rec<D>(pts, order, std::min<std::size_t>(2, order.size()),
                           boundary, mtf);
  for (;;) {
    // furthest point from the current center; ties to the lowest index
    std::size_t k = core::parallel_max_by_index(
        order.size(), [&](std::size_t i) { return b.sqdist(pts[order[i]]); });
    if (!b.outside(pts[order[k]])) return b;
    boundary.assign(1, order[k]);
    b = welzl_rec<D>(pts, order, k, boundary, mtf);
    boundary.clear();
    std::rotate(order.begin(), order.begin() + k, order.begin() + k + 1);
  }
}

}  // namespace detail

/// Exact smallest enclosing ball by the randomized incremental
/// algorithm; points are processed in a seed-determined random order.
template <int D>
Ball<D> welzl_seq(const PointSet<D>& pts, WelzlOpts opts = {},
                  std::uint64_t seed = 0) {
  if (pts.empty()) throw std::invalid_argument("welzl_seq: empty input");
  auto order = core::random_permutation(pts.size(), core::Rng(seed));
  if (opts.pivot) return detail::welzl_pivot<D>(pts, order, opts.mtf);
  std::vector<PointId> boundary;
  return detail::welzl_rec<D>(pts, order, order.size(), boundary, opts.mtf);
}

namespace detail {

/// Parallel Welzl on order[0:end) with a forced boundary set: prefixes
/// of doubling size are scanned in parallel for the earliest point
/// outside the current ball, which is then forced onto the boundary of
/// a recursively recomputed ball.
template <int D>
Ball<D> welzl_par_rec(const PointSet<D>& pts, std::vector<PointId>& order,
                      std::size_t end, std::vector<PointId>& boundary,
                      const WelzlOpts& opts) {
  if (boundary.size() >= D + 1) return ball_from_support<D>(pts, boundary);
  if (end <= kWelzlSerialCutoff) {
    if (opts.pivot && boundary.empty() && end == order.size()) {
      return welzl_pivot<D>(pts, order, opts.mtf);
    }
    return welzl_rec<D>(pts, order, end, boundary, opts.mtf);
  }

  Ball<D> b = welzl_par_rec<D>(pts, order, kWelzlSerialCutoff, boundary, opts);
  std::size_t scanned = kWelzlSerialCutoff;
  while (scanned < end) {
    std::size_t hi = std::min(end, 2 * scanned);
    // earliest outlier in [scanned, hi), as a min-index reduction
    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    std::size_t found = tbb::parallel_reduce(
        tbb::blocked_range<std::size_t>(scanned, hi, 4096), kNone,
        [&](const tbb::blocked_range<std::size_t>& r, std::size_t acc) {
          for (std::size_t i = r.begin(); i != r.end() && i < acc; ++i)
            if (b.outside(pts[order[i]])) return std::min(acc, i);
          return acc;
        },
        [](std::size_t a, std::size_t c) { return std::min(a, c); });
    if (found == kNone) {
      scanned = hi;
      continue;
    }
    std::size_t i = found;
    if (opts.pivot) {
      // process the furthest point of the whole prefix instead; it is
      // at least as far out as the earliest outlier
      i = core::parallel_max_by_index(
          end, [&](std::size_t j) { return b.sqdist(pts[order[j]]); });
    }
    boundary.push_back(order[i]);
    b = welzl_par_rec<D>(pts, order, i, boundary, opts);
    boundary.pop_back();
    if (opts.mtf)
      std::rotate(order.begin(), order.begin() + i, order.begin() + i + 1);
    scanned = i + 1;
  }
  return b;
}

}  // namespace detail

/// Parallel Welzl: prefixes below the serial cutoff are handled by
/// welzl_seq; larger prefixes are scanned in parallel.
template <int D>
Ball<D> welzl_parallel(const PointSet<D>& pts, WelzlOpts opts = {},
                       std::uint64_t seed = 0) {
  if (pts.empty()) throw std::invalid_argument("welzl_parallel: empty input");
  auto order = core::random_permutation(pts.size(), core::Rng(seed));
  std::vector<PointId> boundary;
  return detail::welzl_par_rec<D>(pts, order, order.size(), boundary, opts);
}

}  // namespace geokit::seb
