#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "geokit/core/parallel.hpp"
#include "geokit/core/rng.hpp"
#include "geokit/seb/ball.hpp"
#include "geokit/seb/welzl.hpp"

namespace geokit::seb {

/// Furthest point outside the ball per orthant of the ball center.
template <int D>
struct ScanResult {
  static constexpr int kOrthants = 1 << D;
  bool has_outlier = false;
  std::array<PointId, kOrthants> extrema;
  std::array<double, kOrthants> sqdist;

  ScanResult() {
    extrema.fill(kNoPoint);
    sqdist.fill(-1.0);
  }

  std::vector<PointId> extrema_ids() const {
    std::vector<PointId> out;
    for (PointId id : extrema)
      if (id != kNoPoint) out.push_back(id);
    return out;
  }
};

namespace detail {

/// Orthant of p relative to c; a zero component counts as positive.
template <int D>
int orthant_of(const Point<D>& p, const Point<D>& c) {
  int idx = 0;
  for (int j = 0; j < D; ++j)
    if (p[j] - c[j] < 0.0) idx |= 1 << j;
  return idx;
}

template <int D>
void scan_block(const PointSet<D>& pts, std::span<const PointId> ids,
                const Ball<D>& b, double threshold_sq, ScanResult<D>& res) {
  for (PointId id : ids) {
    double d2 = b.sqdist(pts[id]);
    if (d2 <= threshold_sq) continue;
    int o = orthant_of<D>(pts[id], b.center);
    if (d2 > res.sqdist[o] ||
        (d2 == res.sqdist[o] && id < res.extrema[o])) {
      res.sqdist[o] = d2;
      res.extrema[o] = id;
      res.has_outlier = true;
    }
  }
}

template <int D>
void merge_scan(ScanResult<D>& into, const ScanResult<D>& from) {
  for (int o = 0; o < ScanResult<D>::kOrthants; ++o) {
    if (from.extrema[o] == kNoPoint) continue;
    if (from.sqdist[o] > into.sqdist[o] ||
        (from.sqdist[o] == into.sqdist[o] &&
         from.extrema[o] < into.extrema[o])) {
      into.sqdist[o] = from.sqdist[o];
      into.extrema[o] = from.extrema[o];
      into.has_outlier = true;
    }
  }
}

constexpr std::size_t kScanBlock = 8192;

}  // namespace detail

/// Block-parallel scan for the furthest visible point per orthant.
/// Blocks are merged in fixed order, ties to the lowest id, so the
/// result does not depend on scheduling.
template <int D>
ScanResult<D> orthant_scan(const PointSet<D>& pts,
                           std::span<const PointId> ids, const Ball<D>& b) {
  double t = b.radius * (1.0 + kBallEps);
  double threshold_sq = b.valid() ? t * t : -1.0;
  std::size_t n = ids.size();
  if (n <= detail::kScanBlock) {
    ScanResult<D> res;
    detail::scan_block<D>(pts, ids, b, threshold_sq, res);
    return res;
  }
  std::size_t nb = (n + detail::kScanBlock - 1) / detail::kScanBlock;
  std::vector<ScanResult<D>> blocks(nb);
  core::parallel_for(0, nb, [&](std::size_t bi) {
    std::size_t lo = bi * detail::kScanBlock;
    std::size_t hi = std::min(n, lo + detail::kScanBlock);
    detail::scan_block<D>(pts, ids.subspan(lo, hi - lo), b, threshold_sq,
                          blocks[bi]);
  }, 1);
  ScanResult<D> res;
  for (const auto& blk : blocks) detail::merge_scan<D>(res, blk);
  return res;
}

/// Smallest enclosing ball of the previous support plus the scan
/// extrema, solved by serial Welzl over that small candidate set.
template <int D>
Ball<D> seb_update(const PointSet<D>& pts, const Ball<D>& b,
                   const ScanResult<D>& scan) {
  std::vector<PointId> cand = b.support;
  for (PointId id : scan.extrema_ids()) cand.push_back(id);
  std::vector<PointId> boundary;
  return detail::welzl_rec<D>(pts, cand, cand.size(), boundary, true);
}

namespace detail {

template <int D>
Ball<D> initial_ball(const PointSet<D>& pts, std::span<const PointId> ids) {
  std::vector<PointId> prefix(
      ids.begin(), ids.begin() + std::min<std::size_t>(D + 1, ids.size()));
  std::vector<PointId> boundary;
  return welzl_rec<D>(pts, prefix, prefix.size(), boundary, true);
}

inline constexpr std::size_t kMaxScanRounds = 100000;

/// Orthant-scan iteration to a fixed point, starting from b.
template <int D>
Ball<D> scan_to_convergence(const PointSet<D>& pts,
                            std::span<const PointId> ids, Ball<D> b,
                            std::size_t* rounds = nullptr) {
  for (std::size_t it = 0; it < kMaxScanRounds; ++it) {
    ScanResult<D> scan = orthant_scan<D>(pts, ids, b);
    if (rounds) ++*rounds;
    if (!scan.has_outlier) return b;
    b = seb_update<D>(pts, b, scan);
  }
  throw std::logic_error("orthant scan failed to converge");
}

}  // namespace detail

/// Larsson-style smallest enclosing ball: scan all points per round,
/// grow the ball from the per-orthant extrema until no point is
/// outside.
template <int D>
Ball<D> seb_orthant(const PointSet<D>& pts) {
  if (pts.empty()) throw std::invalid_argument("seb_orthant: empty input");
  std::vector<PointId> ids(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    ids[i] = static_cast<PointId>(i);
  Ball<D> b = detail::initial_ball<D>(pts, ids);
  return detail::scan_to_convergence<D>(pts, ids, b);
}

struct SamplingStats {
  std::size_t phase1_scanned = 0;  // points examined before phase 2
  std::size_t phase2_rounds = 0;
};

/// Sampling-accelerated smallest enclosing ball: walk constant-sized
/// segments of a random permutation, updating the ball until a segment
/// has no outlier, then finish with full orthant-scan rounds.
template <int D>
Ball<D> seb_sampling(const PointSet<D>& pts, std::size_t segment = 1024,
                     std::uint64_t seed = 0, SamplingStats* stats = nullptr) {
  if (pts.empty()) throw std::invalid_argument("seb_sampling: empty input");
  if (segment == 0) segment = 1;
  auto perm = core::random_permutation(pts.size(), core::Rng(seed));
  Ball<D> b = detail::initial_ball<D>(pts, perm);

  std::size_t scanned = 0;
  while (scanned < perm.size()) {
    std::size_t hi = std::min(perm.size(), scanned + segment);
    ScanResult<D> scan = orthant_scan<D>(
        pts, std::span<const PointId>(perm).subspan(scanned, hi - scanned), b);
    scanned = hi;
    if (!scan.has_outlier) break;
    b = seb_update<D>(pts, b, scan);
  }
  if (stats) stats->phase1_scanned = scanned;

  std::size_t rounds = 0;
  b = detail::scan_to_convergence<D>(pts, perm, b, &rounds);
  if (stats) stats->phase2_rounds = rounds;
  return b;
}

}  // namespace geokit::seb
