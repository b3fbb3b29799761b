#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "geokit/core/point.hpp"

namespace geokit::kdtree {

using core::PointId;

/// Accumulator for the k nearest entries seen so far, over a 2k-slot
/// buffer. Inserts append; when the buffer is full it is partitioned
/// around the k-th nearest element and the upper k are discarded, which
/// makes inserts amortized constant time. Distance ties break toward
/// the smaller id so extraction is a pure function of the inserted set.
class KnnBuffer {
 public:
  using Entry = std::pair<double, PointId>;  // (squared distance, id)

  explicit KnnBuffer(std::size_t k) : k_(k) { entries_.reserve(2 * k); }

  std::size_t k() const { return k_; }
  std::size_t count() const { return entries_.size(); }
  std::size_t compactions() const { return compactions_; }

  /// Upper bound on the k-th nearest squared distance (exact right
  /// after a compaction, infinite before the first one).
  double bound() const { return bound_.first; }

  void insert(PointId id, double sqdist) {
    Entry e{sqdist, id};
    if (e >= bound_) return;
    if (entries_.size() == 2 * k_) compact();
    if (e < bound_) entries_.push_back(e);
  }

  /// The k nearest entries inserted so far, sorted by distance.
  std::vector<Entry> extract() {
    std::sort(entries_.begin(), entries_.end());
    if (entries_.size() > k_) entries_.resize(k_);
    return entries_;
  }

  void reset() {
    entries_.clear();
    bound_ = {std::numeric_limits<double>::infinity(), kNoPoint};
    compactions_ = 0;
  }

 private:
  void compact() {
    std::nth_element(entries_.begin(), entries_.begin() + (k_ - 1),
                     entries_.end());
    bound_ = entries_[k_ - 1];
    entries_.resize(k_);
    ++compactions_;
  }

  std::size_t k_;
  std::vector<Entry> entries_;
  Entry bound_{std::numeric_limits<double>::infinity(), core::kNoPoint};
  std::size_t compactions_ = 0;
};

}  // namespace geokit::kdtree
