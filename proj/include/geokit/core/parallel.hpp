#pragma once

#include <atomic>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <tbb/blocked_range.h>
#include <tbb/global_control.h>
#include <tbb/parallel_for.h>
#include <tbb/parallel_invoke.h>
#include <tbb/parallel_reduce.h>
#include <tbb/task_arena.h>

namespace geokit::core {

/// Number of workers the scheduler may use right now (respects any
/// active global_control cap).
inline int num_workers() {
  auto cap = tbb::global_control::active_value(
      tbb::global_control::max_allowed_parallelism);
  int hw = tbb::this_task_arena::max_concurrency();
  return static_cast<int>(cap < static_cast<std::size_t>(hw) ? cap : hw);
}

template <class F>
void parallel_for(std::size_t begin, std::size_t end, F&& f,
                  std::size_t grain = 1024) {
  if (end <= begin) return;
  if (end - begin <= grain) {
    for (std::size_t i = begin; i < end; ++i) f(i);
    return;
  }
  tbb::parallel_for(tbb::blocked_range<std::size_t>(begin, end, grain),
                    [&](const tbb::blocked_range<std::size_t>& r) {
                      for (std::size_t i = r.begin(); i != r.end(); ++i) f(i);
                    });
}

template <class F, class G>
void parallel_invoke(F&& f, G&& g) {
  tbb::parallel_invoke(std::forward<F>(f), std::forward<G>(g));
}

namespace detail {
constexpr std::size_t kPackBlock = 2048;
}

/// Order-preserving parallel filter. Output equals the serial filter
/// element-for-element regardless of scheduling.
template <class T, class Pred>
std::vector<T> parallel_pack(std::span<const T> items, Pred&& keep) {
  std::size_t n = items.size();
  std::vector<T> out;
  if (n <= detail::kPackBlock) {
    for (std::size_t i = 0; i < n; ++i)
      if (keep(items[i])) out.push_back(items[i]);
    return out;
  }
  std::size_t nb = (n + detail::kPackBlock - 1) / detail::kPackBlock;
  std::vector<std::size_t> offsets(nb + 1, 0);
  parallel_for(0, nb, [&](std::size_t b) {
    std::size_t lo = b * detail::kPackBlock;
    std::size_t hi = lo + detail::kPackBlock < n ? lo + detail::kPackBlock : n;
    std::size_t cnt = 0;
    for (std::size_t i = lo; i < hi; ++i) cnt += keep(items[i]) ? 1 : 0;
    offsets[b + 1] = cnt;
  }, 1);
  for (std::size_t b = 0; b < nb; ++b) offsets[b + 1] += offsets[b];
  out.resize(offsets[nb]);
  parallel_for(0, nb, [&](std::size_t b) {
    std::size_t lo = b * detail::kPackBlock;
    std::size_t hi = lo + detail::kPackBlock < n ? lo + detail::kPackBlock : n;
    std::size_t w = offsets[b];
    for (std::size_t i = lo; i < hi; ++i)
      if (keep(items[i])) out[w++] = items[i];
  }, 1);
  return out;
}

template <class T, class Pred>
std::vector<T> parallel_pack(const std::vector<T>& items, Pred&& keep) {
  return parallel_pack(std::span<const T>(items), std::forward<Pred>(keep));
}

/// Index of a maximum-score item; ties go to the smallest index, so the
/// result does not depend on how the reduction tree is shaped.
template <class Score>
std::size_t parallel_max_by_index(std::size_t n, Score&& score) {
  if (n == 0) throw std::invalid_argument("parallel_max_by: empty input");
  using Best = std::pair<double, std::size_t>;
  auto combine = [](Best a, Best b) {
    if (a.first > b.first) return a;
    if (b.first > a.first) return b;
    return a.second < b.second ? a : b;
  };
  Best init{-std::numeric_limits<double>::infinity(),
            std::numeric_limits<std::size_t>::max()};
  Best best = tbb::parallel_reduce(
      tbb::blocked_range<std::size_t>(0, n, 2048), init,
      [&](const tbb::blocked_range<std::size_t>& r, Best acc) {
        for (std::size_t i = r.begin(); i != r.end(); ++i)
          acc = combine(acc, Best{score(i), i});
        return acc;
      },
      combine);
  return best.second;
}

template <class Seq, class Score>
std::size_t parallel_max_by(const Seq& items, Score&& score) {
  return parallel_max_by_index(items.size(),
                               [&](std::size_t i) { return score(items[i]); });
}

/// Linearizable priority-write cell: after any set of concurrent
/// write_min calls, the cell holds the minimum value written.
class MinCell {
 public:
  static constexpr std::uint64_t kEmpty =
      std::numeric_limits<std::uint64_t>::max();

  MinCell() = default;
  MinCell(const MinCell& o) : v_(o.v_.load(std::memory_order_relaxed)) {}
  MinCell& operator=(const MinCell& o) {
    v_.store(o.v_.load(std::memory_order_relaxed), std::memory_order_relaxed);
    return *this;
  }

  void write_min(std::uint64_t x) {
    std::uint64_t cur = v_.load(std::memory_order_relaxed);
    while (x < cur &&
           !v_.compare_exchange_weak(cur, x, std::memory_order_acq_rel)) {
    }
  }

  std::uint64_t load() const { return v_.load(std::memory_order_acquire); }
  void reset() { v_.store(kEmpty, std::memory_order_release); }

 private:
  std::atomic<std::uint64_t> v_{kEmpty};
};

}  // namespace geokit::core
