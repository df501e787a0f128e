#include "reltrace/surjection.hpp"

#include <algorithm>
#include <numeric>

#include "reltrace/errors.hpp"

namespace reltrace {

MonotoneSurjection::MonotoneSurjection(std::vector<std::size_t> counts) : counts_(std::move(counts)) {
  if (std::any_of(counts_.begin(), counts_.end(), [](std::size_t c) { return c == 0; }))
    throw DomainError("surjection counts must be positive");
}

MonotoneSurjection MonotoneSurjection::identity(std::size_t points) {
  return MonotoneSurjection(std::vector<std::size_t>(points, 1));
}

MonotoneSurjection MonotoneSurjection::from_map(const std::vector<std::size_t>& image) {
  std::vector<std::size_t> counts;
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (i == 0) {
      if (image[0] != 0) throw DomainError("surjection must hit 0 first");
      counts.push_back(1);
    } else if (image[i] == image[i - 1]) {
      ++counts.back();
    } else if (image[i] == image[i - 1] + 1) {
      counts.push_back(1);
    } else {
      throw DomainError("map is not a monotone surjection");
    }
  }
  return MonotoneSurjection(std::move(counts));
}

std::size_t MonotoneSurjection::source_points() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), std::size_t{0});
}

std::vector<std::size_t> MonotoneSurjection::as_map() const {
  std::vector<std::size_t> out;
  out.reserve(source_points());
  for (std::size_t i = 0; i < counts_.size(); ++i) out.insert(out.end(), counts_[i], i);
  return out;
}

MonotoneSurjection compose(const MonotoneSurjection& outer, const MonotoneSurjection& inner) {
  if (inner.target_points() != outer.source_points())
    throw DomainError("composed surjections do not match");
  const auto o = outer.as_map();
  const auto in = inner.as_map();
  std::vector<std::size_t> image;
  image.reserve(in.size());
  for (std::size_t x : in) image.push_back(o[x]);
  return MonotoneSurjection::from_map(image);
}

MonotoneSurjection surjection_meet(const MonotoneSurjection& f, const MonotoneSurjection& g) {
  if (f.target_points() != g.target_points()) throw DomainError("surjections have different targets");
  std::vector<std::size_t> counts(f.target_points());
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] = std::max(f.counts()[i], g.counts()[i]);
  return MonotoneSurjection(std::move(counts));
}

MonotoneSurjection factor_through(const MonotoneSurjection& finer, const MonotoneSurjection& coarse) {
  if (finer.target_points() != coarse.target_points()) throw DomainError("surjections have different targets");
  // Block i maps finer.counts[i] points onto coarse.counts[i] points: the
  // surplus collapses onto the first target point of the block.
  std::vector<std::size_t> counts;
  for (std::size_t i = 0; i < finer.target_points(); ++i) {
    const std::size_t big = finer.counts()[i];
    const std::size_t small = coarse.counts()[i];
    if (big < small) throw DomainError("surjection does not factor: counts are not dominated");
    counts.push_back(big - small + 1);
    counts.insert(counts.end(), small - 1, 1);
  }
  return MonotoneSurjection(std::move(counts));
}

std::vector<ProductState> apply_surjection(const MonotoneSurjection& f, const Trace& t) {
  if (f.target_points() != t.column_count())
    throw DomainError("surjection targets " + std::to_string(f.target_points()) + " points, trace has " +
                      std::to_string(t.column_count()) + " columns");
  std::vector<ProductState> out;
  for (std::size_t i = 0; i < t.column_count(); ++i) {
    auto c = t.column(i);
    for (std::size_t r = 0; r < f.counts()[i]; ++r) out.emplace_back(c.begin(), c.end());
  }
  return out;
}

}  // namespace reltrace
