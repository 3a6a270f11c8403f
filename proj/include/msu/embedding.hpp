#pragma once

#include "msu/metric_space.hpp"

#include <algorithm>
#include <cstddef>
#include <future>
#include <optional>
#include <vector>

namespace msu {

/// image[i] is the codomain index of domain point i.
struct PointMap {
  std::vector<std::size_t> image;

  std::size_t size() const { return image.size(); }
  std::size_t operator[](std::size_t i) const { return image[i]; }

  friend bool operator==(const PointMap&, const PointMap&) = default;
  friend auto operator<=>(const PointMap&, const PointMap&) = default;
};

enum class Comparability { LeftEmbeds, RightEmbeds, BothEmbed, Incomparable };

std::string_view comparability_name(Comparability c);

struct EmbeddingOptions {
  std::size_t limit = 0;  ///< 0 means all
  double tol = kDefaultTolerance;
  unsigned parallel = 1;  ///< worker count for the top-level branches
};

namespace detail {

template <typename Scalar>
std::vector<Scalar> sorted_row(const MetricSpace<Scalar>& s, std::size_t i) {
  std::vector<Scalar> row;
  row.reserve(s.size());
  for (std::size_t j = 0; j < s.size(); ++j)
    if (j != i) row.push_back(s(i, j));
  std::sort(row.begin(), row.end());
  return row;
}

template <typename Scalar>
bool is_submultiset(const std::vector<Scalar>& small, const std::vector<Scalar>& big) {
  std::size_t b = 0;
  for (const auto& v : small) {
    while (b < big.size() && big[b] < v) ++b;
    if (b == big.size() || big[b] != v) return false;
    ++b;
  }
  return true;
}

template <typename Scalar>
class EmbeddingSearch {
 public:
  EmbeddingSearch(const MetricSpace<Scalar>& x, const MetricSpace<Scalar>& y, double tol)
      : x_(x), y_(y), tol_(tol), allowed_(x.size(), std::vector<char>(y.size(), 1)) {
    // Row-multiset prefilter: an embedding maps row i of X into a sub-multiset of
    // row f(i) of Y. Only sound under exact comparison.
    if constexpr (ScalarTraits<Scalar>::is_exact) {
      std::vector<std::vector<Scalar>> ys(y.size());
      for (std::size_t j = 0; j < y.size(); ++j) ys[j] = sorted_row(y, j);
      for (std::size_t i = 0; i < x.size(); ++i) {
        auto xi = sorted_row(x, i);
        for (std::size_t j = 0; j < y.size(); ++j) allowed_[i][j] = is_submultiset(xi, ys[j]) ? 1 : 0;
      }
    }
  }

  /// All embeddings whose first image is `first` (or every first image when
  /// `first` is empty), in lexicographic order, stopping at `limit` (0 = all).
  std::vector<PointMap> run(std::optional<std::size_t> first, std::size_t limit) {
    out_.clear();
    limit_ = limit;
    image_.assign(x_.size(), 0);
    used_.assign(y_.size(), 0);
    if (x_.size() > y_.size()) return {};
    if (x_.empty()) return {PointMap{}};
    if (first) {
      if (candidate_ok(0, *first)) {
        assign(0, *first);
        recurse(1);
      }
    } else {
      recurse(0);
    }
    return std::move(out_);
  }

 private:
  bool candidate_ok(std::size_t i, std::size_t j) const {
    if (used_[j] || !allowed_[i][j]) return false;
    for (std::size_t k = 0; k < i; ++k)
      if (!approx_eq<Scalar>(x_(i, k), y_(j, image_[k]), tol_)) return false;
    return true;
  }

  void assign(std::size_t i, std::size_t j) {
    image_[i] = j;
    used_[j] = 1;
  }

  bool done() const { return limit_ != 0 && out_.size() >= limit_; }

  void recurse(std::size_t i) {
    if (i == x_.size()) {
      out_.push_back(PointMap{image_});
      return;
    }
    for (std::size_t j = 0; j < y_.size() && !done(); ++j) {
      if (!candidate_ok(i, j)) continue;
      assign(i, j);
      recurse(i + 1);
      used_[j] = 0;
    }
  }

  const MetricSpace<Scalar>& x_;
  const MetricSpace<Scalar>& y_;
  double tol_;
  std::vector<std::vector<char>> allowed_;
  std::vector<std::size_t> image_;
  std::vector<char> used_;
  std::vector<PointMap> out_;
  std::size_t limit_ = 0;
};

}  // namespace detail

/// Every injective distance-preserving map X -> Y (up to opts.limit), ordered
/// lexicographically by image tuple. Backtracking assigns X's points in index
/// order; candidate j for point i must match d_X(i,k) = d_Y(j, f(k)) for all
/// already-assigned k.
template <typename Scalar>
std::vector<PointMap> find_embeddings(const MetricSpace<Scalar>& x, const MetricSpace<Scalar>& y,
                                      const EmbeddingOptions& opts = {}) {
  if (opts.parallel <= 1 || x.empty() || x.size() > y.size()) {
    detail::EmbeddingSearch<Scalar> search(x, y, opts.tol);
    return search.run(std::nullopt, opts.limit);
  }

  // Split on the image of point 0; each branch is an independent search and
  // concatenating branches in order of that image preserves lexicographic order.
  std::vector<PointMap> out;
  const std::size_t workers = opts.parallel;
  for (std::size_t base = 0; base < y.size(); base += workers) {
    std::vector<std::future<std::vector<PointMap>>> batch;
    for (std::size_t j = base; j < std::min(y.size(), base + workers); ++j) {
      batch.push_back(std::async(std::launch::async, [&x, &y, &opts, j] {
        detail::EmbeddingSearch<Scalar> search(x, y, opts.tol);
        return search.run(j, opts.limit);
      }));
    }
    for (auto& f : batch) {
      auto part = f.get();
      out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    if (opts.limit != 0 && out.size() >= opts.limit) {
      out.resize(opts.limit);
      break;
    }
  }
  return out;
}

template <typename Scalar>
bool embeds(const MetricSpace<Scalar>& x, const MetricSpace<Scalar>& y, double tol = kDefaultTolerance) {
  EmbeddingOptions opts;
  opts.limit = 1;
  opts.tol = tol;
  return !find_embeddings(x, y, opts).empty();
}

template <typename Scalar>
Comparability compare(const MetricSpace<Scalar>& x, const MetricSpace<Scalar>& y, double tol = kDefaultTolerance) {
  const bool left = embeds(x, y, tol);
  const bool right = embeds(y, x, tol);
  if (left && right) return Comparability::BothEmbed;
  if (left) return Comparability::LeftEmbeds;
  if (right) return Comparability::RightEmbeds;
  return Comparability::Incomparable;
}

template <typename Scalar>
bool is_isometric(const MetricSpace<Scalar>& x, const MetricSpace<Scalar>& y, double tol = kDefaultTolerance) {
  return x.size() == y.size() && embeds(x, y, tol);
}

/// Whether f is injective and distance-preserving from X into Y.
template <typename Scalar>
bool is_embedding(const PointMap& f, const MetricSpace<Scalar>& x, const MetricSpace<Scalar>& y,
                  double tol = kDefaultTolerance) {
  if (f.size() != x.size()) return false;
  std::vector<char> seen(y.size(), 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] >= y.size() || seen[f[i]]) return false;
    seen[f[i]] = 1;
  }
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (!approx_eq<Scalar>(x(i, j), y(f[i], f[j]), tol)) return false;
  return true;
}

inline bool is_bijection(const PointMap& f, std::size_t codomain_size) {
  if (f.size() != codomain_size) return false;
  std::vector<char> seen(codomain_size, 0);
  for (auto j : f.image) {
    if (j >= codomain_size || seen[j]) return false;
    seen[j] = 1;
  }
  return true;
}

inline PointMap compose(const PointMap& outer, const PointMap& inner) {
  PointMap out;
  out.image.reserve(inner.size());
  for (auto j : inner.image) out.image.push_back(outer[j]);
  return out;
}

struct ShiftReport {
  bool not_shifted = true;
  std::vector<PointMap> isometries;        ///< every self-embedding when not_shifted
  std::optional<PointMap> non_surjective;  ///< witness otherwise
};

/// A finite space is never isometric to a proper subset of itself; this
/// enumerates every self-embedding and confirms each one is a bijection.
template <typename Scalar>
ShiftReport is_not_shifted(const MetricSpace<Scalar>& x, const EmbeddingOptions& opts = {}) {
  EmbeddingOptions all = opts;
  all.limit = 0;
  ShiftReport report;
  for (auto& f : find_embeddings(x, x, all)) {
    if (!is_bijection(f, x.size())) {
      report.not_shifted = false;
      report.non_surjective = f;
      report.isometries.clear();
      return report;
    }
    report.isometries.push_back(std::move(f));
  }
  return report;
}

/// Distinct image sets (as sorted index lists) of the embeddings of X into Y.
template <typename Scalar>
std::vector<std::vector<std::size_t>> embedding_images(const MetricSpace<Scalar>& x, const MetricSpace<Scalar>& y,
                                                       const EmbeddingOptions& opts = {}) {
  EmbeddingOptions all = opts;
  all.limit = 0;
  std::vector<std::vector<std::size_t>> images;
  for (const auto& f : find_embeddings(x, y, all)) {
    auto img = f.image;
    std::sort(img.begin(), img.end());
    images.push_back(std::move(img));
  }
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return images;
}

}  // namespace msu
