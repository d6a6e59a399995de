#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tete/error.hpp"
#include "tete/types.hpp"

namespace tete {

/// Squared Euclidean distance between rows r and s. Every call site that
/// cares about operation counts passes the same counter, so complexity
/// assertions see all pairwise-distance work.
inline double sq_dist(const Matrix& m, Index r, Index s,
                      std::uint64_t* dist_evals = nullptr) {
  if (dist_evals) ++*dist_evals;
  return (m.row(r) - m.row(s)).squaredNorm();
}

struct Neighbor {
  Index index = 0;
  double distance = 0.0;  // Euclidean
  double sq = 0.0;        // squared, the comparison key
};

/// Per-object nearest-neighbor lists, sorted by (distance, index) with no
/// self entries.
struct NeighborIndex {
  std::vector<std::vector<Neighbor>> lists;

  Index num_objects() const { return static_cast<Index>(lists.size()); }
  Index list_length() const {
    return lists.empty() ? 0 : static_cast<Index>(lists[0].size());
  }
};

/// Exact brute-force m-nearest neighbors under Euclidean distance, ties
/// broken by lower index. Costs n*(n-1) distance evaluations.
inline NeighborIndex knn(const LabeledDataset& ds, Index m,
                         std::uint64_t* dist_evals = nullptr) {
  const Index n = ds.num_objects();
  if (m < 1) throw ValidationError("knn requires m >= 1");
  if (m >= n) {
    throw ValidationError("knn requires m < n, got m=" + std::to_string(m) +
                          ", n=" + std::to_string(n));
  }
  NeighborIndex idx;
  idx.lists.resize(static_cast<std::size_t>(n));
  std::vector<Neighbor> row(static_cast<std::size_t>(n - 1));
  for (Index i = 0; i < n; ++i) {
    std::size_t w = 0;
    for (Index j = 0; j < n; ++j) {
      if (j == i) continue;
      double d2 = sq_dist(ds.data, i, j, dist_evals);
      row[w++] = Neighbor{j, 0.0, d2};
    }
    std::partial_sort(row.begin(), row.begin() + m, row.end(),
                      [](const Neighbor& a, const Neighbor& b) {
                        return a.sq != b.sq ? a.sq < b.sq : a.index < b.index;
                      });
    auto& list = idx.lists[static_cast<std::size_t>(i)];
    list.assign(row.begin(), row.begin() + m);
    for (Neighbor& nb : list) nb.distance = std::sqrt(nb.sq);
  }
  return idx;
}

/// Per-object adaptive scales: sigma_i is the distance from i to its
/// nn_for_sigma-th nearest neighbor.
struct ScaleFactors {
  std::vector<double> sigma;
};

inline ScaleFactors scales_from_knn(const NeighborIndex& idx,
                                    Index nn_for_sigma) {
  if (nn_for_sigma < 1 || nn_for_sigma > idx.list_length()) {
    throw ValidationError("nn_for_sigma outside the neighbor list length");
  }
  ScaleFactors sf;
  sf.sigma.reserve(idx.lists.size());
  for (std::size_t i = 0; i < idx.lists.size(); ++i) {
    double s = idx.lists[i][static_cast<std::size_t>(nn_for_sigma - 1)].distance;
    if (!(s > 0.0)) {
      throw ValidationError("object " + std::to_string(i) +
                            " has zero distance to its " +
                            std::to_string(nn_for_sigma) +
                            "-th nearest neighbor; cannot form scales");
    }
    sf.sigma.push_back(s);
  }
  return sf;
}

namespace detail {

/// Draws k uniformly from the objects strictly farther from `query` than
/// `sq_near` (ties excluded). Rejection-samples from [0, n) and falls back
/// to explicit enumeration after 50 rejections; an empty candidate set is
/// an error naming the offending pair.
inline Index draw_farther(const Matrix& data, Index query, Index near_index,
                          double sq_near, std::mt19937_64& rng,
                          std::uint64_t* dist_evals) {
  const Index n = data.rows();
  std::uniform_int_distribution<Index> uni(0, n - 1);
  for (int attempt = 0; attempt < 50; ++attempt) {
    Index k = uni(rng);
    if (k == query) continue;
    if (sq_dist(data, query, k, dist_evals) > sq_near) return k;
  }
  std::vector<Index> farther;
  for (Index k = 0; k < n; ++k) {
    if (k == query) continue;
    if (sq_dist(data, query, k, dist_evals) > sq_near) farther.push_back(k);
  }
  if (farther.empty()) {
    throw ValidationError("no object is strictly farther from " +
                          std::to_string(query) + " than its neighbor " +
                          std::to_string(near_index));
  }
  std::uniform_int_distribution<std::size_t> pick(0, farther.size() - 1);
  return farther[pick(rng)];
}

}  // namespace detail

}  // namespace tete
