#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tete/error.hpp"

namespace tete {

/// Row-major so each object's coordinate row is contiguous.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                             Eigen::RowMajor>;

using Index = std::int64_t;

/// Ordered relative-similarity constraint: object `query` is closer to
/// `near` than to `far`.
struct Triplet {
  Index query = 0;
  Index near = 0;
  Index far = 0;

  friend bool operator==(const Triplet&, const Triplet&) = default;
};

/// A list of triplets over `num_objects` objects. Duplicates are allowed;
/// every index must lie in [0, num_objects) and the three indices of a
/// triplet must be distinct.
struct TripletSet {
  std::vector<Triplet> triplets;
  Index num_objects = 0;

  std::size_t size() const { return triplets.size(); }
  bool empty() const { return triplets.empty(); }

  void validate() const {
    for (std::size_t r = 0; r < triplets.size(); ++r) {
      const Triplet& tr = triplets[r];
      if (tr.query < 0 || tr.near < 0 || tr.far < 0 ||
          tr.query >= num_objects || tr.near >= num_objects ||
          tr.far >= num_objects) {
        throw ValidationError("triplet " + std::to_string(r) +
                              " indexes outside [0, " +
                              std::to_string(num_objects) + ")");
      }
      if (tr.query == tr.near || tr.query == tr.far || tr.near == tr.far) {
        throw ValidationError("triplet " + std::to_string(r) +
                              " repeats an object index");
      }
    }
  }
};

/// Triplets paired with non-negative importance weights, one per triplet.
struct WeightedTripletSet {
  TripletSet base;
  std::vector<double> weights;

  std::size_t size() const { return base.size(); }

  void validate() const {
    base.validate();
    if (weights.size() != base.size()) {
      throw ValidationError("weight count " + std::to_string(weights.size()) +
                            " does not match triplet count " +
                            std::to_string(base.size()));
    }
    for (std::size_t r = 0; r < weights.size(); ++r) {
      if (!(weights[r] >= 0.0) || !std::isfinite(weights[r])) {
        throw ValidationError("weight " + std::to_string(r) +
                              " must be finite and non-negative");
      }
    }
  }
};

/// Wraps a plain triplet set with unit weights.
inline WeightedTripletSet unit_weights(TripletSet ts) {
  const std::size_t n = ts.size();
  return WeightedTripletSet{std::move(ts), std::vector<double>(n, 1.0)};
}

/// High-dimensional input data: one object per row, optional class labels.
struct LabeledDataset {
  Matrix data;  // n x D
  std::optional<std::vector<int>> labels;

  Index num_objects() const { return data.rows(); }
  Index dim() const { return data.cols(); }

  void validate() const {
    if (data.rows() > 0 && data.cols() < 1) {
      throw ValidationError("data matrix needs at least one column");
    }
    if (labels && static_cast<Index>(labels->size()) != data.rows()) {
      throw ValidationError("label count " + std::to_string(labels->size()) +
                            " does not match row count " +
                            std::to_string(data.rows()));
    }
  }
};

/// Hyperparameters of the embedding optimizer.
///
/// `t` controls loss capping, `t_prime` the heaviness of the
/// distance-to-similarity tail. Both live in [1, 2]: t = t' = 1 reproduces
/// STE, t' = 2 reproduces the t-STE tail, and capping is lost at t = 1.
/// `init_scale` is the variance of the Gaussian initialization.
struct EmbedConfig {
  double t = 2.0;
  double t_prime = 2.0;
  Index dim = 2;
  double learning_rate = 1.0;
  Index iterations = 1000;
  std::uint64_t seed = 0;
  double init_scale = 1e-3;

  void validate() const {
    if (!(t >= 1.0 && t <= 2.0)) {
      throw ValidationError("t must lie in [1, 2], got " + std::to_string(t));
    }
    if (!(t_prime >= 1.0 && t_prime <= 2.0)) {
      throw ValidationError("t' must lie in [1, 2], got " +
                            std::to_string(t_prime));
    }
    if (dim < 1) {
      throw ValidationError("embedding dimension must be >= 1");
    }
    if (!(learning_rate > 0.0)) {
      throw ValidationError("learning rate must be positive");
    }
    if (iterations < 0) {
      throw ValidationError("iteration count must be >= 0");
    }
    if (!(init_scale >= 0.0)) {
      throw ValidationError("init_scale must be >= 0");
    }
  }
};

}  // namespace tete
