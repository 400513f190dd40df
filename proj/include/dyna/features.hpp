#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dyna/env.hpp"
#include "dyna/net.hpp"

namespace dyna {

// Feature vector as an active list: (index, value) pairs into a space of
// `dim` features. Tile coding yields a short binary list; dense extractors
// list every component. Linear value functions consume either uniformly.
struct FeatureVec {
  std::vector<std::pair<int, double>> active;
  int dim = 0;
};

class FeatureSource {
 public:
  virtual ~FeatureSource() = default;
  virtual FeatureVec features(const State& s) const = 0;
  virtual int dim() const = 0;
};

// Grid tile coding with `tilings` overlapping grids, each offset by a
// fraction of a tile. Every state activates exactly `tilings` features.
// Inputs are clamped into the bounds before discretisation.
class TileCoder : public FeatureSource {
 public:
  TileCoder(int tilings, int tiles_per_dim, std::vector<Bounds> bounds);

  FeatureVec features(const State& s) const override;
  int dim() const override { return dim_; }
  int tilings() const { return tilings_; }

 private:
  int tilings_, tiles_per_dim_;
  std::vector<Bounds> bounds_;
  int cells_per_tiling_ = 0;
  int dim_ = 0;
};

// Frozen network whose last hidden layer serves as the state representation.
// Immutable after construction; the wrapped net rejects training.
class FeatureExtractor : public FeatureSource {
 public:
  // Takes ownership of the net and freezes it. Features come from the final
  // hidden layer, so the net must have at least one hidden layer.
  explicit FeatureExtractor(FeedForwardNet net, std::vector<Bounds> bounds);

  FeatureVec features(const State& s) const override;
  int dim() const override { return dim_; }

  const FeedForwardNet& net() const { return net_; }

  // Binary flat format: int32 layer count, int32 layer sizes, then every
  // parameter as float64, in the net's row-major weight/bias layout, plus
  // the normalisation bounds. Little-endian throughout.
  void save(const std::string& path) const;
  static FeatureExtractor load(const std::string& path);

 private:
  FeedForwardNet net_;
  std::vector<Bounds> bounds_;
  int dim_;
};

// Scale a state into [-1, 1] per dimension using the given bounds.
std::vector<double> normalize_state(const State& s, const std::vector<Bounds>& bounds);

}  // namespace dyna
