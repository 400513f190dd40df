#include "dyna/features.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <fstream>

#include "dyna/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "serialisation code assumes a little-endian host");

namespace dyna {

std::vector<double> normalize_state(const State& s, const std::vector<Bounds>& bounds) {
  if (s.size() != bounds.size())
    throw ContractError("normalize_state: state/bounds dimension mismatch");
  std::vector<double> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double span = bounds[i].hi - bounds[i].lo;
    if (!(span > 0.0)) throw ContractError("normalize_state: empty bound range");
    out[i] = 2.0 * (s[i] - bounds[i].lo) / span - 1.0;
  }
  return out;
}

// ---------------------------------------------------------------- TileCoder

TileCoder::TileCoder(int tilings, int tiles_per_dim, std::vector<Bounds> bounds)
    : tilings_(tilings), tiles_per_dim_(tiles_per_dim), bounds_(std::move(bounds)) {
  if (tilings_ <= 0 || tiles_per_dim_ <= 0)
    throw UsageError("tilecoder: tilings and tiles_per_dim must be positive");
  if (bounds_.empty()) throw UsageError("tilecoder: need at least one dimension");
  // One extra tile per dimension absorbs the tiling offsets.
  cells_per_tiling_ = 1;
  for (std::size_t d = 0; d < bounds_.size(); ++d) {
    if (!(bounds_[d].hi > bounds_[d].lo)) throw UsageError("tilecoder: empty bound range");
    cells_per_tiling_ *= tiles_per_dim_ + 1;
  }
  dim_ = tilings_ * cells_per_tiling_;
}

FeatureVec TileCoder::features(const State& s) const {
  if (s.size() != bounds_.size()) throw ContractError("tilecoder: state dimension mismatch");
  FeatureVec f;
  f.dim = dim_;
  f.active.reserve(static_cast<std::size_t>(tilings_));
  for (int t = 0; t < tilings_; ++t) {
    const double shift = static_cast<double>(t) / tilings_;
    int index = 0;
    for (std::size_t d = 0; d < bounds_.size(); ++d) {
      const double u = std::clamp(s[d], bounds_[d].lo, bounds_[d].hi);
      const double unit = (u - bounds_[d].lo) / (bounds_[d].hi - bounds_[d].lo);
      int cell = static_cast<int>(std::floor(unit * tiles_per_dim_ + shift));
      cell = std::clamp(cell, 0, tiles_per_dim_);
      index = index * (tiles_per_dim_ + 1) + cell;
    }
    f.active.emplace_back(t * cells_per_tiling_ + index, 1.0);
  }
  return f;
}

// ---------------------------------------------------------- FeatureExtractor

FeatureExtractor::FeatureExtractor(FeedForwardNet net, std::vector<Bounds> bounds)
    : net_(std::move(net)), bounds_(std::move(bounds)) {
  if (net_.sizes().size() < 3)
    throw UsageError("feature extractor: net needs at least one hidden layer");
  if (static_cast<int>(bounds_.size()) != net_.sizes().front())
    throw UsageError("feature extractor: bounds must match the net input dimension");
  net_.freeze();
  dim_ = net_.sizes()[net_.sizes().size() - 2];
}

FeatureVec FeatureExtractor::features(const State& s) const {
  const std::vector<double> x = normalize_state(s, bounds_);
  const int last_hidden = static_cast<int>(net_.sizes().size()) - 2;
  const std::vector<double> h = net_.hidden_activations(x, last_hidden);
  FeatureVec f;
  f.dim = dim_;
  f.active.reserve(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) f.active.emplace_back(static_cast<int>(i), h[i]);
  return f;
}

namespace {
void write_i32(std::ofstream& out, std::int32_t v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}
std::int32_t read_i32(std::ifstream& in) {
  std::int32_t v = 0;
  in.read(reinterpret_cast<char*>(&v), sizeof v);
  return v;
}
void write_f64(std::ofstream& out, double v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}
double read_f64(std::ifstream& in) {
  double v = 0.0;
  in.read(reinterpret_cast<char*>(&v), sizeof v);
  return v;
}
}  // namespace

void FeatureExtractor::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("feature extractor: cannot open '" + path + "' for writing");
  write_i32(out, static_cast<std::int32_t>(net_.sizes().size()));
  for (int s : net_.sizes()) write_i32(out, static_cast<std::int32_t>(s));
  for (double p : net_.params()) write_f64(out, p);
  for (const Bounds& b : bounds_) {
    write_f64(out, b.lo);
    write_f64(out, b.hi);
  }
  if (!out) throw UsageError("feature extractor: write to '" + path + "' failed");
}

FeatureExtractor FeatureExtractor::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("feature extractor: cannot open '" + path + "'");
  const std::int32_t n = read_i32(in);
  if (!in || n < 3 || n > 64) throw UsageError("feature extractor: corrupt header in '" + path + "'");
  std::vector<int> sizes;
  for (std::int32_t i = 0; i < n; ++i) sizes.push_back(read_i32(in));
  FeedForwardNet net(sizes, Act::Relu, 1e-3);
  std::vector<double> params(net.num_params());
  for (double& p : params) p = read_f64(in);
  std::vector<Bounds> bounds(static_cast<std::size_t>(sizes.front()));
  for (Bounds& b : bounds) {
    b.lo = read_f64(in);
    b.hi = read_f64(in);
  }
  if (!in) throw UsageError("feature extractor: truncated file '" + path + "'");
  net.set_params(std::move(params));
  return FeatureExtractor(std::move(net), std::move(bounds));
}

}  // namespace dyna
