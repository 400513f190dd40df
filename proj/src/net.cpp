#include "dyna/net.hpp"

#include <cmath>
#include <string>

#include "dyna/errors.hpp"

namespace dyna {

FeedForwardNet::FeedForwardNet(std::vector<int> sizes, Act hidden, double learning_rate)
    : sizes_(std::move(sizes)), hidden_(hidden), lr_(learning_rate) {
  if (sizes_.size() < 2) throw UsageError("net: need at least input and output layer sizes");
  for (int s : sizes_)
    if (s <= 0) throw UsageError("net: layer sizes must be positive");
  if (!(lr_ > 0.0)) throw UsageError("net: learning rate must be positive");

  std::size_t total = 0;
  for (std::size_t l = 0; l + 1 < sizes_.size(); ++l) {
    w_off_.push_back(total);
    total += static_cast<std::size_t>(sizes_[l + 1]) * sizes_[l];
    b_off_.push_back(total);
    total += static_cast<std::size_t>(sizes_[l + 1]);
  }
  params_.assign(total, 0.0);
}

void FeedForwardNet::set_learning_rate(double lr) {
  if (!(lr > 0.0)) throw UsageError("net: learning rate must be positive");
  lr_ = lr;
}

void FeedForwardNet::set_params(std::vector<double> p) {
  if (p.size() != params_.size()) throw ContractError("net: parameter count mismatch");
  params_ = std::move(p);
}

void FeedForwardNet::init_uniform(Rng& rng) {
  for (std::size_t l = 0; l + 1 < sizes_.size(); ++l) {
    const double r = 1.0 / std::sqrt(static_cast<double>(sizes_[l]));
    const std::size_t n_w = static_cast<std::size_t>(sizes_[l + 1]) * sizes_[l];
    for (std::size_t i = 0; i < n_w; ++i) params_[w_off_[l] + i] = rng.uniform_in(-r, r);
    for (int i = 0; i < sizes_[l + 1]; ++i) params_[b_off_[l] + i] = rng.uniform_in(-r, r);
  }
}

double FeedForwardNet::apply_act(double z) const {
  return hidden_ == Act::Tanh ? std::tanh(z) : (z > 0.0 ? z : 0.0);
}

double FeedForwardNet::act_deriv(double z, double a) const {
  return hidden_ == Act::Tanh ? 1.0 - a * a : (z > 0.0 ? 1.0 : 0.0);
}

void FeedForwardNet::check_input(const std::vector<double>& input,
                                 const std::vector<double>& target) const {
  if (static_cast<int>(input.size()) != sizes_.front())
    throw ContractError("net: input size " + std::to_string(input.size()) + " != " +
                        std::to_string(sizes_.front()));
  if (!target.empty() && static_cast<int>(target.size()) != sizes_.back())
    throw ContractError("net: target size " + std::to_string(target.size()) + " != " +
                        std::to_string(sizes_.back()));
}

void FeedForwardNet::run_forward(const std::vector<double>& input, Workspace& w) const {
  const std::size_t n_layers = sizes_.size() - 1;
  w.acts.assign(sizes_.size(), {});
  w.zs.assign(n_layers, {});
  w.acts[0] = input;
  for (std::size_t l = 0; l < n_layers; ++l) {
    const int n_out = sizes_[l + 1], n_in = sizes_[l];
    w.zs[l].assign(n_out, 0.0);
    w.acts[l + 1].assign(n_out, 0.0);
    const double* wp = params_.data() + w_off_[l];
    const double* bp = params_.data() + b_off_[l];
    const double* in = w.acts[l].data();
    for (int i = 0; i < n_out; ++i) {
      double z = bp[i];
      const double* row = wp + static_cast<std::size_t>(i) * n_in;
      for (int j = 0; j < n_in; ++j) z += row[j] * in[j];
      w.zs[l][i] = z;
      // Output layer stays linear.
      w.acts[l + 1][i] = (l + 1 == n_layers) ? z : apply_act(z);
    }
  }
}

std::vector<double> FeedForwardNet::forward(const std::vector<double>& input) const {
  check_input(input, {});
  Workspace w;
  run_forward(input, w);
  return w.acts.back();
}

std::vector<double> FeedForwardNet::hidden_activations(const std::vector<double>& input,
                                                       int layer) const {
  check_input(input, {});
  if (layer < 1 || layer + 1 >= static_cast<int>(sizes_.size()))
    throw UsageError("net: hidden layer index out of range");
  Workspace w;
  run_forward(input, w);
  return w.acts[static_cast<std::size_t>(layer)];
}

double FeedForwardNet::loss_mse(const std::vector<double>& input,
                                const std::vector<double>& target) const {
  check_input(input, target);
  const std::vector<double> pred = forward(input);
  double s = 0.0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    const double d = pred[i] - target[i];
    s += d * d;
  }
  return s / static_cast<double>(pred.size());
}

void FeedForwardNet::accumulate_grad(const Workspace& w, const std::vector<double>& target,
                                     std::vector<double>& grad) const {
  const std::size_t n_layers = sizes_.size() - 1;
  const int k = sizes_.back();
  // dL/dy for L = (1/k) sum (y - t)^2.
  std::vector<double> delta(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    delta[static_cast<std::size_t>(i)] = 2.0 / k * (w.acts[n_layers][i] - target[i]);

  for (std::size_t l = n_layers; l-- > 0;) {
    const int n_out = sizes_[l + 1], n_in = sizes_[l];
    double* gw = grad.data() + w_off_[l];
    double* gb = grad.data() + b_off_[l];
    const double* in = w.acts[l].data();
    for (int i = 0; i < n_out; ++i) {
      const double d = delta[static_cast<std::size_t>(i)];
      gb[i] += d;
      double* row = gw + static_cast<std::size_t>(i) * n_in;
      for (int j = 0; j < n_in; ++j) row[j] += d * in[j];
    }
    if (l == 0) break;
    std::vector<double> prev(static_cast<std::size_t>(n_in), 0.0);
    const double* wp = params_.data() + w_off_[l];
    for (int i = 0; i < n_out; ++i) {
      const double d = delta[static_cast<std::size_t>(i)];
      const double* row = wp + static_cast<std::size_t>(i) * n_in;
      for (int j = 0; j < n_in; ++j) prev[static_cast<std::size_t>(j)] += row[j] * d;
    }
    for (int j = 0; j < n_in; ++j)
      prev[static_cast<std::size_t>(j)] *= act_deriv(w.zs[l - 1][j], w.acts[l][j]);
    delta = std::move(prev);
  }
}

std::vector<double> FeedForwardNet::grad_mse(const std::vector<double>& input,
                                             const std::vector<double>& target) const {
  check_input(input, target);
  Workspace w;
  run_forward(input, w);
  std::vector<double> grad(params_.size(), 0.0);
  accumulate_grad(w, target, grad);
  return grad;
}

double FeedForwardNet::train_step_mse(const std::vector<double>& input,
                                      const std::vector<double>& target) {
  if (frozen_) throw ContractError("net: frozen nets cannot be trained");
  check_input(input, target);
  Workspace w;
  run_forward(input, w);
  double loss = 0.0;
  for (int i = 0; i < sizes_.back(); ++i) {
    const double d = w.acts.back()[static_cast<std::size_t>(i)] - target[static_cast<std::size_t>(i)];
    loss += d * d;
  }
  loss /= static_cast<double>(sizes_.back());
  if (!std::isfinite(loss)) throw NumericError("net: non-finite training loss");

  std::vector<double> grad(params_.size(), 0.0);
  accumulate_grad(w, target, grad);
  for (std::size_t i = 0; i < params_.size(); ++i) params_[i] -= lr_ * grad[i];
  return loss;
}

double FeedForwardNet::train_batch_mse(const std::vector<std::vector<double>>& inputs,
                                       const std::vector<std::vector<double>>& targets) {
  if (frozen_) throw ContractError("net: frozen nets cannot be trained");
  if (inputs.empty() || inputs.size() != targets.size())
    throw ContractError("net: batch inputs/targets must be non-empty and aligned");
  std::vector<double> grad(params_.size(), 0.0);
  double loss = 0.0;
  Workspace w;
  for (std::size_t b = 0; b < inputs.size(); ++b) {
    check_input(inputs[b], targets[b]);
    run_forward(inputs[b], w);
    for (int i = 0; i < sizes_.back(); ++i) {
      const double d =
          w.acts.back()[static_cast<std::size_t>(i)] - targets[b][static_cast<std::size_t>(i)];
      loss += d * d / sizes_.back();
    }
    accumulate_grad(w, targets[b], grad);
  }
  const double inv = 1.0 / static_cast<double>(inputs.size());
  loss *= inv;
  if (!std::isfinite(loss)) throw NumericError("net: non-finite training loss");
  for (std::size_t i = 0; i < params_.size(); ++i) params_[i] -= lr_ * inv * grad[i];
  return loss;
}

double gradient_check(FeedForwardNet& net, const std::vector<double>& input,
                      const std::vector<double>& target, double h) {
  const std::vector<double> analytic = net.grad_mse(input, target);
  double worst = 0.0;
  for (std::size_t i = 0; i < net.num_params(); ++i) {
    const double saved = net.param(i);
    net.set_param(i, saved + h);
    const double lp = net.loss_mse(input, target);
    net.set_param(i, saved - h);
    const double lm = net.loss_mse(input, target);
    net.set_param(i, saved);
    const double fd = (lp - lm) / (2.0 * h);
    const double denom = std::max(std::fabs(analytic[i]), std::fabs(fd));
    // Where both gradients vanish a ratio is meaningless; compare absolutely.
    const double err = denom > 1e-8 ? std::fabs(analytic[i] - fd) / denom
                                    : std::fabs(analytic[i] - fd);
    worst = std::max(worst, err);
  }
  return worst;
}

}  // namespace dyna
