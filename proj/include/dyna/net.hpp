#pragma once

#include <cstddef>
#include <vector>

#include "dyna/rng.hpp"

namespace dyna {

enum class Act { Tanh, Relu };

// Plain fully-connected net with a linear output layer, trained by SGD on
// mean-squared error. Parameters live in one flat vector (per layer: weights
// row-major out x in, then biases) so finite-difference checks and
// serialisation can treat the net as a single parameter list.
class FeedForwardNet {
 public:
  FeedForwardNet(std::vector<int> sizes, Act hidden, double learning_rate);

  const std::vector<int>& sizes() const { return sizes_; }
  Act hidden_activation() const { return hidden_; }
  double learning_rate() const { return lr_; }
  void set_learning_rate(double lr);

  std::size_t num_params() const { return params_.size(); }
  double param(std::size_t i) const { return params_[i]; }
  void set_param(std::size_t i, double v) { params_[i] = v; }
  const std::vector<double>& params() const { return params_; }
  void set_params(std::vector<double> p);

  // Uniform init in +/- 1/sqrt(fan_in), biases included.
  void init_uniform(Rng& rng);

  std::vector<double> forward(const std::vector<double>& input) const;
  // Post-activation values of a hidden layer (1 = first hidden).
  std::vector<double> hidden_activations(const std::vector<double>& input, int layer) const;

  // Loss (1/k) sum (pred - target)^2 for the current parameters.
  double loss_mse(const std::vector<double>& input, const std::vector<double>& target) const;
  // Gradient of loss_mse w.r.t. every parameter, aligned with param(i).
  std::vector<double> grad_mse(const std::vector<double>& input,
                               const std::vector<double>& target) const;

  // One SGD step on a single example. Returns the loss before the step.
  double train_step_mse(const std::vector<double>& input, const std::vector<double>& target);
  // One SGD step on the gradient averaged over a batch. Returns mean loss.
  double train_batch_mse(const std::vector<std::vector<double>>& inputs,
                         const std::vector<std::vector<double>>& targets);

  // A frozen net rejects all further training.
  void freeze() { frozen_ = true; }
  bool frozen() const { return frozen_; }

 private:
  struct Workspace {
    std::vector<std::vector<double>> acts;   // acts[0] = input copy
    std::vector<std::vector<double>> zs;     // pre-activations per layer
  };
  void run_forward(const std::vector<double>& input, Workspace& w) const;
  void accumulate_grad(const Workspace& w, const std::vector<double>& target,
                       std::vector<double>& grad) const;
  void check_input(const std::vector<double>& input, const std::vector<double>& target) const;
  double apply_act(double z) const;
  double act_deriv(double z, double a) const;

  std::vector<int> sizes_;
  Act hidden_;
  double lr_;
  bool frozen_ = false;
  std::vector<double> params_;
  std::vector<std::size_t> w_off_, b_off_;  // per layer offsets into params_
};

// Max discrepancy between analytic and central-difference gradients over all
// parameters. Parameters where both gradients are ~0 are compared absolutely.
double gradient_check(FeedForwardNet& net, const std::vector<double>& input,
                      const std::vector<double>& target, double h = 1e-5);

}  // namespace dyna
