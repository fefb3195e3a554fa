#pragma once

#include "lff/network.hpp"

#include <cstdint>
#include <vector>

namespace lff {

/// Adam moment buffers, one pair per parameter tensor in
/// for_each_parameter order. Frozen parameters keep zero moments and are
/// never touched, so a non-trainable basis stays bit-identical.
struct AdamState {
    double lr = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
    std::int64_t step = 0;
    std::vector<Matrix> m;
    std::vector<Matrix> v;
};

AdamState make_adam_state(Network& net, double lr, double beta1 = 0.9, double beta2 = 0.999,
                          double eps = 1e-8);

/// One Adam update from the accumulated gradients; increments the step
/// counter and leaves gradients untouched (caller zeroes).
void adam_step(Network& net, AdamState& state);

/// Plain gradient step; gradients untouched.
void sgd_step(Network& net, double lr);

struct OptimizerSpec {
    enum class Algo { Adam, Sgd };
    Algo algo = Algo::Adam;
    double lr = 1e-4;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
};

/// Squared-error loss, averaged over batch rows AND output columns.
/// Returns the loss; writes the gradient d(loss)/d(pred) into grad.
double mse_loss(const Matrix& pred, const Matrix& target, Matrix& grad);

/// Mini-batch squared-error regression. batch_size 0 (or >= n) trains
/// full-batch in row order; otherwise batches are drawn i.i.d. from rng.
/// Returns the per-step mean training loss. Deterministic given the seed.
/// Throws NumericalError if the loss goes non-finite.
std::vector<double> fit_regression(Network& net, const Matrix& xs, const Matrix& ys,
                                   std::int64_t steps, const OptimizerSpec& opt,
                                   std::size_t batch_size, RngStream& rng);

} // namespace lff
