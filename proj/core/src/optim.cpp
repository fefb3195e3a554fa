#include "lff/optim.hpp"

#include "lff/errors.hpp"

#include <cmath>

namespace lff {

AdamState make_adam_state(Network& net, double lr, double beta1, double beta2, double eps) {
    AdamState state;
    state.lr = lr;
    state.beta1 = beta1;
    state.beta2 = beta2;
    state.eps = eps;
    net.for_each_parameter([&](const std::string&, Matrix& value, Matrix&, bool) {
        state.m.emplace_back(value.rows(), value.cols());
        state.v.emplace_back(value.rows(), value.cols());
    });
    return state;
}

void adam_step(Network& net, AdamState& state) {
    state.step += 1;
    const double bc1 = 1.0 - std::pow(state.beta1, static_cast<double>(state.step));
    const double bc2 = 1.0 - std::pow(state.beta2, static_cast<double>(state.step));
    std::size_t idx = 0;
    net.for_each_parameter([&](const std::string&, Matrix& value, Matrix& grad, bool trainable) {
        LFF_REQUIRE(idx < state.m.size(), "adam_step: state/parameter count mismatch");
        Matrix& m = state.m[idx];
        Matrix& v = state.v[idx];
        LFF_REQUIRE(m.same_shape(value), "adam_step: moment shape mismatch");
        ++idx;
        if (!trainable) return;
        for (std::size_t i = 0; i < value.size(); ++i) {
            const double g = grad.values()[i];
            m.values()[i] = state.beta1 * m.values()[i] + (1.0 - state.beta1) * g;
            v.values()[i] = state.beta2 * v.values()[i] + (1.0 - state.beta2) * g * g;
            const double mhat = m.values()[i] / bc1;
            const double vhat = v.values()[i] / bc2;
            value.values()[i] -= state.lr * mhat / (std::sqrt(vhat) + state.eps);
        }
    });
}

void sgd_step(Network& net, double lr) {
    net.for_each_parameter([&](const std::string&, Matrix& value, Matrix& grad, bool trainable) {
        if (!trainable) return;
        for (std::size_t i = 0; i < value.size(); ++i)
            value.values()[i] -= lr * grad.values()[i];
    });
}

double mse_loss(const Matrix& pred, const Matrix& target, Matrix& grad) {
    LFF_REQUIRE(pred.same_shape(target), "mse_loss: shape mismatch");
    const double inv = 1.0 / static_cast<double>(pred.size());
    grad = Matrix(pred.rows(), pred.cols());
    double loss = 0.0;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        const double d = pred.values()[i] - target.values()[i];
        loss += d * d;
        grad.values()[i] = 2.0 * d * inv;
    }
    return loss * inv;
}

std::vector<double> fit_regression(Network& net, const Matrix& xs, const Matrix& ys,
                                   std::int64_t steps, const OptimizerSpec& opt,
                                   std::size_t batch_size, RngStream& rng) {
    LFF_REQUIRE(xs.rows() == ys.rows(), "fit_regression: xs/ys row mismatch");
    LFF_REQUIRE(xs.rows() > 0, "fit_regression: empty dataset");
    const std::size_t n = xs.rows();
    const bool full_batch = batch_size == 0 || batch_size >= n;

    AdamState adam;
    if (opt.algo == OptimizerSpec::Algo::Adam)
        adam = make_adam_state(net, opt.lr, opt.beta1, opt.beta2, opt.eps);

    std::vector<double> losses;
    losses.reserve(static_cast<std::size_t>(steps));
    Matrix bx, by, grad;
    for (std::int64_t step = 0; step < steps; ++step) {
        const Matrix* px = &xs;
        const Matrix* py = &ys;
        if (!full_batch) {
            bx = Matrix(batch_size, xs.cols());
            by = Matrix(batch_size, ys.cols());
            for (std::size_t b = 0; b < batch_size; ++b) {
                const std::size_t r = rng.uniform_index(n);
                for (std::size_t j = 0; j < xs.cols(); ++j) bx(b, j) = xs(r, j);
                for (std::size_t j = 0; j < ys.cols(); ++j) by(b, j) = ys(r, j);
            }
            px = &bx;
            py = &by;
        }
        const Matrix pred = net.forward(*px);
        const double loss = mse_loss(pred, *py, grad);
        if (!std::isfinite(loss))
            throw NumericalError("fit_regression: non-finite loss at step " +
                                 std::to_string(step));
        net.zero_grad();
        net.backward(grad);
        if (opt.algo == OptimizerSpec::Algo::Adam)
            adam_step(net, adam);
        else
            sgd_step(net, opt.lr);
        losses.push_back(loss);
    }
    return losses;
}

} // namespace lff
