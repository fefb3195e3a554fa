#include "lff/network.hpp"

#include "lff/errors.hpp"

#include <cmath>
#include <numbers>

namespace lff {

double FourierLayer::scale() const { return include_two_pi ? 2.0 * std::numbers::pi : 1.0; }

Matrix lff_embed(const FourierLayer& layer, const Matrix& x) {
    LFF_REQUIRE(x.cols() == layer.d_input(),
                "lff_embed: input dim " + std::to_string(x.cols()) + " != basis dim " +
                    std::to_string(layer.d_input()));
    const std::size_t batch = x.rows();
    const std::size_t h = layer.half_dim();
    const double c = layer.scale();
    Matrix z = matmul(x, transpose(layer.basis)); // batch x h
    Matrix out(batch, layer.output_dim());
    for (std::size_t i = 0; i < batch; ++i) {
        for (std::size_t j = 0; j < h; ++j) {
            const double a = c * z(i, j);
            out(i, j) = std::sin(a);
            out(i, h + j) = std::cos(a);
        }
        if (layer.concat_input)
            for (std::size_t j = 0; j < x.cols(); ++j) out(i, 2 * h + j) = x(i, j);
    }
    return out;
}

FourierLayer init_gaussian_basis(RngStream& rng, std::size_t d_input, std::size_t d_fourier,
                                 double sigma) {
    LFF_REQUIRE(d_fourier % 2 == 0, "init_gaussian_basis: d_fourier must be even");
    LFF_REQUIRE(sigma >= 0.0, "init_gaussian_basis: negative sigma");
    FourierLayer layer;
    layer.basis = gaussian_sample(rng, d_fourier / 2, d_input, sigma);
    layer.basis_grad = Matrix(d_fourier / 2, d_input);
    return layer;
}

FourierLayer init_loguniform_basis(std::size_t d_input, std::size_t k, double c) {
    LFF_REQUIRE(k >= 1, "init_loguniform_basis: k must be >= 1");
    LFF_REQUIRE(c > 0.0 && c < 1.0, "init_loguniform_basis: c must lie in (0,1)");
    FourierLayer layer;
    layer.basis = Matrix(k * d_input, d_input);
    double factor = 1.0;
    for (std::size_t block = 0; block < k; ++block) {
        for (std::size_t j = 0; j < d_input; ++j)
            layer.basis(block * d_input + j, j) = factor;
        factor *= c;
    }
    layer.basis_grad = Matrix(k * d_input, d_input);
    return layer;
}

double AffineLayer::scale() const {
    return ntk_parameterization ? std::sqrt(2.0 / static_cast<double>(fan_in())) : 1.0;
}

AffineLayer make_affine_he(RngStream& rng, std::size_t in, std::size_t out, bool has_bias) {
    AffineLayer layer;
    layer.weights = Matrix(out, in);
    const double limit = std::sqrt(6.0 / static_cast<double>(in));
    for (double& w : layer.weights.values()) w = rng.uniform(-limit, limit);
    layer.weights_grad = Matrix(out, in);
    layer.has_bias = has_bias;
    if (has_bias) {
        layer.bias = Matrix(1, out);
        layer.bias_grad = Matrix(1, out);
    }
    return layer;
}

AffineLayer make_affine_ntk(RngStream& rng, std::size_t in, std::size_t out, bool has_bias) {
    AffineLayer layer;
    layer.weights = gaussian_sample(rng, out, in, 1.0);
    layer.weights_grad = Matrix(out, in);
    layer.ntk_parameterization = true;
    layer.has_bias = has_bias;
    if (has_bias) {
        layer.bias = Matrix(1, out);
        layer.bias_grad = Matrix(1, out);
    }
    return layer;
}

std::size_t Network::input_dim() const {
    if (fourier) return fourier->d_input();
    LFF_REQUIRE(!affines.empty(), "Network: no layers");
    return affines.front().fan_in();
}

std::size_t Network::output_dim() const {
    LFF_REQUIRE(!affines.empty(), "Network: no layers");
    return affines.back().fan_out();
}

std::size_t Network::parameter_count() const {
    std::size_t n = 0;
    if (fourier) n += fourier->basis.size();
    for (const AffineLayer& a : affines) n += a.weights.size() + a.bias.size();
    return n;
}

Matrix Network::forward(const Matrix& x) {
    LFF_REQUIRE(x.cols() == input_dim(), "Network::forward: input dim mismatch");
    cache_ = Cache{};
    cache_.input = x;

    Matrix cur;
    if (fourier) {
        const std::size_t h = fourier->half_dim();
        const double c = fourier->scale();
        Matrix z = matmul(x, transpose(fourier->basis));
        cache_.sin_z = Matrix(x.rows(), h);
        cache_.cos_z = Matrix(x.rows(), h);
        for (std::size_t i = 0; i < x.rows(); ++i)
            for (std::size_t j = 0; j < h; ++j) {
                const double a = c * z(i, j);
                cache_.sin_z(i, j) = std::sin(a);
                cache_.cos_z(i, j) = std::cos(a);
            }
        cur = Matrix(x.rows(), fourier->output_dim());
        for (std::size_t i = 0; i < x.rows(); ++i) {
            for (std::size_t j = 0; j < h; ++j) {
                cur(i, j) = cache_.sin_z(i, j);
                cur(i, h + j) = cache_.cos_z(i, j);
            }
            if (fourier->concat_input)
                for (std::size_t j = 0; j < x.cols(); ++j) cur(i, 2 * h + j) = x(i, j);
        }
    } else {
        cur = x;
    }

    cache_.affine_inputs.reserve(affines.size());
    cache_.preacts.reserve(affines.size());
    for (std::size_t l = 0; l < affines.size(); ++l) {
        const AffineLayer& layer = affines[l];
        LFF_REQUIRE(cur.cols() == layer.fan_in(),
                    "Network::forward: layer " + std::to_string(l) + " expects fan_in " +
                        std::to_string(layer.fan_in()) + ", got " + std::to_string(cur.cols()));
        cache_.affine_inputs.push_back(cur);
        Matrix pre = matmul(cur, transpose(layer.weights));
        const double s = layer.scale();
        if (s != 1.0) pre *= s;
        if (layer.has_bias)
            for (std::size_t i = 0; i < pre.rows(); ++i)
                for (std::size_t j = 0; j < pre.cols(); ++j) pre(i, j) += layer.bias(0, j);
        cache_.preacts.push_back(pre);
        if (l + 1 < affines.size()) {
            // ReLU between affines; derivative at exactly 0 is taken as 0.
            cur = pre;
            for (double& v : cur.values()) v = v > 0.0 ? v : 0.0;
        } else {
            cur = pre;
        }
    }
    cache_.valid = true;
    return cur;
}

void Network::backward(const Matrix& loss_grad) {
    LFF_REQUIRE(cache_.valid, "Network::backward: call forward first");
    LFF_REQUIRE(loss_grad.rows() == cache_.input.rows() &&
                    loss_grad.cols() == output_dim(),
                "Network::backward: loss_grad shape mismatch");

    Matrix g = loss_grad;
    for (std::size_t idx = affines.size(); idx-- > 0;) {
        AffineLayer& layer = affines[idx];
        const Matrix& a_in = cache_.affine_inputs[idx];
        const double s = layer.scale();

        Matrix wg = matmul(transpose(g), a_in);
        if (s != 1.0) wg *= s;
        layer.weights_grad += wg;
        if (layer.has_bias)
            for (std::size_t i = 0; i < g.rows(); ++i)
                for (std::size_t j = 0; j < g.cols(); ++j) layer.bias_grad(0, j) += g(i, j);

        const bool need_input_grad = idx > 0 || fourier.has_value();
        if (!need_input_grad) break;
        Matrix gi = matmul(g, layer.weights);
        if (s != 1.0) gi *= s;
        if (idx > 0) {
            const Matrix& pre = cache_.preacts[idx - 1];
            for (std::size_t i = 0; i < gi.size(); ++i)
                if (pre.values()[i] <= 0.0) gi.values()[i] = 0.0;
        }
        g = gi;
    }

    if (fourier && fourier->trainable) {
        const std::size_t h = fourier->half_dim();
        // d/dz [sin;cos] chain: g_z = g_sin .* cos(z) - g_cos .* sin(z)
        Matrix gz(g.rows(), h);
        for (std::size_t i = 0; i < g.rows(); ++i)
            for (std::size_t j = 0; j < h; ++j)
                gz(i, j) = g(i, j) * cache_.cos_z(i, j) - g(i, h + j) * cache_.sin_z(i, j);
        Matrix bg = matmul(transpose(gz), cache_.input);
        bg *= fourier->scale();
        fourier->basis_grad += bg;
    }
}

void Network::zero_grad() {
    if (fourier) fourier->basis_grad.fill(0.0);
    for (AffineLayer& a : affines) {
        a.weights_grad.fill(0.0);
        if (a.has_bias) a.bias_grad.fill(0.0);
    }
}

void Network::for_each_parameter(
    const std::function<void(const std::string&, Matrix&, Matrix&, bool)>& visit) {
    if (fourier) visit("fourier.basis", fourier->basis, fourier->basis_grad, fourier->trainable);
    for (std::size_t l = 0; l < affines.size(); ++l) {
        const std::string prefix = "affine" + std::to_string(l);
        visit(prefix + ".weights", affines[l].weights, affines[l].weights_grad, true);
        if (affines[l].has_bias) visit(prefix + ".bias", affines[l].bias, affines[l].bias_grad, true);
    }
}

double basis_stddev(const FourierLayer& layer) {
    const std::size_t n = layer.basis.size();
    if (n == 0) return 0.0;
    double mean = 0.0;
    for (double v : layer.basis.values()) mean += v;
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (double v : layer.basis.values()) var += (v - mean) * (v - mean);
    return std::sqrt(var / static_cast<double>(n));
}

} // namespace lff
