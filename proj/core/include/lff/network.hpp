#pragma once

#include "lff/matrix.hpp"
#include "lff/rng.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace lff {

/// Fourier input embedding: x -> [sin(cBx) ; cos(cBx) ; x] with the blocks
/// in that fixed order. c is 2*pi when include_two_pi, else 1. The input
/// block is appended only when concat_input. B has d_fourier/2 rows.
struct FourierLayer {
    Matrix basis; // (d_fourier/2) x d_input
    bool include_two_pi = true;
    bool concat_input = true;
    bool trainable = true;
    Matrix basis_grad;

    std::size_t d_input() const { return basis.cols(); }
    std::size_t half_dim() const { return basis.rows(); }
    std::size_t d_fourier() const { return 2 * basis.rows(); }
    std::size_t output_dim() const { return d_fourier() + (concat_input ? d_input() : 0); }
    double scale() const;
};

/// Batched embedding; rows of x are samples.
Matrix lff_embed(const FourierLayer& layer, const Matrix& x);

/// B entries i.i.d. N(0, sigma^2). d_fourier must be even.
FourierLayer init_gaussian_basis(RngStream& rng, std::size_t d_input, std::size_t d_fourier,
                                 double sigma);

/// Axis-aligned geometric ladder B = (I, cI, c^2 I, ..., c^{k-1} I)^T,
/// 0 < c < 1. d_fourier/2 = k * d_input.
FourierLayer init_loguniform_basis(std::size_t d_input, std::size_t k, double c);

/// y = x W^T + b, optionally scaled by sqrt(2/fan_in) when
/// ntk_parameterization is set (weights then drawn N(0,1)).
struct AffineLayer {
    Matrix weights; // out x in
    Matrix bias;    // 1 x out; empty when has_bias is false
    bool has_bias = true;
    bool ntk_parameterization = false;
    Matrix weights_grad;
    Matrix bias_grad;

    std::size_t fan_in() const { return weights.cols(); }
    std::size_t fan_out() const { return weights.rows(); }
    double scale() const;
};

/// He-uniform weights (the conventional ReLU init), zero bias.
AffineLayer make_affine_he(RngStream& rng, std::size_t in, std::size_t out, bool has_bias = true);
/// N(0,1) weights for NTK-parameterized layers, zero bias.
AffineLayer make_affine_ntk(RngStream& rng, std::size_t in, std::size_t out, bool has_bias = false);

/// Feed-forward stack: optional Fourier embedding, then affine layers with
/// ReLU between consecutive ones (none after the last). forward() caches
/// activations; backward() accumulates exact reverse-mode gradients into
/// the per-layer *_grad buffers (caller zeroes via zero_grad()).
///
/// Single-owner mutable state while training; a frozen network may be
/// read (forward) concurrently only via separate copies.
class Network {
public:
    std::optional<FourierLayer> fourier;
    std::vector<AffineLayer> affines;

    std::size_t input_dim() const;
    std::size_t output_dim() const;
    std::size_t parameter_count() const;

    Matrix forward(const Matrix& x);
    void backward(const Matrix& loss_grad);
    void zero_grad();

    /// Visits parameters in checkpoint order: fourier basis first (when
    /// present), then weights/bias per affine layer. `trainable` is false
    /// only for a frozen Fourier basis.
    void for_each_parameter(
        const std::function<void(const std::string& name, Matrix& value, Matrix& grad,
                                 bool trainable)>& visit);

private:
    struct Cache {
        bool valid = false;
        Matrix input;
        Matrix sin_z, cos_z;                // Fourier trig blocks
        std::vector<Matrix> affine_inputs;  // input of each affine layer
        std::vector<Matrix> preacts;        // output of each affine layer
    };
    Cache cache_;
};

/// Population standard deviation over all basis entries.
double basis_stddev(const FourierLayer& layer);

} // namespace lff
