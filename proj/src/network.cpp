#include "lpl/network.hpp"

#include <cmath>
#include <string>

#include "lpl/errors.hpp"
#include "lpl/kernels.hpp"
#include "lpl/rng.hpp"

namespace lpl {

namespace {

void validate_specs(const std::vector<LayerSpec>& specs) {
    if (specs.empty()) throw ConfigError("network needs at least one layer");
    for (std::size_t k = 0; k < specs.size(); ++k) {
        const LayerSpec& s = specs[k];
        if (s.in_dim < 1 || s.out_dim < 1) {
            throw ConfigError("layer " + std::to_string(k) + ": dimensions must be >= 1");
        }
        if (s.activation == Activation::LeakyRelu && (s.leak <= 0.0 || s.leak >= 1.0)) {
            throw ConfigError("layer " + std::to_string(k) + ": leak must lie in (0,1)");
        }
        if (k > 0 && specs[k - 1].out_dim != s.in_dim) {
            throw ConfigError("layer " + std::to_string(k) + ": in_dim " +
                              std::to_string(s.in_dim) + " does not chain with previous out_dim " +
                              std::to_string(specs[k - 1].out_dim));
        }
    }
}

} // namespace

MlpNetwork::MlpNetwork(std::vector<LayerSpec> specs) : specs_(std::move(specs)) {
    validate_specs(specs_);
    weights_.reserve(specs_.size());
    biases_.reserve(specs_.size());
    for (const LayerSpec& s : specs_) {
        weights_.emplace_back(s.in_dim, s.out_dim);
        biases_.emplace_back(s.out_dim, 0.0);
    }
}

std::size_t MlpNetwork::parameter_count() const {
    std::size_t n = 0;
    for (std::size_t k = 0; k < specs_.size(); ++k) n += weights_[k].size() + biases_[k].size();
    return n;
}

MlpNetwork init_network(const std::vector<LayerSpec>& specs, std::uint64_t seed) {
    MlpNetwork net(specs);
    std::mt19937_64 engine = make_engine(seed);
    for (std::size_t k = 0; k < specs.size(); ++k) {
        const LayerSpec& s = specs[k];
        const bool rectifier =
            s.activation == Activation::Relu || s.activation == Activation::LeakyRelu;
        const double scale = std::sqrt((rectifier ? 2.0 : 1.0) / static_cast<double>(s.in_dim));
        fill_gaussian(net.mutable_weight(k), 0.0, scale, engine);
    }
    return net;
}

Matrix network_forward(const MlpNetwork& net, const Matrix& batch, ForwardTrace* trace) {
    if (batch.cols() != net.input_dim()) {
        throw ShapeError("network_forward: batch has " + std::to_string(batch.cols()) +
                         " columns, network expects " + std::to_string(net.input_dim()));
    }
    if (trace) {
        trace->input = batch;
        trace->pre.clear();
        trace->post.clear();
        trace->revision = net.revision();
    }
    Matrix x = batch;
    for (std::size_t k = 0; k < net.layer_count(); ++k) {
        const LayerSpec& s = net.layers()[k];
        Matrix z = matmul(x, net.weight(k));
        add_row_bias(z, net.bias(k));
        Matrix a = apply_activation(s.activation, s.leak, z);
        if (trace) {
            trace->pre.push_back(std::move(z));
            trace->post.push_back(a);
        }
        x = std::move(a);
    }
    return x;
}

Gradients network_backward(const MlpNetwork& net, const ForwardTrace& trace,
                           const Matrix& output_grad) {
    if (trace.revision != net.revision()) {
        throw ContractError("network_backward: trace is stale, network was mutated after forward");
    }
    if (trace.pre.size() != net.layer_count()) {
        throw ContractError("network_backward: trace does not match network depth");
    }
    const Matrix& out = trace.post.back();
    if (!output_grad.same_shape(out)) {
        throw ShapeError("network_backward: output_grad is " + std::to_string(output_grad.rows()) +
                         "x" + std::to_string(output_grad.cols()) + ", output was " +
                         std::to_string(out.rows()) + "x" + std::to_string(out.cols()));
    }

    Gradients grads;
    grads.weights.resize(net.layer_count());
    grads.biases.resize(net.layer_count());

    Matrix delta = output_grad;
    for (std::size_t k = net.layer_count(); k-- > 0;) {
        const LayerSpec& s = net.layers()[k];
        Matrix dact = apply_activation_grad(s.activation, s.leak, trace.pre[k]);
        for (std::size_t i = 0; i < delta.size(); ++i) delta.data()[i] *= dact.data()[i];

        const Matrix& layer_input = k == 0 ? trace.input : trace.post[k - 1];
        grads.weights[k] = matmul_tn(layer_input, delta);
        grads.biases[k] = column_sums(delta);
        delta = matmul_nt(delta, net.weight(k));
    }
    grads.input = std::move(delta);
    return grads;
}

MlpNetwork concat_networks(const MlpNetwork& first, const MlpNetwork& second) {
    if (first.output_dim() != second.input_dim()) {
        throw ConfigError("concat_networks: output dim " + std::to_string(first.output_dim()) +
                          " does not match input dim " + std::to_string(second.input_dim()));
    }
    std::vector<LayerSpec> specs = first.layers();
    specs.insert(specs.end(), second.layers().begin(), second.layers().end());
    MlpNetwork net(specs);
    for (std::size_t k = 0; k < first.layer_count(); ++k) {
        net.mutable_weight(k) = first.weight(k);
        net.mutable_bias(k) = first.bias(k);
    }
    for (std::size_t k = 0; k < second.layer_count(); ++k) {
        net.mutable_weight(first.layer_count() + k) = second.weight(k);
        net.mutable_bias(first.layer_count() + k) = second.bias(k);
    }
    return net;
}

} // namespace lpl
