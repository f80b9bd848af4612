#include "lpl/checkpoint.hpp"

#include <fstream>

#include "binary_io.hpp"
#include "lpl/errors.hpp"

namespace lpl {

namespace {

constexpr char kMagic[] = "LPL1";
constexpr std::uint32_t kVersion = 1;

void put_network(std::ostream& os, const MlpNetwork& net) {
    bin::put_u32(os, static_cast<std::uint32_t>(net.layer_count()));
    for (const LayerSpec& s : net.layers()) {
        bin::put_u32(os, static_cast<std::uint32_t>(s.in_dim));
        bin::put_u32(os, static_cast<std::uint32_t>(s.out_dim));
        bin::put_u8(os, static_cast<std::uint8_t>(s.activation));
        bin::put_f64(os, s.leak);
    }
    for (std::size_t k = 0; k < net.layer_count(); ++k) {
        bin::put_doubles(os, net.weight(k).data(), net.weight(k).size());
        bin::put_doubles(os, net.bias(k).data(), net.bias(k).size());
    }
}

MlpNetwork get_network(bin::Reader& r) {
    const std::uint32_t n_layers = r.u32();
    if (n_layers == 0 || n_layers > 1024) r.fail("implausible layer count");
    std::vector<LayerSpec> specs(n_layers);
    for (LayerSpec& s : specs) {
        s.in_dim = r.u32();
        s.out_dim = r.u32();
        const std::uint8_t kind = r.u8();
        if (kind > static_cast<std::uint8_t>(Activation::Sigmoid)) {
            r.fail("unknown activation tag " + std::to_string(kind));
        }
        s.activation = static_cast<Activation>(kind);
        s.leak = r.f64();
    }
    MlpNetwork net(specs);
    for (std::size_t k = 0; k < net.layer_count(); ++k) {
        r.doubles(net.mutable_weight(k).data(), net.weight(k).size());
        r.doubles(net.mutable_bias(k).data(), net.bias(k).size());
    }
    return net;
}

void put_opt(std::ostream& os, const RmsPropState& state) {
    bin::put_f64(os, state.decay);
    bin::put_f64(os, state.epsilon);
    bin::put_f64(os, state.step_size);
    for (std::size_t k = 0; k < state.weight_acc.size(); ++k) {
        bin::put_doubles(os, state.weight_acc[k].data(), state.weight_acc[k].size());
        bin::put_doubles(os, state.bias_acc[k].data(), state.bias_acc[k].size());
    }
}

RmsPropState get_opt(bin::Reader& r, const MlpNetwork& net) {
    RmsPropState state = make_rmsprop_state(net);
    state.decay = r.f64();
    state.epsilon = r.f64();
    state.step_size = r.f64();
    for (std::size_t k = 0; k < state.weight_acc.size(); ++k) {
        r.doubles(state.weight_acc[k].data(), state.weight_acc[k].size());
        r.doubles(state.bias_acc[k].data(), state.bias_acc[k].size());
    }
    return state;
}

void put_prior(std::ostream& os, const PriorSpec& prior) {
    if (!prior.induced()) {
        bin::put_u8(os, 0);
        bin::put_u32(os, static_cast<std::uint32_t>(prior.dim));
        bin::put_f64(os, prior.sigma);
        return;
    }
    bin::put_u8(os, 1);
    put_network(os, *prior.mapping);
    put_prior(os, *prior.base);
}

PriorSpec get_prior(bin::Reader& r) {
    const std::uint8_t tag = r.u8();
    if (tag == 0) {
        const std::uint32_t dim = r.u32();
        const double sigma = r.f64();
        return PriorSpec::isotropic(dim, sigma);
    }
    if (tag == 1) {
        MlpNetwork mapping = get_network(r);
        PriorSpec base = get_prior(r);
        return PriorSpec::induced_from(std::move(mapping), std::move(base));
    }
    r.fail("unknown prior tag " + std::to_string(tag));
}

} // namespace

void write_checkpoint(const GanModel& model, const std::string& path) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("write_checkpoint: cannot open " + path);
    os.write(kMagic, 4);
    bin::put_u32(os, kVersion);
    put_network(os, model.generator);
    put_network(os, model.discriminator);
    put_opt(os, model.gen_opt);
    put_opt(os, model.disc_opt);
    put_prior(os, model.prior);
    bin::put_u64(os, model.step);
    if (!os) throw IoError("write_checkpoint: write failed for " + path);
}

GanModel read_checkpoint(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("read_checkpoint: cannot open " + path);
    bin::Reader r(is, path);
    r.expect_magic(kMagic, 4, "checkpoint");
    const std::uint32_t version = r.u32();
    if (version != kVersion) {
        r.fail("unsupported checkpoint version " + std::to_string(version));
    }
    GanModel model;
    model.generator = get_network(r);
    model.discriminator = get_network(r);
    model.gen_opt = get_opt(r, model.generator);
    model.disc_opt = get_opt(r, model.discriminator);
    model.prior = get_prior(r);
    model.step = r.u64();
    return model;
}

} // namespace lpl
