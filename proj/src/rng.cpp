#include "lpl/rng.hpp"

#include <cstring>

#include "lpl/errors.hpp"

namespace lpl {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    std::uint64_t state = seed;
    std::uint64_t h = splitmix64(state);
    state = h ^ (a + 0x9E3779B97F4A7C15ULL);
    h = splitmix64(state);
    state = h ^ (b + 0xD1B54A32D192ED03ULL);
    return splitmix64(state);
}

std::uint64_t content_seed(std::uint64_t seed, const double* values, std::size_t n) {
    std::uint64_t hash = 0xCBF29CE484222325ULL;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t bits;
        std::memcpy(&bits, &values[i], sizeof bits);
        for (int byte = 0; byte < 8; ++byte) {
            hash ^= (bits >> (8 * byte)) & 0xFFU;
            hash *= 0x100000001B3ULL;
        }
    }
    return mix_seed(seed, hash);
}

std::mt19937_64 make_engine(std::uint64_t seed) {
    std::uint64_t state = seed;
    return std::mt19937_64(splitmix64(state));
}

Matrix gaussian_sample(std::size_t rows, std::size_t cols, double mean, double stddev,
                       std::uint64_t seed) {
    if (stddev < 0.0) throw DomainError("gaussian_sample: negative stddev");
    Matrix out(rows, cols, mean);
    if (stddev == 0.0) return out;
    std::mt19937_64 engine = make_engine(seed);
    fill_gaussian(out, mean, stddev, engine);
    return out;
}

void fill_gaussian(Matrix& out, double mean, double stddev, std::mt19937_64& engine) {
    if (stddev < 0.0) throw DomainError("fill_gaussian: negative stddev");
    if (stddev == 0.0) {
        for (std::size_t i = 0; i < out.rows(); ++i)
            for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = mean;
        return;
    }
    std::normal_distribution<double> dist(mean, stddev);
    double* p = out.data();
    for (std::size_t i = 0; i < out.size(); ++i) p[i] = dist(engine);
}

} // namespace lpl
