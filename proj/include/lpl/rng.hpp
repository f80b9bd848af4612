#pragma once

#include <cstdint>
#include <random>

#include "lpl/matrix.hpp"

namespace lpl {

/// splitmix64 step; the library's standard way to whiten / derive seeds.
std::uint64_t splitmix64(std::uint64_t& state);

/// Derives an independent stream seed from (seed, a, b).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

/// Seed derived from a row's contents (FNV-1a over the raw double bits),
/// mixed with `seed`. Used for content-addressed per-row seeding.
std::uint64_t content_seed(std::uint64_t seed, const double* values, std::size_t n);

std::mt19937_64 make_engine(std::uint64_t seed);

/// rows x cols matrix of N(mean, stddev^2) draws; stddev == 0 yields a
/// constant matrix. Pure function of (seed, shape, mean, stddev).
Matrix gaussian_sample(std::size_t rows, std::size_t cols, double mean, double stddev,
                       std::uint64_t seed);

/// Fills `out` from an existing engine (one sequential stream).
void fill_gaussian(Matrix& out, double mean, double stddev, std::mt19937_64& engine);

} // namespace lpl
