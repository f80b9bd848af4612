#pragma once

#include <string>
#include <vector>

#include "lpl/matrix.hpp"

namespace lpl {

/// Codes recovered by reversing a batch of data points through a generator,
/// one row per point, with the final reversal loss of each row and a label
/// describing where they came from (dataset id + generator checkpoint id).
struct LatentCodeSet {
    Matrix codes;
    std::vector<double> reversal_losses;
    std::string source;

    std::size_t count() const { return codes.rows(); }
    std::size_t dim() const { return codes.cols(); }
};

/// Binary persistence (magic "LPLC", little-endian, 64-bit floats).
void write_codes(const LatentCodeSet& set, const std::string& path);
LatentCodeSet read_codes(const std::string& path);

} // namespace lpl
