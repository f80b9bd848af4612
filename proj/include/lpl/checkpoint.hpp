#pragma once

#include <string>

#include "lpl/gan.hpp"

namespace lpl {

/// Versioned binary checkpoint (magic "LPL1", little-endian, 64-bit floats):
/// both networks with their layer specs, optimizer accumulators, the prior
/// (including induced mappings), and the training step. Round-trips bitwise.
void write_checkpoint(const GanModel& model, const std::string& path);

/// Throws ParseError on bad magic, version mismatch, or truncation; never
/// returns a partially read model.
GanModel read_checkpoint(const std::string& path);

} // namespace lpl
