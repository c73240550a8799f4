#pragma once

#include <string>
#include <utility>

#include "sepcrit/qstate.hpp"

namespace sepcrit {

/// Writes a state as JSON: {"dims": [dA, dB], "matrix": [[[re, im], ...], ...]}.
/// Doubles are serialized shortest-round-trip, so read-back is lossless.
void write_state_file(const std::string& path, const DensityMatrix& rho);

/// Reads the raw dims and matrix back; validation is the caller's choice.
/// Throws Error on unreadable or malformed files.
std::pair<BipartiteDims, ComplexMatrix> read_state_file(const std::string& path);

} // namespace sepcrit
