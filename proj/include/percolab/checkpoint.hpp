#pragma once

#include <string>

#include "percolab/estimator.hpp"

namespace percolab {

// Flat little-endian binary checkpoint holding batched event counts; the
// exact layout is documented in docs/formats.md. Save overwrites the target
// file. Load throws std::runtime_error on missing files, bad magic or
// version, truncation, or checksum mismatch.
void save_checkpoint(const std::string& path, const BatchedCounts& counts);
BatchedCounts load_checkpoint(const std::string& path);

}  // namespace percolab
