#pragma once

#include <string>

#include "plasmod/config.hpp"
#include "plasmod/sweep.hpp"

namespace plasmod {

// Shortest decimal that round-trips to the same double ("nan", "inf", "-inf"
// for non-finite values). Keeps output byte-identical across runs.
[[nodiscard]] std::string format_double(double v);

// Full CSV document: '#'-prefixed metadata block (version, units note,
// config echo), a header row, one data row per sweep row.
[[nodiscard]] std::string to_csv(const SweepResult& result, const RunConfig& config);

// Writes to_csv() to path; throws std::runtime_error naming the path on I/O
// failure.
void emit_csv(const SweepResult& result, const RunConfig& config,
              const std::string& path);

}  // namespace plasmod
