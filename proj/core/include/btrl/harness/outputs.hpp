#pragma once

#include <string>

#include "btrl/harness/experiment.hpp"

namespace btrl::harness {

// Shortest round-trip formatting (to_chars); deterministic across runs.
std::string format_number(double v);
// Fixed six decimal places, for the CSV columns.
std::string format_fixed(double v);

// Writes accuracy.csv, behaviors.csv, trace.jsonl, and plot.gp into
// results.config.output_dir, creating the directory if needed. Identical
// results give byte-identical files.
void write_outputs(const ExperimentResults& results);

}  // namespace btrl::harness
