#pragma once

#include "treeharm/config.hpp"

namespace treeharm {

// Subcommand bodies. Each validates its config, writes the CSV, prints a one
// line summary to stdout, and returns the process exit code: 0 on success,
// 1 on a tolerance breach. Usage and domain errors are thrown as
// treeharm::error and mapped to exit 2 by the CLI entry point.
int cmd_invert_roundtrip(const RunConfig& cfg);
int cmd_kernel_check(const RunConfig& cfg);
int cmd_norm_sweep(const RunConfig& cfg);
int cmd_transference(const RunConfig& cfg);
int cmd_spherical_table(const RunConfig& cfg);

// Root word prints as "o", deeper words as dot-joined letters ("0.1.1").
std::string word_label(const Vertex& x);

} // namespace treeharm
