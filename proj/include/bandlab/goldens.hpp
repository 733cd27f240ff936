// Comparison of built seeds against the hand-transcribed reference files in
// tests/golden. Each file carries a "kind": gamma_tilde, tau, gamma0 or theta.
#pragma once

#include "bandlab/report.hpp"

#include <json.hpp>

#include <string>

namespace bandlab {

Report check_golden(const nlohmann::json& g);
Report check_golden_file(const std::string& path);
// Every *.json file of the directory, in name order.
Report check_golden_dir(const std::string& dir);

}  // namespace bandlab
