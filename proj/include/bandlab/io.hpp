// JSON and DOT formats for seeds, bands and reports.
//
// Seed JSON: {vertices: [{id, i, r, color, frozen, label, ...}], arrows: [[src, dst], ...]}
// with one [src, dst] entry per arrow. Band JSON: {n, M, N, rows: [["p/q", ...], ...]}.
#pragma once

#include "bandlab/bands.hpp"
#include "bandlab/quiver.hpp"
#include "bandlab/report.hpp"

#include <json.hpp>

#include <string>

namespace bandlab {

using nlohmann::json;

std::string label_string(const VertexLabel& lab);

json seed_to_json(const Seed& s);
Seed seed_from_json(const json& j);

// Columns by node, rows by r; colors as in the figures.
std::string seed_to_dot(const Seed& s, const std::string& name = "seed");

json band_to_json(const BandWindow& b);
BandWindow band_from_json(const json& j);

struct ReportMeta {
    json params = json::object();
    uint64_t seed = 0;
    int samples = 0;
    double seconds = 0;
};
json report_to_json(const Report& r, const ReportMeta& meta = {});
Report report_from_json(const json& j, ReportMeta* meta = nullptr);

}  // namespace bandlab
