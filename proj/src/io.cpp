#include "bandlab/io.hpp"

#include "bandlab/quiverzoo.hpp"

#include <sstream>
#include <stdexcept>

namespace bandlab {

namespace {

Color parse_color(const std::string& s) {
    if (s == "black") return Color::black;
    if (s == "red") return Color::red;
    if (s == "green") return Color::green;
    throw std::invalid_argument("unknown color '" + s + "'");
}

const char* dot_color(Color c) {
    switch (c) {
        case Color::red: return "red";
        case Color::green: return "forestgreen";
        default: return "black";
    }
}

}  // namespace

std::string label_string(const VertexLabel& lab) {
    if (lab.minor) return minor_to_string(*lab.minor);
    if (lab.theta) return theta_to_string(*lab.theta);
    return "";
}

json seed_to_json(const Seed& s) {
    json verts = json::array();
    for (int v = 0; v < s.quiver.size(); ++v) {
        const auto& x = s.quiver.vertex(v);
        const VertexLabel lab = v < static_cast<int>(s.labels.size()) ? s.labels[v] : VertexLabel{};
        json j{{"id", v}, {"i", x.i}, {"r", x.r}, {"color", color_name(x.color)}, {"frozen", x.frozen}};
        j["label"] = lab.minor || lab.theta ? json(label_string(lab)) : json(nullptr);
        if (lab.minor) j["minor"] = {{"s", lab.minor->s}, {"k", lab.minor->k}, {"l", lab.minor->l}};
        if (lab.theta) j["theta"] = {{"k", lab.theta->k}, {"s", lab.theta->s}};
        j["value"] = lab.value ? json(to_string(*lab.value)) : json(nullptr);
        if (lab.degree) j["degree"] = {{"l", lab.degree->ldeg}, {"r", lab.degree->rdeg}};
        verts.push_back(j);
    }
    json arrows = json::array();
    for (auto [a, b, m] : s.quiver.arrow_list())
        for (int t = 0; t < m; ++t) arrows.push_back({a, b});
    return {{"vertices", verts}, {"arrows", arrows}};
}

Seed seed_from_json(const json& j) {
    Seed s;
    const auto& verts = j.at("vertices");
    for (size_t v = 0; v < verts.size(); ++v) {
        const auto& x = verts[v];
        if (x.at("id").get<size_t>() != v) throw std::invalid_argument("vertex ids must be 0..n-1 in order");
        s.quiver.add_vertex({x.at("i"), x.at("r"), parse_color(x.at("color")), x.at("frozen")});
        VertexLabel lab;
        const int i = x.at("i");
        if (x.contains("minor")) lab.minor = MinorLabel{i, x["minor"].at("s"), x["minor"].at("k"), x["minor"].at("l")};
        if (x.contains("theta")) lab.theta = ThetaLabel{i, x["theta"].at("k"), x["theta"].at("s")};
        if (x.contains("value") && !x["value"].is_null()) lab.value = parse_rational(x["value"].get<std::string>());
        if (x.contains("degree")) lab.degree = BiDegree{x["degree"].at("l").get<Weight>(), x["degree"].at("r").get<Weight>()};
        s.labels.push_back(lab);
    }
    for (const auto& a : j.at("arrows")) {
        const int src = a.at(0), dst = a.at(1);
        if (src < 0 || dst < 0 || src >= s.quiver.size() || dst >= s.quiver.size() || src == dst)
            throw std::invalid_argument("bad arrow in seed JSON");
        s.quiver.add_arrows(src, dst);
    }
    return s;
}

std::string seed_to_dot(const Seed& s, const std::string& name) {
    std::ostringstream out;
    out << "digraph \"" << name << "\" {\n  node [shape=circle, fontsize=10];\n";
    for (int v = 0; v < s.quiver.size(); ++v) {
        const auto& x = s.quiver.vertex(v);
        std::string label = vertex_name(x);
        if (v < static_cast<int>(s.labels.size())) {
            const std::string l = label_string(s.labels[v]);
            if (!l.empty()) label += "\\n" + l;
        }
        out << "  v" << v << " [label=\"" << label << "\", pos=\"" << 2 * x.i << "," << x.r << "!\", color=" << dot_color(x.color)
            << ", fontcolor=" << dot_color(x.color) << (x.frozen ? ", shape=box" : "") << "];\n";
    }
    for (auto [a, b, m] : s.quiver.arrow_list())
        for (int t = 0; t < m; ++t) out << "  v" << a << " -> v" << b << ";\n";
    out << "}\n";
    return out.str();
}

json band_to_json(const BandWindow& b) {
    json rows = json::array();
    for (int r = 0; r < b.rows().rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < b.n(); ++c) row.push_back(to_string(b.rows()(r, c)));
        rows.push_back(row);
    }
    return {{"n", b.n()}, {"M", b.M()}, {"N", b.N()}, {"rows", rows}};
}

BandWindow band_from_json(const json& j) {
    const int n = j.at("n"), M = j.at("M"), N = j.at("N");
    const auto& rows = j.at("rows");
    if (static_cast<int>(rows.size()) != N - M + n) throw std::invalid_argument("band JSON has the wrong number of rows");
    Matrix m(N - M + n, n);
    for (int r = 0; r < m.rows(); ++r) {
        if (static_cast<int>(rows[r].size()) != n) throw std::invalid_argument("band JSON row has the wrong width");
        for (int c = 0; c < n; ++c) m(r, c) = parse_rational(rows[r][c].get<std::string>());
    }
    return BandWindow(n, M, N, std::move(m));
}

json report_to_json(const Report& r, const ReportMeta& meta) {
    return {{"check", r.check},
            {"params", meta.params},
            {"seed", meta.seed},
            {"samples", meta.samples},
            {"instances", r.instances},
            {"passed", r.instances - r.failures},
            {"failures", r.failures},
            {"messages", r.messages},
            {"seconds", meta.seconds},
            {"ok", r.ok()}};
}

Report report_from_json(const json& j, ReportMeta* meta) {
    Report r;
    r.check = j.at("check");
    r.instances = j.at("instances");
    r.failures = j.at("failures");
    r.messages = j.at("messages").get<std::vector<std::string>>();
    if (meta) {
        meta->params = j.value("params", json::object());
        meta->seed = j.value("seed", uint64_t{0});
        meta->samples = j.value("samples", 0);
        meta->seconds = j.value("seconds", 0.0);
    }
    return r;
}

}  // namespace bandlab
