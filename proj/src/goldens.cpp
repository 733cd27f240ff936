#include "bandlab/goldens.hpp"

#include "bandlab/quiverzoo.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

namespace bandlab {

namespace {

using nlohmann::json;
using Pos = std::pair<int, int>;

Pos pos(const json& p) { return {p[0].get<int>(), p[1].get<int>()}; }
std::string pos_name(Pos p) { return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")"; }

CoxeterElement coxeter_of(const json& g) { return make_coxeter(parse_type(g.at("type")), g.at("word").get<Word>()); }

Weight weight_expr(const CoxeterElement& c, const json& terms, bool with_power) {
    Weight w = zero_weight(c.data);
    for (const auto& t : terms) {
        if (with_power) w = w + scale(coxeter_power_weight(c, t[2], t[1]), t[0]);
        else w = w + scale(fundamental(c.data, t[1]), t[0]);
    }
    return w;
}

struct Skip {
    bool frozen_pairs = false;
    std::set<Pos> boundary;
};

// Vertex ids for the listed vertices; -1 entries are reported.
std::vector<int> locate(Report& rep, const Quiver& q, const json& verts) {
    std::vector<int> ids;
    for (const auto& v : verts) {
        const int r = v.contains("r") ? v["r"].get<int>() : v["s"].get<int>();
        const int id = q.find(v["i"], r);
        rep.expect(id >= 0, "missing vertex " + pos_name({v["i"], r}));
        ids.push_back(id);
    }
    return ids;
}

void check_arrows(Report& rep, const Quiver& q, const std::vector<int>& ids, const json& arrows, const Skip& skip) {
    auto skipped = [&](Pos a, Pos b, int x, int y) {
        if (skip.boundary.count(a) && skip.boundary.count(b)) return true;
        return skip.frozen_pairs && q.vertex(x).frozen && q.vertex(y).frozen;
    };
    std::set<std::pair<Pos, Pos>> want, got;
    for (const auto& a : arrows) {
        const Pos s = pos(a[0]), t = pos(a[1]);
        const int x = q.find(s.first, s.second), y = q.find(t.first, t.second);
        if (x < 0 || y < 0) {
            rep.fail("arrow endpoint missing " + pos_name(s) + "->" + pos_name(t));
            continue;
        }
        if (!skipped(s, t, x, y)) want.insert({s, t});
    }
    for (int x : ids)
        for (int y : ids) {
            if (x < 0 || y < 0 || q.b(x, y) <= 0) continue;
            const Pos s{q.vertex(x).i, q.vertex(x).r}, t{q.vertex(y).i, q.vertex(y).r};
            rep.expect(q.b(x, y) == 1, "multiple arrow " + pos_name(s) + "->" + pos_name(t));
            if (!skipped(s, t, x, y)) got.insert({s, t});
        }
    for (const auto& a : want) rep.expect(got.count(a), "missing arrow " + pos_name(a.first) + "->" + pos_name(a.second));
    for (const auto& a : got) rep.expect(want.count(a), "extra arrow " + pos_name(a.first) + "->" + pos_name(a.second));
}

void check_vertices(Report& rep, const Seed& seed, const std::vector<int>& ids, const json& verts, bool nf) {
    for (size_t n = 0; n < ids.size(); ++n) {
        if (ids[n] < 0) continue;
        const auto& v = verts[n];
        const auto& x = seed.quiver.vertex(ids[n]);
        const std::string at = vertex_name(x);
        if (v.contains("color")) rep.expect(color_name(x.color) == v["color"].get<std::string>(), "color at " + at);
        if (v.contains("frozen")) rep.expect(x.frozen == v["frozen"].get<bool>(), "frozen flag at " + at);
        if (v.contains("label")) {
            const MinorLabel want{x.i, v["label"][0], v["label"][1], v["label"][2]};
            const auto& got = seed.labels[ids[n]].minor;
            const bool ok = got && (nf ? normal_form(*got) == normal_form(want) : *got == want);
            rep.expect(ok, "label at " + at + ": want " + minor_to_string(want) + ", got " + (got ? minor_to_string(*got) : "none"));
        }
    }
}

Report gamma_tilde(const json& g) {
    Report rep;
    const auto c = coxeter_of(g);
    const Seed s = build_gamma_tilde_window(c, g["window"][0], g["window"][1]);
    const bool section = g.value("mode", "exact") == "section";
    Skip skip;
    if (g.contains("boundary"))
        for (const auto& p : g["boundary"]) skip.boundary.insert(pos(p));
    if (!section) rep.expect(s.quiver.size() == static_cast<int>(g["vertices"].size()), "vertex count");
    const auto ids = locate(rep, s.quiver, g["vertices"]);
    if (section)
        for (int id : ids)
            if (id >= 0 && !skip.boundary.count({s.quiver.vertex(id).i, s.quiver.vertex(id).r}))
                rep.expect(!s.quiver.vertex(id).frozen, "interior vertex " + vertex_name(s.quiver.vertex(id)) + " is frozen");
    check_vertices(rep, s, ids, g["vertices"], false);
    check_arrows(rep, s.quiver, ids, g["arrows"], skip);
    return rep;
}

Report tau(const json& g) {
    Report rep;
    const auto c = coxeter_of(g);
    const int M = g["window"][0], N = g["window"][1];
    const Seed w = build_gamma_tilde_window(c, M, N);
    const auto ids = locate(rep, w.quiver, g["quiver1"]["vertices"]);
    check_vertices(rep, w, ids, g["quiver1"]["vertices"], false);
    check_arrows(rep, w.quiver, ids, g["quiver1"]["arrows"], {});

    const Seed post = mutate_sequence(w, schedule_tau(w, Color::red));
    check_arrows(rep, post.quiver, ids, g["quiver2"]["arrows"], {});
    const TauPrediction pred = predict_tau(c, M, N, 1);
    const auto& q2 = g["quiver2"]["vertices"];
    for (size_t n = 0; n < ids.size(); ++n) {
        const int v = ids[n];
        if (v < 0) continue;
        const MinorLabel now = post.labels[v].minor ? *post.labels[v].minor : *pred.shifted.labels[pred.map[v]].minor;
        const MinorLabel want{post.quiver.vertex(v).i, q2[n]["label"][0], q2[n]["label"][1], q2[n]["label"][2]};
        rep.expect(normal_form(now) == normal_form(want), "label after tau_red at " + vertex_name(post.quiver.vertex(v)));
    }
    const auto& q4 = g["quiver4"]["vertices"];
    const auto ids4 = locate(rep, post.quiver, q4);
    for (size_t n = 0; n < ids4.size(); ++n) {
        const int v = ids4[n];
        if (v < 0) continue;
        const int img = pred.map[v];
        const MinorLabel want{post.quiver.vertex(v).i, q4[n]["label"][0], q4[n]["label"][1], q4[n]["label"][2]};
        rep.expect(img >= 0 && *pred.shifted.labels[img].minor == want, "translated label at " + vertex_name(post.quiver.vertex(v)));
        if (img >= 0)
            rep.expect(color_name(pred.shifted.quiver.vertex(img).color) == q4[n]["color"].get<std::string>(),
                       "translated color at " + vertex_name(post.quiver.vertex(v)));
    }
    return rep;
}

Report gamma0(const json& g) {
    Report rep;
    const auto c = coxeter_of(g);
    const Seed s = build_gamma0(c);
    rep.expect(s.quiver.size() == static_cast<int>(g["vertices"].size()), "vertex count");
    const auto ids = locate(rep, s.quiver, g["vertices"]);
    check_vertices(rep, s, ids, g["vertices"], true);
    Skip skip;
    skip.frozen_pairs = g.value("ignore_frozen_frozen", false);
    check_arrows(rep, s.quiver, ids, g["arrows"], skip);

    const auto steps = schedule_M(c, s);
    if (g.contains("schedule")) {
        rep.expect(steps.size() == g["schedule"].size(), "schedule length");
        for (size_t n = 0; n < std::min(steps.size(), g["schedule"].size()); ++n) {
            const auto& x = s.quiver.vertex(steps[n].vertex);
            rep.expect(Pos{x.i, x.r} == pos(g["schedule"][n]), "schedule step " + std::to_string(n + 1));
        }
    }
    std::vector<int> sched;
    for (const auto& st : steps) sched.push_back(st.vertex);
    const Seed after = mutate_sequence(s, sched);
    for (size_t n = 0; n < ids.size(); ++n) {
        if (ids[n] < 0) continue;
        const auto& v = g["vertices"][n];
        const std::string at = vertex_name(s.quiver.vertex(ids[n]));
        if (v.contains("degree")) {
            const BiDegree want{weight_expr(c, v["degree"]["l"], true), weight_expr(c, v["degree"]["r"], false)};
            rep.expect(*s.labels[ids[n]].degree == want, "degree at " + at);
        }
        if (v.contains("degree_after_M")) {
            const BiDegree want{weight_expr(c, v["degree_after_M"]["l"], true), weight_expr(c, v["degree_after_M"]["r"], false)};
            rep.expect(*after.labels[ids[n]].degree == want, "degree after M at " + at);
        }
    }
    return rep;
}

Report theta(const json& g) {
    Report rep;
    const auto c = coxeter_of(g);
    const int layers = g["layers"];
    const ThetaSeed t = build_theta_seed(c, layers + 1, g["base"]);
    const auto ids = locate(rep, t.seed.quiver, g["vertices"]);
    for (size_t n = 0; n < ids.size(); ++n) {
        if (ids[n] < 0) continue;
        const auto& v = g["vertices"][n];
        const int i = v["i"], s = v["s"], want = v["n"];
        rep.expect(t.n[i - 1][s - 1] == want, "n" + pos_name({i, s}) + " = " + std::to_string(t.n[i - 1][s - 1]) + ", want " + std::to_string(want));
        rep.expect(*t.seed.labels[ids[n]].theta == ThetaLabel{i, s, want}, "theta label at " + pos_name({i, s}));
    }
    check_arrows(rep, t.seed.quiver, ids, g["arrows"], {});
    return rep;
}

}  // namespace

Report check_golden(const json& g) {
    const std::string kind = g.at("kind");
    Report rep;
    if (kind == "gamma_tilde") rep = gamma_tilde(g);
    else if (kind == "tau") rep = tau(g);
    else if (kind == "gamma0") rep = gamma0(g);
    else if (kind == "theta") rep = theta(g);
    else throw std::invalid_argument("unknown golden kind '" + kind + "'");
    rep.check = "golden-" + kind;
    return rep;
}

Report check_golden_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    Report r = check_golden(json::parse(in));
    const std::string name = std::filesystem::path(path).filename().string();
    for (auto& m : r.messages) m = name + ": " + m;
    return r;
}

Report check_golden_dir(const std::string& dir) {
    std::vector<std::string> files;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.path().extension() == ".json") files.push_back(e.path().string());
    std::sort(files.begin(), files.end());
    Report rep;
    rep.check = "goldens";
    for (const auto& f : files) rep.merge(check_golden_file(f));
    if (files.empty()) rep.fail("no golden files in " + dir);
    return rep;
}

}  // namespace bandlab
