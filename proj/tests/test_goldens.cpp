// Hand-transcribed reference seeds, compared vertex by vertex.
#include "bandlab/quiverzoo.hpp"

#include <doctest.h>
#include <json.hpp>

#include <fstream>
#include <set>

using namespace bandlab;
using nlohmann::json;

namespace {

json load(const std::string& name) {
    std::ifstream in(std::string(BANDLAB_GOLDEN_DIR) + "/" + name);
    REQUIRE(in.good());
    return json::parse(in);
}

CoxeterElement coxeter_of(const json& g) { return make_coxeter(parse_type(g["type"]), g["word"].get<Word>()); }

using Pos = std::pair<int, int>;
Pos pos(const json& p) { return {p[0].get<int>(), p[1].get<int>()}; }

// Weight sum of coef * c^p varpi_j terms.
Weight weight_expr(const CoxeterElement& c, const json& terms, bool with_power) {
    Weight w = zero_weight(c.data);
    for (const auto& t : terms) {
        if (with_power) w = w + scale(coxeter_power_weight(c, t[2], t[1]), t[0]);
        else w = w + scale(fundamental(c.data, t[1]), t[0]);
    }
    return w;
}

struct Compare {
    bool section = false;
    bool ignore_frozen_frozen = false;
    std::set<Pos> boundary;
};

std::vector<int> locate(const Quiver& q, const json& verts) {
    std::vector<int> ids;
    for (const auto& v : verts) {
        int id = q.find(v["i"], v.contains("r") ? v["r"].get<int>() : v["s"].get<int>());
        INFO("vertex (" << v["i"] << "," << v.value("r", v.value("s", 0)) << ")");
        REQUIRE(id >= 0);
        ids.push_back(id);
    }
    return ids;
}

void check_arrows(const Quiver& q, const std::vector<int>& ids, const json& arrows, const Compare& cmp) {
    std::set<std::pair<Pos, Pos>> want, got;
    auto skip = [&](Pos a, Pos b, int x, int y) {
        if (cmp.boundary.count(a) && cmp.boundary.count(b)) return true;
        return cmp.ignore_frozen_frozen && q.vertex(x).frozen && q.vertex(y).frozen;
    };
    for (const auto& a : arrows) {
        Pos s = pos(a[0]), t = pos(a[1]);
        int x = q.find(s.first, s.second), y = q.find(t.first, t.second);
        REQUIRE(x >= 0);
        REQUIRE(y >= 0);
        if (!skip(s, t, x, y)) want.insert({s, t});
    }
    for (int x : ids)
        for (int y : ids) {
            if (q.b(x, y) <= 0) continue;
            CHECK(q.b(x, y) == 1);
            Pos s{q.vertex(x).i, q.vertex(x).r}, t{q.vertex(y).i, q.vertex(y).r};
            if (!skip(s, t, x, y)) got.insert({s, t});
        }
    for (const auto& a : want) {
        INFO("missing arrow (" << a.first.first << "," << a.first.second << ")->(" << a.second.first << "," << a.second.second << ")");
        CHECK(got.count(a));
    }
    for (const auto& a : got) {
        INFO("extra arrow (" << a.first.first << "," << a.first.second << ")->(" << a.second.first << "," << a.second.second << ")");
        CHECK(want.count(a));
    }
}

Color parse_color(const std::string& s) { return s == "red" ? Color::red : s == "green" ? Color::green : Color::black; }

void check_vertices(const Seed& seed, const std::vector<int>& ids, const json& verts, bool nf) {
    for (size_t n = 0; n < ids.size(); ++n) {
        const auto& v = verts[n];
        const auto& x = seed.quiver.vertex(ids[n]);
        INFO("vertex " << vertex_name(x));
        if (v.contains("color")) CHECK(color_name(x.color) == v["color"].get<std::string>());
        if (v.contains("frozen")) CHECK(x.frozen == v["frozen"].get<bool>());
        if (v.contains("label")) {
            MinorLabel want{x.i, v["label"][0], v["label"][1], v["label"][2]};
            REQUIRE(seed.labels[ids[n]].minor);
            if (nf) CHECK(normal_form(*seed.labels[ids[n]].minor) == normal_form(want));
            else CHECK(*seed.labels[ids[n]].minor == want);
        }
    }
}

}  // namespace

TEST_CASE("A2 window seeds") {
    for (const char* name : {"a2_window_m2_1.json", "a2_window_m1_1.json"}) {
        INFO(name);
        json g = load(name);
        auto c = coxeter_of(g);
        Seed s = build_gamma_tilde_window(c, g["window"][0], g["window"][1]);
        CHECK(s.quiver.size() == static_cast<int>(g["vertices"].size()));
        auto ids = locate(s.quiver, g["vertices"]);
        check_vertices(s, ids, g["vertices"], false);
        check_arrows(s.quiver, ids, g["arrows"], {});
        CHECK(max_rank_check(s.quiver));
    }
}

TEST_CASE("infinite quiver sections") {
    for (const char* name : {"a2_section.json", "a3_section.json"}) {
        INFO(name);
        json g = load(name);
        auto c = coxeter_of(g);
        Seed s = build_gamma_tilde_window(c, g["window"][0], g["window"][1]);
        Compare cmp;
        cmp.section = true;
        for (const auto& p : g["boundary"]) cmp.boundary.insert(pos(p));
        auto ids = locate(s.quiver, g["vertices"]);
        for (int id : ids)
            if (!cmp.boundary.count({s.quiver.vertex(id).i, s.quiver.vertex(id).r})) CHECK_FALSE(s.quiver.vertex(id).frozen);
        check_vertices(s, ids, g["vertices"], false);
        check_arrows(s.quiver, ids, g["arrows"], cmp);
    }
}

TEST_CASE("tau_red in A2") {
    json g = load("a2_tau_red.json");
    auto c = coxeter_of(g);
    const int M = g["window"][0], N = g["window"][1];
    Seed w = build_gamma_tilde_window(c, M, N);
    auto ids = locate(w.quiver, g["quiver1"]["vertices"]);
    check_vertices(w, ids, g["quiver1"]["vertices"], false);
    check_arrows(w.quiver, ids, g["quiver1"]["arrows"], {});

    Seed post = mutate_sequence(w, schedule_tau(w, Color::red));
    CHECK(post.trace.size() == 3);
    check_arrows(post.quiver, ids, g["quiver2"]["arrows"], {});
    TauPrediction pred = predict_tau(c, M, N, 1);
    const auto& q2 = g["quiver2"]["vertices"];
    const auto& q4 = g["quiver4"]["vertices"];
    auto ids4 = locate(post.quiver, q4);
    for (size_t n = 0; n < ids.size(); ++n) {
        const int v = ids[n];
        INFO("vertex " << vertex_name(post.quiver.vertex(v)));
        MinorLabel now = post.labels[v].minor ? *post.labels[v].minor : *pred.shifted.labels[pred.map[v]].minor;
        MinorLabel want{post.quiver.vertex(v).i, q2[n]["label"][0], q2[n]["label"][1], q2[n]["label"][2]};
        CHECK(normal_form(now) == normal_form(want));
    }
    for (size_t n = 0; n < ids4.size(); ++n) {
        const int v = ids4[n];
        INFO("vertex " << vertex_name(post.quiver.vertex(v)));
        const int img = pred.map[v];
        MinorLabel want{post.quiver.vertex(v).i, q4[n]["label"][0], q4[n]["label"][1], q4[n]["label"][2]};
        CHECK(*pred.shifted.labels[img].minor == want);
        CHECK(color_name(pred.shifted.quiver.vertex(img).color) == q4[n]["color"].get<std::string>());
    }
}

TEST_CASE("Gamma^(0) seeds and the sequence M") {
    for (const char* name : {"a3_gamma0.json", "a4_gamma0.json"}) {
        INFO(name);
        json g = load(name);
        auto c = coxeter_of(g);
        Seed s = build_gamma0(c);
        CHECK(s.quiver.size() == static_cast<int>(g["vertices"].size()));
        auto ids = locate(s.quiver, g["vertices"]);
        check_vertices(s, ids, g["vertices"], true);
        Compare cmp;
        cmp.ignore_frozen_frozen = true;
        check_arrows(s.quiver, ids, g["arrows"], cmp);

        auto steps = schedule_M(c, s);
        if (g.contains("schedule")) {
            REQUIRE(steps.size() == g["schedule"].size());
            for (size_t n = 0; n < steps.size(); ++n) {
                const auto& x = s.quiver.vertex(steps[n].vertex);
                CHECK(Pos{x.i, x.r} == pos(g["schedule"][n]));
            }
        }
        std::vector<int> sched;
        for (const auto& st : steps) sched.push_back(st.vertex);
        Seed after = mutate_sequence(s, sched);
        for (size_t n = 0; n < ids.size(); ++n) {
            const auto& v = g["vertices"][n];
            INFO("vertex " << vertex_name(s.quiver.vertex(ids[n])));
            if (v.contains("degree")) {
                BiDegree want{weight_expr(c, v["degree"]["l"], true), weight_expr(c, v["degree"]["r"], false)};
                CHECK(*s.labels[ids[n]].degree == want);
            }
            if (v.contains("degree_after_M")) {
                BiDegree want{weight_expr(c, v["degree_after_M"]["l"], true), weight_expr(c, v["degree_after_M"]["r"], false)};
                CHECK(*after.labels[ids[n]].degree == want);
            }
        }
        CHECK(verify_sequence_M_degrees(c).ok());
    }
}

TEST_CASE("Theta seed in D5") {
    json g = load("d5_theta.json");
    auto c = coxeter_of(g);
    const int layers = g["layers"];
    ThetaSeed t = build_theta_seed(c, layers + 1, g["base"]);
    auto ids = locate(t.seed.quiver, g["vertices"]);
    for (size_t n = 0; n < ids.size(); ++n) {
        const auto& v = g["vertices"][n];
        INFO("vertex (" << v["i"] << "," << v["s"] << ")");
        CHECK(t.n[v["i"].get<int>() - 1][v["s"].get<int>() - 1] == v["n"].get<int>());
        CHECK(*t.seed.labels[ids[n]].theta == ThetaLabel{v["i"], v["s"], v["n"]});
    }
    check_arrows(t.seed.quiver, ids, g["arrows"], {});
    CHECK(verify_theta_structure(t).ok());
}
