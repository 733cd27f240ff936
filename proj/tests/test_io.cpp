#include "bandlab/io.hpp"
#include "bandlab/quiverzoo.hpp"
#include "bandlab/session.hpp"
#include "bandlab/verify.hpp"

#include <doctest.h>
#include <httplib.h>

#include <thread>

using namespace bandlab;

namespace {

// Vertices, arrows, labels and values; the history is left out.
json seed_part(json j) {
    return {{"vertices", j["vertices"]}, {"arrows", j["arrows"]}};
}

}  // namespace

TEST_CASE("seed JSON round trip") {
    auto c = sl_standard(3);
    Seed s = build_gamma_tilde_window(c, -1, 1);
    s.labels[0].value = Q(7, 3);
    json j = seed_to_json(s);
    CHECK(j["vertices"].size() == static_cast<size_t>(s.quiver.size()));
    CHECK(j["vertices"][0]["value"] == "7/3");
    Seed t = seed_from_json(j);
    CHECK(seed_to_json(t) == j);
    CHECK(t.quiver.arrow_list() == s.quiver.arrow_list());
    CHECK(*t.labels[3].minor == *s.labels[3].minor);
    CHECK(*t.labels[3].degree == *s.labels[3].degree);

    ThetaSeed th = build_theta_seed(make_coxeter(make_cartan('D', 5), {2, 4, 1, 3, 5}), 3);
    json tj = seed_to_json(th.seed);
    CHECK(seed_to_json(seed_from_json(tj)) == tj);
    CHECK_THROWS(seed_from_json(json::parse(R"({"vertices":[{"id":0,"i":1,"r":0,"color":"blue","frozen":false}],"arrows":[]})")));
}

TEST_CASE("DOT export") {
    Seed s = build_gamma_tilde_window(sl_standard(3), -1, 1);
    std::string dot = seed_to_dot(s, "w");
    CHECK(dot.rfind("digraph \"w\" {", 0) == 0);
    CHECK(dot.find("color=red") != std::string::npos);
    CHECK(dot.find("shape=box") != std::string::npos);
    size_t arrows = 0;
    for (size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 2)) ++arrows;
    size_t want = 0;
    for (auto [a, b, m] : s.quiver.arrow_list()) want += m;
    CHECK(arrows == want);
}

TEST_CASE("band JSON round trip") {
    auto b = sample_band(4, -3, 3, 42);
    json j = band_to_json(b);
    CHECK(j["rows"].size() == 10);
    BandWindow c = band_from_json(j);
    CHECK(c.rows() == b.rows());
    CHECK(c.M() == -3);
    j["rows"].erase(0);
    CHECK_THROWS(band_from_json(j));
}

TEST_CASE("report JSON round trip") {
    Report r = verify_gluing({3, 3, 7, false});
    r.fail("synthetic counterexample");
    ReportMeta meta{{{"n", 3}}, 7, 3, 0.25};
    json j = report_to_json(r, meta);
    ReportMeta back;
    Report q = report_from_json(json::parse(j.dump()), &back);
    CHECK(q.check == r.check);
    CHECK(q.instances == r.instances);
    CHECK(q.failures == 1);
    CHECK(q.messages == r.messages);
    CHECK(back.seed == 7);
    CHECK(back.params == meta.params);
    CHECK(report_to_json(q, back) == j);
}

TEST_CASE("session mutate, undo and reset") {
    auto ses = make_band_session(3, -2, 2, 5);
    const json init = ses->state();
    const auto& verts = init["vertices"];
    int red = -1, frozen = -1;
    for (const auto& v : verts) {
        if (v["i"] == 1 && v["r"] == 0) red = v["id"];
        if (v["frozen"] && frozen < 0) frozen = v["id"];
    }
    REQUIRE(red >= 0);
    REQUIRE(frozen >= 0);

    CHECK(verts[red]["label"] == "D^(0)[cw1,w1]");
    auto r = ses->mutate(red);
    REQUIRE(r.status == 200);
    const auto& mv = r.body["vertices"][red];
    CHECK(mv["label"] == "D^(1)[cw1,c~w1]");  // tau_red image of D^(0)[cw1,w1]
    // the value is the exchange quotient on the library seed
    Seed lib = seed_from_json(init);
    CHECK(mv["value"] == to_string(*mutate(lib, red).labels[red].value));
    CHECK(r.body["history"] == json::array({red}));

    CHECK(ses->undo().status == 200);
    CHECK(ses->state() == init);
    CHECK(ses->undo().status == 409);

    ses->mutate(red);
    ses->mutate(red);
    CHECK(seed_part(ses->state()) == seed_part(init));
    CHECK(ses->reset().body == init);

    auto f = ses->mutate(frozen);
    CHECK(f.status == 409);
    CHECK(ses->state() == init);
    CHECK(ses->mutate(10000).status == 400);
    CHECK(ses->band().status == 200);
}

TEST_CASE("session rejects zero-valued vertices") {
    auto c = sl_standard(3);
    // constant steps 0 give many vanishing minors
    std::vector<UnipotentStep> steps(8, UnipotentStep{{0, 0}});
    Session ses(c, -2, 2, make_band(Matrix::identity(3), -4, 4, steps));
    const json st = ses.state();
    int zero = -1;
    for (const auto& v : st["vertices"])
        if (!v["frozen"] && v["value"] == "0") zero = v["id"];
    REQUIRE(zero >= 0);
    CHECK(ses.mutate(zero).status == 422);
}

TEST_CASE("HTTP API") {
    auto ses = make_band_session(3, -2, 2, 9);
    HttpServer server(*ses);
    const int port = server.bind("127.0.0.1", 0);
    REQUIRE(port > 0);
    std::thread th([&] { server.listen(); });
    httplib::Client cli("127.0.0.1", port);
    for (int t = 0; t < 100 && !cli.Get("/api/state"); ++t) std::this_thread::sleep_for(std::chrono::milliseconds(10));

    auto st = cli.Get("/api/state");
    REQUIRE(st);
    CHECK(st->status == 200);
    CHECK(st->get_header_value("Content-Type").find("application/json") == 0);
    json init = json::parse(st->body);
    CHECK(init == ses->state());

    int mutable_v = -1, frozen_v = -1;
    for (const auto& v : init["vertices"]) {
        if (!v["frozen"] && mutable_v < 0) mutable_v = v["id"];
        if (v["frozen"] && frozen_v < 0) frozen_v = v["id"];
    }
    auto m = cli.Post("/api/mutate", json{{"vertex", mutable_v}}.dump(), "application/json");
    REQUIRE(m);
    CHECK(m->status == 200);
    // bit-identical to the library mutation
    Seed lib = mutate(seed_from_json(init), mutable_v);
    CHECK(json::parse(m->body)["vertices"][mutable_v]["value"] == seed_to_json(lib)["vertices"][mutable_v]["value"]);
    CHECK(json::parse(m->body)["arrows"] == seed_to_json(lib)["arrows"]);

    auto fz = cli.Post("/api/mutate", json{{"vertex", frozen_v}}.dump(), "application/json");
    REQUIRE(fz);
    CHECK(fz->status == 409);
    auto bad = cli.Post("/api/mutate", "{}", "application/json");
    REQUIRE(bad);
    CHECK(bad->status == 400);

    auto u = cli.Post("/api/undo", "", "application/json");
    REQUIRE(u);
    CHECK(json::parse(u->body) == init);
    auto band = cli.Get("/api/band");
    REQUIRE(band);
    CHECK(band_from_json(json::parse(band->body)).n() == 3);
    auto rs = cli.Post("/api/reset", "", "application/json");
    REQUIRE(rs);
    CHECK(json::parse(rs->body) == init);

    server.stop();
    th.join();
}
