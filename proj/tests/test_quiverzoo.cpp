#include "bandlab/quiverzoo.hpp"

#include <doctest.h>

using namespace bandlab;

TEST_CASE("window seeds over every Coxeter element of rank <= 5") {
    for (const auto& d : all_types(5))
        for (const auto& w : all_coxeter_words(d)) {
            auto c = make_coxeter(d, w);
            INFO(d.name() << " " << format_word(w));
            Seed s = build_gamma_tilde_window(c, -1, 1);
            int expect = 0;
            for (int m : c.m) expect += 2 * m + 3;
            CHECK(s.quiver.size() == expect);
            for (int v : s.quiver.mutable_vertices()) CHECK(degree_balanced(s, v));
            CHECK(max_rank_check(s.quiver));
            CHECK(verify_red_exchange_shape(c, s).ok());
            CHECK(verify_tau_translation(c, -1, 1, Color::red).ok());
            CHECK(verify_tau_translation(c, -1, 2, Color::green).ok());
        }
}

TEST_CASE("tau_red then tau_green shifts twice") {
    auto c = make_coxeter(parse_type("D4"), {2, 1, 3, 4});
    Seed w = build_gamma_tilde_window(c, -2, 2);
    Seed a = mutate_sequence(w, schedule_tau(w, Color::red));
    // after tau_red the colors are read off the shifted window
    TauPrediction p = predict_tau(c, -2, 2, 1);
    for (int v = 0; v < a.quiver.size(); ++v) a.quiver.vertex(v).color = p.shifted.quiver.vertex(p.map[v]).color;
    Seed b = mutate_sequence(a, schedule_tau(a, Color::green));
    // tau_green undoes the quiver change of tau_red
    for (int x = 0; x < w.quiver.size(); ++x)
        for (int y = 0; y < w.quiver.size(); ++y) CHECK(b.quiver.b(x, y) == w.quiver.b(x, y));
}

TEST_CASE("Gamma^(0) and the sequence M over every Coxeter element of rank <= 5") {
    for (const auto& d : all_types(5))
        for (const auto& w : all_coxeter_words(d)) {
            auto c = make_coxeter(d, w);
            INFO(d.name() << " " << format_word(w));
            Seed g = build_gamma0(c);
            for (int v : g.quiver.mutable_vertices()) CHECK(degree_balanced(g, v));
            Report r = verify_sequence_M_degrees(c);
            CHECK(r.ok());
            if (!r.ok()) MESSAGE(r.messages.front());
        }
}

TEST_CASE("Theta seeds") {
    for (const auto& d : all_types(6)) {
        auto c = standard_coxeter(d);
        for (int base = 1; base <= d.rank; ++base)
            for (bool plus : {true, false}) {
                ThetaSeed t = build_theta_seed(c, 5, base, plus);
                CHECK(t.n[base - 1][0] == 0);
                CHECK(verify_theta_structure(t).ok());
                for (int v : t.seed.quiver.mutable_vertices()) {
                    int in = 0, out = 0;
                    for (int y = 0; y < t.seed.quiver.size(); ++y) (t.seed.quiver.b(y, v) > 0 ? in : out) += std::abs(t.seed.quiver.b(y, v));
                    CHECK(in + out > 0);
                    if (d.rank > 1) CHECK((in > 0 && out > 0));
                }
            }
    }
    CHECK_THROWS(build_theta_seed(standard_coxeter(parse_type("A2")), 0));
}

TEST_CASE("classification of Gamma~ vertices") {
    auto c = make_coxeter(parse_type("A2"), {1, 2});
    auto ct = tilde_coxeter(c);
    CHECK(classify_gamma_tilde(c, ct, 1, 0).region == Region::red);
    CHECK(classify_gamma_tilde(c, ct, 1, -2).region == Region::green);
    CHECK(classify_gamma_tilde(c, ct, 1, -8).label == MinorLabel{1, -1, 0, 2});
    CHECK(classify_gamma_tilde(c, ct, 2, 3).label == MinorLabel{2, 1, 1, 0});
    CHECK_THROWS(classify_gamma_tilde(c, ct, 1, 1));
    CHECK(minor_to_string({1, -1, 0, 2}) == "D^(-1)[w1,c~^2w1]");
}
