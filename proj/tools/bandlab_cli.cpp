// bandlab: build and export seeds, sample bands, run the verification batteries
// and serve the JSON API.
//
// Exit status: 0 ok, 2 usage error, 3 verification failure, 4 internal error.
#include "bandlab/acceptance.hpp"
#include "bandlab/goldens.hpp"
#include "bandlab/io.hpp"
#include "bandlab/quiverzoo.hpp"
#include "bandlab/session.hpp"
#include "bandlab/tsystem.hpp"
#include "bandlab/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <csignal>
#include <fstream>
#include <iostream>

#ifndef BANDLAB_GOLDEN_DIR
#define BANDLAB_GOLDEN_DIR "tests/golden"
#endif

using namespace bandlab;

namespace {

constexpr int kOk = 0, kUsage = 2, kVerifyFail = 3, kInternal = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::pair<int, int> parse_window(const std::string& s) {
    const auto colon = s.find(':', 1);
    if (colon == std::string::npos) throw UsageError("window must look like M:N, got '" + s + "'");
    try {
        return {std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1))};
    } catch (const std::exception&) {
        throw UsageError("window must look like M:N, got '" + s + "'");
    }
}

// c from --type and --cox; with tilde the word given is that of c~.
CoxeterElement coxeter_from(const std::string& type, const std::string& cox, bool tilde) {
    CartanData d;
    try {
        d = parse_type(type);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    if (cox.empty()) return standard_coxeter(d);
    CoxeterElement given;
    try {
        given = make_coxeter(d, parse_word(cox));
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    return tilde ? tilde_coxeter(given) : given;
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out);
    if (!f) throw UsageError("cannot write " + out);
    f << text;
}

void emit_seed(const Seed& s, const std::string& format, const std::string& out, const std::string& name) {
    if (format == "dot") emit(seed_to_dot(s, name), out);
    else emit(seed_to_json(s).dump(1), out);
}

int report_exit(const Report& r) { return r.ok() ? kOk : kVerifyFail; }

void print_report(const Report& r, const ReportMeta& meta, bool as_json) {
    if (as_json) {
        std::cout << report_to_json(r, meta).dump(1) << "\n";
        return;
    }
    std::cout << "# check " << r.check << " seed " << meta.seed << " samples " << meta.samples << " params " << meta.params.dump() << "\n";
    std::cout << (r.ok() ? "PASS " : "FAIL ") << r.check << ": " << r.instances - r.failures << "/" << r.instances << " instances in " << meta.seconds
              << " s\n";
    for (const auto& m : r.messages) std::cout << "  " << m << "\n";
}

HttpServer* g_server = nullptr;
void on_signal(int) {
    if (g_server) g_server->stop();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bandlab: cluster seeds, bands and identity checks"};
    app.require_subcommand(1);
    int status = kOk;

    // quiver
    auto* quiver = app.add_subcommand("quiver", "build a seed and print it as JSON or DOT");
    quiver->require_subcommand(1);
    std::string q_type, q_cox, q_window = "-1:1", q_format = "json", q_out;
    int q_rows = 3, q_base = 1;
    bool q_minus = false;
    auto common_q = [&](CLI::App* sc, bool window) {
        sc->add_option("--type", q_type, "Dynkin type, e.g. A3, D5, E6")->required();
        sc->add_option("--format", q_format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
        sc->add_option("--out", q_out, "output file (default stdout)");
        if (window) sc->add_option("--window", q_window, "window M:N with M <= 0 <= N");
    };
    auto* q_gt = quiver->add_subcommand("gamma-tilde", "window seed Gamma~_{M,N}");
    common_q(q_gt, true);
    q_gt->add_option("--cox", q_cox, "word of c~ (default: standard)");
    q_gt->callback([&] {
        auto [M, N] = parse_window(q_window);
        emit_seed(build_gamma_tilde_window(coxeter_from(q_type, q_cox, true), M, N), q_format, q_out, "gamma_tilde");
    });
    auto* q_xi = quiver->add_subcommand("xi", "U-invariant window seed Xi_{M,N}");
    common_q(q_xi, true);
    q_xi->add_option("--cox", q_cox, "word of c (default: standard)");
    q_xi->callback([&] {
        auto [M, N] = parse_window(q_window);
        emit_seed(build_xi_window(coxeter_from(q_type, q_cox, false), M, N), q_format, q_out, "xi");
    });
    auto* q_g0 = quiver->add_subcommand("gamma0", "seed Gamma^(0)");
    common_q(q_g0, false);
    q_g0->add_option("--cox", q_cox, "word of c (default: standard)");
    q_g0->callback([&] { emit_seed(build_gamma0(coxeter_from(q_type, q_cox, false)), q_format, q_out, "gamma0"); });
    auto* q_th = quiver->add_subcommand("theta", "G-invariant seed Theta_N");
    common_q(q_th, false);
    q_th->add_option("--cox", q_cox, "word of c (default: standard)");
    q_th->add_option("--rows", q_rows, "number of rows N")->check(CLI::PositiveNumber);
    q_th->add_option("--base", q_base, "column with n(base,1) = 0");
    q_th->add_flag("--minus", q_minus, "use the opposite orientation");
    q_th->callback([&] {
        auto c = coxeter_from(q_type, q_cox, false);
        if (q_base < 1 || q_base > c.n()) throw UsageError("--base must be a node");
        emit_seed(build_theta_seed(c, q_rows, q_base, !q_minus).seed, q_format, q_out, "theta");
    });

    // band
    auto* band = app.add_subcommand("band", "finite SL(n) bands");
    band->require_subcommand(1);
    int b_n = 3;
    std::string b_window = "-1:1", b_out;
    uint64_t b_seed = 1;
    auto* b_sample = band->add_subcommand("sample", "sample a band window with random rational entries");
    b_sample->add_option("--n", b_n, "SL(n)")->check(CLI::Range(2, 8));
    b_sample->add_option("--window", b_window, "window M:N with M <= 0 <= N");
    b_sample->add_option("--seed", b_seed, "random seed");
    b_sample->add_option("--out", b_out, "output file (default stdout)");
    b_sample->callback([&] {
        auto [M, N] = parse_window(b_window);
        if (M > 0 || N < 0) throw UsageError("window must contain 0");
        emit(band_to_json(sample_band(b_n, M, N, b_seed)).dump(1), b_out);
    });

    // verify
    auto* verify = app.add_subcommand("verify", "run an identity battery");
    std::string v_kind;
    VerifyOptions vo;
    bool v_serial = false, v_json = false, v_quick = false;
    int v_max_rank = 5, v_N = 3;
    std::string v_window = "-2:2", v_type = "A2", v_cox, v_golden = BANDLAB_GOLDEN_DIR;
    std::vector<std::string> kinds = verify_kinds();
    for (const char* k : {"goldens", "exchange", "max-rank", "ladder", "kr", "all"}) kinds.push_back(k);
    verify->add_option("kind", v_kind, "check to run")->required()->check(CLI::IsMember(kinds));
    verify->add_option("--n", vo.n, "SL(n) for band checks")->check(CLI::Range(2, 6));
    verify->add_option("--samples", vo.samples, "number of sampled bands")->check(CLI::PositiveNumber);
    verify->add_option("--seed", vo.seed, "master random seed");
    verify->add_flag("--serial", v_serial, "run samples on one thread");
    verify->add_flag("--json", v_json, "print the report as JSON");
    verify->add_flag("--quick", v_quick, "fewer samples for 'all'");
    verify->add_option("--max-rank", v_max_rank, "rank bound for exchange and max-rank")->check(CLI::Range(1, 6));
    verify->add_option("--window", v_window, "window for exchange");
    verify->add_option("--type", v_type, "type for ladder and kr");
    verify->add_option("--cox", v_cox, "word of c for ladder and kr");
    verify->add_option("--N", v_N, "rows for ladder")->check(CLI::Range(1, 6));
    verify->add_option("--golden-dir", v_golden, "directory of reference seeds");
    verify->callback([&] {
        vo.parallel = !v_serial;
        if (v_kind == "all") {
            AcceptanceOptions ao{v_golden, v_quick, vo.parallel};
            bool ok = true;
            for (const auto& c : run_acceptance(ao)) {
                std::cout << format_criterion(c) << "\n";
                ok = ok && c.pass();
            }
            status = ok ? kOk : kVerifyFail;
            return;
        }
        ReportMeta meta;
        meta.seed = vo.seed;
        meta.samples = vo.samples;
        meta.params = {{"n", vo.n}};
        const auto t0 = std::chrono::steady_clock::now();
        Report r;
        if (v_kind == "goldens") {
            meta.params = {{"dir", v_golden}};
            r = check_golden_dir(v_golden);
        } else if (v_kind == "exchange") {
            auto [M, N] = parse_window(v_window);
            meta.params = {{"max_rank", v_max_rank}, {"window", {M, N}}};
            r = verify_exchange_and_translation(v_max_rank, M, N);
        } else if (v_kind == "max-rank") {
            meta.params = {{"max_rank", v_max_rank}};
            r = verify_max_rank(v_max_rank, 2);
        } else if (v_kind == "ladder") {
            meta.params = {{"type", v_type}, {"N", v_N}};
            r = ladder_verify(coxeter_from(v_type, v_cox, false), v_N).report;
        } else if (v_kind == "kr") {
            meta.params = {{"type", v_type}};
            r = verify_kr_dictionary(coxeter_from(v_type, v_cox, false), 4, 3);
        } else {
            try {
                r = verify_kind(v_kind, vo);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        }
        meta.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        print_report(r, meta, v_json);
        status = report_exit(r);
    });

    // mutate
    auto* mut = app.add_subcommand("mutate", "mutate a window seed and print the result");
    std::string m_type = "A2", m_cox, m_window = "-1:1", m_tau, m_format = "json", m_out;
    std::vector<std::string> m_at;
    bool m_values = false;
    uint64_t m_seed = 1;
    mut->add_option("--type", m_type, "Dynkin type");
    mut->add_option("--cox", m_cox, "word of c~ (default: standard)");
    mut->add_option("--window", m_window, "window M:N");
    mut->add_option("--at", m_at, "vertex i,r to mutate (repeatable, applied in order)");
    mut->add_option("--tau", m_tau, "mutate every red or green vertex")->check(CLI::IsMember({"red", "green"}));
    mut->add_flag("--values", m_values, "evaluate on a sampled SL(n) band (type A, standard c)");
    mut->add_option("--seed", m_seed, "band seed for --values");
    mut->add_option("--format", m_format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
    mut->add_option("--out", m_out, "output file (default stdout)");
    mut->callback([&] {
        auto [M, N] = parse_window(m_window);
        const CoxeterElement c = coxeter_from(m_type, m_cox, true);
        std::unique_ptr<Session> ses;
        if (m_values) {
            if (c.data.kind != 'A' || c.word != standard_coxeter(c.data).word) throw UsageError("--values needs type A and the standard Coxeter element");
            ses = make_band_session(c.n() + 1, M, N, m_seed);
        } else {
            ses = std::make_unique<Session>(c, M, N, std::nullopt);
        }
        std::vector<int> order;
        const Seed s0 = seed_from_json(ses->state());
        if (!m_tau.empty()) order = schedule_tau(s0, m_tau == "red" ? Color::red : Color::green);
        for (const auto& at : m_at) {
            const auto comma = at.find(',');
            if (comma == std::string::npos) throw UsageError("--at needs i,r");
            const int v = s0.quiver.find(std::stoi(at.substr(0, comma)), std::stoi(at.substr(comma + 1)));
            if (v < 0) throw UsageError("no vertex " + at + " in the window");
            order.push_back(v);
        }
        for (int v : order) {
            SessionResult r = ses->mutate(v);
            if (r.status != 200) throw UsageError(r.body["error"].get<std::string>());
        }
        json st = ses->state();
        if (m_format == "dot") emit(seed_to_dot(seed_from_json(st), "mutated"), m_out);
        else emit(st.dump(1), m_out);
    });

    // tsys
    auto* tsys = app.add_subcommand("tsys", "T-system polynomials and the Theta ladder");
    tsys->require_subcommand(1);
    std::string t_type = "A2", t_cox, t_format = "text";
    int t_i = 1, t_k = 2, t_s = 0, t_N = 3;
    auto* t_exp = tsys->add_subcommand("expand", "theta^{(s)}_{i,k} in the variables theta^{(t)}_j");
    t_exp->add_option("--type", t_type, "Dynkin type")->required();
    t_exp->add_option("--cox", t_cox, "word of c (default: standard)");
    t_exp->add_option("--i", t_i, "node");
    t_exp->add_option("--k", t_k, "level")->check(CLI::NonNegativeNumber);
    t_exp->add_option("--s", t_s, "shift");
    t_exp->add_option("--format", t_format, "text or json")->check(CLI::IsMember({"text", "json"}));
    t_exp->callback([&] {
        const ThetaRing ring(coxeter_from(t_type, t_cox, false));
        if (t_i < 1 || t_i > ring.coxeter().n()) throw UsageError("--i must be a node");
        if (t_format == "text") {
            std::cout << format_theta_expansion(ring, t_i, t_k, t_s) << "\n";
            return;
        }
        const SparsePoly p = ring.theta(t_i, t_k, t_s);
        json terms = json::array();
        for (const auto& [m, c] : p.terms()) {
            json mono = json::array();
            for (const auto& [v, e] : m.e) mono.push_back({{"i", v.second}, {"s", v.first}, {"exp", e}});
            terms.push_back({{"coef", to_string(c)}, {"monomial", mono}});
        }
        std::cout << json{{"i", t_i}, {"k", t_k}, {"s", t_s}, {"text", format_theta_poly(p)}, {"terms", terms}}.dump(1) << "\n";
    });
    auto* t_lad = tsys->add_subcommand("ladder", "run the Theta_N ladder symbolically");
    t_lad->add_option("--type", t_type, "Dynkin type")->required();
    t_lad->add_option("--cox", t_cox, "word of c (default: standard)");
    t_lad->add_option("--N", t_N, "rows")->check(CLI::Range(1, 6));
    t_lad->callback([&] {
        const CoxeterElement c = coxeter_from(t_type, t_cox, false);
        LadderResult res = ladder_verify(c, t_N);
        for (const auto& st : res.steps)
            std::cout << "mutate (" << st.i << "," << st.row << "): " << theta_to_string(ThetaLabel{st.i, st.row, st.n_before}) << " -> "
                      << theta_to_string(ThetaLabel{st.i, st.row, st.n_after}) << " = " << st.poly << "\n";
        for (const auto& [i, ss] : res.collected) {
            std::cout << "row 1, column " << i << ":";
            for (int s : ss) std::cout << " " << s;
            std::cout << "\n";
        }
        print_report(res.report, ReportMeta{{{"type", t_type}, {"N", t_N}}, 0, 0, 0}, false);
        status = report_exit(res.report);
    });
    auto* t_kns = tsys->add_subcommand("kns", "the T-system at (i,k,s) in Kirillov-Reshetikhin labels");
    t_kns->add_option("--type", t_type, "Dynkin type")->required();
    t_kns->add_option("--cox", t_cox, "word of c (default: standard)");
    t_kns->add_option("--i", t_i, "node");
    t_kns->add_option("--k", t_k, "level")->check(CLI::PositiveNumber);
    t_kns->add_option("--s", t_s, "shift");
    t_kns->callback([&] {
        const CoxeterElement c = coxeter_from(t_type, t_cox, false);
        if (t_i < 1 || t_i > c.n()) throw UsageError("--i must be a node");
        std::cout << tsystem_as_KNS(c, t_i, t_k, t_s) << "\n";
    });

    // serve
    auto* serve = app.add_subcommand("serve", "HTTP JSON API over one mutation session");
    int s_n = 3, s_port = 8080;
    std::string s_window = "-2:2", s_host = "127.0.0.1";
    uint64_t s_seed = 1;
    serve->add_option("--n", s_n, "SL(n) demo seed")->check(CLI::Range(2, 6));
    serve->add_option("--window", s_window, "window M:N");
    serve->add_option("--seed", s_seed, "band seed");
    serve->add_option("--host", s_host, "bind address");
    serve->add_option("--port", s_port, "port (0 picks a free one)")->check(CLI::Range(0, 65535));
    serve->callback([&] {
        auto [M, N] = parse_window(s_window);
        auto ses = make_band_session(s_n, M, N, s_seed);
        HttpServer server(*ses);
        const int port = server.bind(s_host, s_port);
        if (port < 0) throw std::runtime_error("cannot bind " + s_host + ":" + std::to_string(s_port));
        std::cout << "listening on http://" << s_host << ":" << port << " (band seed " << s_seed << ")" << std::endl;
        g_server = &server;
        std::signal(SIGINT, on_signal);
        std::signal(SIGTERM, on_signal);
        server.listen();
        g_server = nullptr;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {  // rejected parameters from the library
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return status;
}
