#include "bandlab/acceptance.hpp"

#include "bandlab/bands.hpp"
#include "bandlab/goldens.hpp"
#include "bandlab/quiverzoo.hpp"
#include "bandlab/tsystem.hpp"
#include "bandlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>

namespace bandlab {

namespace {

Criterion timed(const std::string& id, const std::string& desc, double limit, const std::function<Report()>& body) {
    Criterion c{id, desc, false, 0, limit, 0, ""};
    const auto t0 = std::chrono::steady_clock::now();
    try {
        Report r = body();
        c.ok = r.ok() && r.instances > 0;
        c.instances = r.instances;
        if (!r.messages.empty()) c.detail = r.messages.front();
        else if (r.instances == 0) c.detail = "no instances checked";
    } catch (const std::exception& e) {
        c.detail = std::string("exception: ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.ok && c.seconds > limit && c.detail.empty()) c.detail = "time limit exceeded";
    return c;
}

Report coxeter_d5() {
    Report r;
    const auto c = make_coxeter(parse_type("D5"), {2, 4, 1, 3, 5});
    r.expect(c.m == std::vector<int>{4, 4, 4, 5, 3}, "m != (4,4,4,5,3)");
    r.expect(c.adapted == Word{2, 4, 1, 3, 5, 2, 4, 1, 3, 5, 2, 4, 1, 3, 5, 2, 4, 1, 3, 4}, "adapted word " + format_word(c.adapted));
    r.expect(c.adapted.size() == 20, "adapted word length");
    r.expect(w_ik(c, 1, 2) == Word{2, 4, 1}, "w_{1,2} = " + format_word(w_ik(c, 1, 2)));
    r.expect(ar_dimension_vectors(c).at(9) == std::vector<int>{1, 2, 2, 1, 1}, "dim x(9)");
    return r;
}

Report coxeter_invariants() {
    Report r;
    for (const auto& d : all_types(5))
        for (const auto& w : all_coxeter_words(d)) {
            const auto c = make_coxeter(d, w);
            for (int i = 1; i <= d.rank; ++i)
                for (int k = 1; k <= c.m_of(i); ++k) {
                    const Word wik = w_ik(c, i, k);
                    const std::string at = d.name() + " " + format_word(w) + " i=" + std::to_string(i) + " k=" + std::to_string(k);
                    r.expect(apply_word(d, wik, fundamental(d, i)) == coxeter_power_weight(c, i, k - 1), "w_ik(varpi_i) at " + at);
                    Word cw = c.word;
                    cw.insert(cw.end(), wik.begin(), wik.end());
                    r.expect(word_length(d, cw) == d.rank + word_length(d, wik), "length additivity at " + at);
                }
        }
    return r;
}

Report numeric_batteries(int samples, bool parallel) {
    Report r;
    for (int n = 2; n <= 5; ++n) {
        const VerifyOptions o{n, samples, 20240 + static_cast<uint64_t>(n), parallel};
        for (auto* f : {&verify_gluing, &verify_theta_psi, &verify_tsystem, &verify_fz_minor, &verify_black_mutation}) r.merge(f(o));
        if (n == 3) r.merge(verify_laurent3(o));
    }
    return r;
}

Report sequence_m(int samples, bool parallel, const std::string& golden_dir) {
    Report r;
    for (const auto& d : all_types(5))
        for (const auto& w : all_coxeter_words(d)) r.merge(verify_sequence_M_degrees(make_coxeter(d, w)));
    for (int n = 3; n <= 4; ++n) r.merge(verify_seq_m({n, samples, 77, parallel}));
    r.merge(check_golden_file((std::filesystem::path(golden_dir) / "a3_gamma0.json").string()));
    return r;
}

Report ladder(int samples, bool parallel) {
    Report r;
    for (const char* t : {"A2", "A3"}) {
        const auto d = parse_type(t);
        for (const auto& w : all_coxeter_words(d))
            for (int N = 1; N <= 3; ++N) r.merge(ladder_verify(make_coxeter(d, w), N).report);
    }
    for (int n = 3; n <= 4; ++n) r.merge(verify_theta_poly({n, samples, 91, parallel}));
    const std::string want = "θ^{(0)}_{1,2} = θ^{(0)}_1θ^{(1)}_1 − θ^{(0)}_2";
    const std::string got = format_theta_expansion(ThetaRing(sl_standard(3)), 1, 2, 0);
    r.expect(got == want, "SL(3) expansion printed as " + got);
    return r;
}

Report goldens(const std::string& dir) {
    std::vector<std::string> files;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.path().extension() == ".json") files.push_back(e.path().string());
    std::sort(files.begin(), files.end());
    Report r;
    r.expect(files.size() == 8, "expected 8 reference files in " + dir);
    for (const auto& f : files) {
        const auto t0 = std::chrono::steady_clock::now();
        r.merge(check_golden_file(f));
        const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        r.expect(dt < 1.0, f + " took " + std::to_string(dt) + " s");
    }
    return r;
}

Report max_rank() { return verify_max_rank(4, 2); }

}  // namespace

std::vector<Criterion> run_acceptance(const AcceptanceOptions& o) {
    const int bands = o.quick ? 10 : 100;
    const int seqm = o.quick ? 5 : 20;
    const int theta_samples = o.quick ? 10 : 50;
    const int cubic = o.quick ? 10 : 100;
    std::vector<Criterion> out;
    out.push_back(timed("coxeter-d5", "D5 Coxeter data: m, adapted word, w_{1,2}, dim x(9)", 1, coxeter_d5));
    out.push_back(timed("coxeter-invariants", "w_{i,k} invariants and length additivity, all ADE words of rank <= 5", 30, coxeter_invariants));
    out.push_back(timed("goldens", "window, Gamma^(0) and Theta seeds against the reference files, < 1 s each", 8, [&] { return goldens(o.golden_dir); }));
    out.push_back(timed("exchange-translation", "exchange shape and tau translation, all ADE words of rank <= 5, window (-2,2)", 120,
                        [&] {
                            Report r = verify_exchange_and_translation(5, -2, 2);
                            for (int n = 2; n <= 5; ++n) r.merge(verify_translation({n, o.quick ? 5 : 20, 5, o.parallel}));
                            return r;
                        }));
    out.push_back(timed("numeric-identities", "gluing, theta=psi, T-system, FZ/QQ, black mutation, SL(3) Laurent expansion on SL(2..5) bands", 180,
                        [&] { return numeric_batteries(bands, o.parallel); }));
    out.push_back(timed("cubic", "cubic minor identity, symbolic k=2,3 and numeric k<=6", 60, [&] {
        Report r = verify_cubic_symbolic(2);
        r.merge(verify_cubic_symbolic(3));
        r.merge(verify_cubic_numeric(6, {0, cubic, 13, o.parallel}));
        return r;
    }));
    out.push_back(timed("sequence-m", "sequence M bi-degrees (all ADE words of rank <= 5) and terminal theta values on SL(3), SL(4)", 60,
                        [&] { return sequence_m(seqm, o.parallel, o.golden_dir); }));
    out.push_back(timed("theta-ladder", "symbolic Theta_N ladder for A2, A3, N <= 3; theta_poly against bands", 120,
                        [&] { return ladder(theta_samples, o.parallel); }));
    out.push_back(timed("max-rank", "full rank of Gamma~ and Xi windows, |M|,N <= 2, ranks <= 4", 30, max_rank));
    return out;
}

std::string format_criterion(const Criterion& c) {
    char buf[128];
    std::snprintf(buf, sizeof buf, " (%.2f s / %.0f s, %ld instances) ", c.seconds, c.limit, c.instances);
    std::string line = std::string(c.pass() ? "PASS " : "FAIL ") + c.id + buf + c.description;
    if (!c.pass() && !c.detail.empty()) line += " | " + c.detail;
    return line;
}

}  // namespace bandlab
