#include "bandlab/verify.hpp"

#include "bandlab/poly.hpp"
#include "bandlab/quiverzoo.hpp"
#include "bandlab/tsystem.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace bandlab {

namespace {

constexpr int kResample = 8;

// Per-sample body: fills its own report from a sample seed.
using SampleBody = std::function<void(Report&, uint64_t)>;

Report run_samples(const std::string& check, const VerifyOptions& o, const SampleBody& body) {
    std::vector<Report> parts(o.samples);
#pragma omp parallel for schedule(dynamic) if (o.parallel)
    for (int k = 0; k < o.samples; ++k) {
        try {
            body(parts[k], stream_seed(o.seed, k));
        } catch (const std::exception& e) {
            parts[k].fail("sample " + std::to_string(k) + ": " + e.what());
        }
    }
    Report r;
    r.check = check;
    for (const auto& p : parts) r.merge(p);
    return r;
}

// Retry with fresh bands while `attempt` reports a degenerate zero.
void with_resample(Report& rep, uint64_t seed, const std::function<bool(uint64_t)>& attempt) {
    for (int t = 0; t < kResample; ++t)
        if (attempt(stream_seed(seed, 1000 + t))) return;
    rep.fail("zero values in " + std::to_string(kResample) + " resampled bands (seed " + std::to_string(seed) + ")");
}

// Reduced word grown from up to max_tries random letters.
Word random_reduced(const CartanData& d, RationalSampler& rng, int max_tries) {
    Word w;
    const int tries = rng.uniform(0, max_tries);
    for (int t = 0; t < tries; ++t) {
        Word x = w;
        x.push_back(rng.uniform(1, d.rank));
        if (word_length(d, x) == static_cast<int>(x.size())) w = x;
    }
    return w;
}

Word append(Word w, int i) {
    w.push_back(i);
    return w;
}

std::string fmt(const Q& q) { return to_string(q); }

void require_n(const VerifyOptions& o, int lo) {
    if (o.n < lo) throw std::invalid_argument("this check needs n >= " + std::to_string(lo));
}

// Evaluate every minor label of a seed on the band; false on a zero value.
bool evaluate(Seed& s, const BandWindow& b, const CoxeterElement& c, const CoxeterElement& ct) {
    for (auto& lab : s.labels) {
        lab.value = eval_minor_label(b, c, ct, *lab.minor);
        if (*lab.value == 0) return false;
    }
    return true;
}

std::pair<int, int> label_span(const std::vector<const Seed*>& seeds) {
    int lo = 0, hi = 0;
    for (const Seed* s : seeds)
        for (const auto& lab : s->labels) {
            lo = std::min(lo, lab.minor->s);
            hi = std::max(hi, lab.minor->s);
        }
    return {lo, hi};
}

}  // namespace

Report verify_gluing(const VerifyOptions& o) {
    require_n(o, 2);
    const CoxeterElement c = sl_standard(o.n);
    return run_samples("gluing", o, [&](Report& rep, uint64_t seed) {
        const BandWindow b = sample_band(o.n, -1, 1, seed);
        RationalSampler rng(seed ^ 0x5bd1e995);
        for (int s = -1; s <= 0; ++s) {
            const Matrix g = b.block(s), h = b.block(s + 1);
            for (int i = 1; i < o.n; ++i)
                for (int k = 1; k <= c.m_of(i); ++k)
                    for (int rep_w = 0; rep_w < 20; ++rep_w) {
                        const Weight w = apply_word(c.data, random_reduced(c.data, rng, 2 * o.n), fundamental(c.data, i));
                        const Q lhs = minor_by_weights(g, i, coxeter_power_weight(c, i, k), w);
                        const Q rhs = minor_by_weights(h, i, coxeter_power_weight(c, i, k - 1), w);
                        rep.expect(lhs == rhs, "gluing s=" + std::to_string(s) + " i=" + std::to_string(i) + " k=" + std::to_string(k) +
                                                   " w=" + format_weight(w) + ": " + fmt(lhs) + " != " + fmt(rhs));
                    }
        }
    });
}

Report verify_theta_psi(const VerifyOptions& o) {
    require_n(o, 2);
    return run_samples("theta-psi", o, [&](Report& rep, uint64_t seed) {
        const BandWindow b = sample_band(o.n, 0, 5, seed);
        for (int s = 0; s <= 1; ++s)
            for (int i = 1; i < o.n; ++i)
                for (int k = 1; k <= 4; ++k) {
                    const Q t = theta(b, s, i, k), p = psi(b, s, i, k);
                    rep.expect(t == p, "theta/psi s=" + std::to_string(s) + " i=" + std::to_string(i) + " k=" + std::to_string(k) + ": " +
                                           fmt(t) + " != " + fmt(p));
                }
    });
}

Report verify_tsystem(const VerifyOptions& o) {
    require_n(o, 2);
    const CoxeterElement c = sl_standard(o.n);
    return run_samples("tsystem", o, [&](Report& rep, uint64_t seed) {
        const BandWindow b = sample_band(o.n, 0, 6, seed);
        auto th = [&](int i, int k, int s) { return (i < 1 || i >= o.n) ? Q(1) : theta(b, s, i, k); };
        for (int s = 0; s <= 1; ++s)
            for (int i = 1; i < o.n; ++i)
                for (int k = 1; k <= 4; ++k) {
                    Q nb = 1;
                    for (int j : c.data.neighbours(i)) nb *= th(j, k, s + c.a(i, j));
                    const Q lhs = th(i, k, s) * th(i, k, s + 1);
                    const Q rhs = th(i, k + 1, s) * th(i, k - 1, s + 1) + nb;
                    rep.expect(lhs == rhs, "T-system s=" + std::to_string(s) + " i=" + std::to_string(i) + " k=" + std::to_string(k) + ": " +
                                               fmt(lhs) + " != " + fmt(rhs));
                }
    });
}

Report verify_fz_minor(const VerifyOptions& o) {
    require_n(o, 2);
    const CoxeterElement c = sl_standard(o.n);
    const CartanData& d = c.data;
    return run_samples("fz-minor", o, [&](Report& rep, uint64_t seed) {
        RationalSampler rng(seed);
        const Matrix g = random_sl(o.n, rng);
        auto D = [&](int i, const Word& u, const Word& v) {
            return minor_by_weights(g, i, apply_word(d, u, fundamental(d, i)), apply_word(d, v, fundamental(d, i)));
        };
        // general instances with l(u s_i) > l(u), l(v s_i) > l(v)
        for (int t = 0; t < 20; ++t) {
            const Word u = random_reduced(d, rng, 2 * o.n), v = random_reduced(d, rng, 2 * o.n);
            std::vector<int> ok;
            for (int i = 1; i < o.n; ++i)
                if (word_length(d, append(u, i)) > word_length(d, u) && word_length(d, append(v, i)) > word_length(d, v)) ok.push_back(i);
            if (ok.empty()) continue;
            const int i = ok[rng.uniform(0, static_cast<int>(ok.size()) - 1)];
            const Word us = append(u, i), vs = append(v, i);
            Q nb = 1;
            for (int j : d.neighbours(i)) nb *= D(j, u, v);
            const Q lhs = D(i, u, v) * D(i, us, vs);
            const Q rhs = D(i, us, v) * D(i, u, vs) + nb;
            rep.expect(lhs == rhs, "FZ u=" + format_word(u) + " v=" + format_word(v) + " i=" + std::to_string(i) + ": " + fmt(lhs) +
                                       " != " + fmt(rhs));
        }
        // QQ shape: D_{w_i, w w_i} D_{c w_i, w s_i w_i} = D_{c w_i, w w_i} D_{w_i, w s_i w_i} + prod_j D_{c^{a_ij} w_j, w w_j}
        auto DW = [&](int i, const Weight& uw, const Word& v) {
            return minor_by_weights(g, i, uw, apply_word(d, v, fundamental(d, i)));
        };
        for (int i = 1; i < o.n; ++i)
            for (int t = 0; t < 5; ++t) {
                Word w = random_reduced(d, rng, 2 * o.n);
                if (word_length(d, append(w, i)) < word_length(d, w)) continue;
                const Word ws = append(w, i);
                const Weight wi = fundamental(d, i), cwi = coxeter_power_weight(c, i, 1);
                Q nb = 1;
                for (int j : d.neighbours(i)) nb *= DW(j, coxeter_power_weight(c, j, c.a(i, j)), w);
                const Q lhs = DW(i, wi, w) * DW(i, cwi, ws);
                const Q rhs = DW(i, cwi, w) * DW(i, wi, ws) + nb;
                rep.expect(lhs == rhs, "QQ w=" + format_word(w) + " i=" + std::to_string(i) + ": " + fmt(lhs) + " != " + fmt(rhs));
            }
    });
}

Report verify_black_mutation(const VerifyOptions& o) {
    require_n(o, 2);
    const CoxeterElement c = sl_standard(o.n);
    const CoxeterElement ct = tilde_coxeter(c);
    const Seed base = build_gamma_tilde_window(c, -2, 2);
    const auto span = label_span({&base});
    return run_samples("black-mutation", o, [&](Report& rep, uint64_t seed) {
        with_resample(rep, seed, [&](uint64_t bs) {
            const BandWindow b = sample_band(o.n, span.first - 1, span.second + 1, bs);
            Seed w = base;
            if (!evaluate(w, b, c, ct)) return false;
            for (int v = 0; v < w.quiver.size(); ++v) {
                const auto& x = w.quiver.vertex(v);
                const auto info = classify_gamma_tilde(c, ct, x.i, x.r);
                const MinorLabel& m = *w.labels[v].minor;
                if (x.frozen || info.region != Region::upper || m.s - 1 < -1 || m.s - 1 > 0) continue;
                if (m.k != c.m_of(x.i) || m.l != 0) {
                    rep.fail("upper vertex " + vertex_name(x) + " is not labelled by Delta_{w0 w_i, w_i}");
                    continue;
                }
                const int s = m.s - 1;
                const Weight top = coxeter_power_weight(c, x.i, m.k);  // w0 varpi_i
                const Weight wi = fundamental(c.data, x.i);
                Weight si = wi;
                reflect_inplace(c.data, x.i, si);
                const Q want = minor_by_weights(b.block(s), x.i, top, wi) * minor_by_weights(b.block(s + 2), x.i, top, si) -
                               minor_by_weights(b.block(s), x.i, top, si) * minor_by_weights(b.block(s + 2), x.i, top, wi);
                const Q got = *mutate(w, v).labels[v].value;
                rep.expect(got == want, "black mutation at " + vertex_name(x) + ": " + fmt(got) + " != " + fmt(want));
            }
            return true;
        });
    });
}

Report verify_laurent3(const VerifyOptions& o) {
    if (o.n != 3) throw std::invalid_argument("laurent3 needs n = 3");
    return run_samples("laurent3", o, [&](Report& rep, uint64_t seed) {
        with_resample(rep, seed, [&](uint64_t bs) {
            const BandWindow b = sample_band(3, 0, 1, bs);
            auto D = [&](std::vector<int> rows) { return flag_minor(b, rows); };
            const Q d1 = D({1}), d12 = D({1, 2});
            if (d1 == 0 || d12 == 0) return false;
            const Q lhs = D({0, 2, 3});
            const Q rhs = D({0}) / d1 + D({2}) * D({0, 1}) / (d1 * d12) + D({2, 3}) / d12;
            rep.expect(lhs == rhs, "Delta_023 expansion: " + fmt(lhs) + " != " + fmt(rhs));
            rep.expect(lhs == theta(b, 0, 1, 1), "Delta_023 != theta^(0)_1");
            return true;
        });
    });
}

Report verify_translation(const VerifyOptions& o) {
    require_n(o, 2);
    const CoxeterElement c = sl_standard(o.n);
    const CoxeterElement ct = tilde_coxeter(c);
    const int M = -2, N = 2;
    const Seed base = build_gamma_tilde_window(c, M, N);
    struct Dir {
        Color color;
        TauPrediction pred;
    };
    std::vector<Dir> dirs{{Color::red, predict_tau(c, M, N, 1)}, {Color::green, predict_tau(c, M, N, -1)}};
    const auto span = label_span({&base, &dirs[0].pred.shifted, &dirs[1].pred.shifted});
    return run_samples("translation", o, [&](Report& rep, uint64_t seed) {
        with_resample(rep, seed, [&](uint64_t bs) {
            const BandWindow b = sample_band(o.n, span.first, span.second, bs);
            Seed w = base;
            if (!evaluate(w, b, c, ct)) return false;
            std::vector<Report> out;
            for (const auto& dir : dirs) {
                Seed post = w;
                try {
                    post = mutate_sequence(w, schedule_tau(w, dir.color));
                } catch (const std::domain_error&) {
                    return false;
                }
                Report r;
                for (int v = 0; v < post.quiver.size(); ++v) {
                    const int img = dir.pred.map[v];
                    if (img < 0) continue;
                    const Q want = eval_minor_label(b, c, ct, *dir.pred.shifted.labels[img].minor);
                    r.expect(*post.labels[v].value == want, std::string("tau_") + color_name(dir.color) + " at " + vertex_name(post.quiver.vertex(v)) +
                                                                 ": " + fmt(*post.labels[v].value) + " != " + fmt(want));
                }
                out.push_back(r);
            }
            for (const auto& r : out) rep.merge(r);
            return true;
        });
    });
}

Report verify_seq_m(const VerifyOptions& o) {
    require_n(o, 2);
    const CoxeterElement c = sl_standard(o.n);
    const CoxeterElement ct = tilde_coxeter(c);
    const Seed base = build_gamma0(c);
    const auto steps = schedule_M(c, base);
    const auto span = label_span({&base});
    return run_samples("seq-m", o, [&](Report& rep, uint64_t seed) {
        with_resample(rep, seed, [&](uint64_t bs) {
            const BandWindow b = sample_band(o.n, span.first, std::max(span.second, 1), bs);
            Seed s = base;
            if (!evaluate(s, b, c, ct)) return false;
            try {
                for (const auto& st : steps) s = mutate(s, st.vertex);
            } catch (const std::domain_error&) {
                return false;
            }
            for (int i = 1; i < o.n; ++i) {
                const int v = s.quiver.find(i, ct.xi_of(i) + 2);
                if (v < 0) {
                    rep.fail("no terminal vertex in column " + std::to_string(i));
                    continue;
                }
                const Q want = theta(b, 0, i, 1);
                rep.expect(*s.labels[v].value == want, "sequence M column " + std::to_string(i) + ": " + fmt(*s.labels[v].value) + " != theta^(0)_" +
                                                           std::to_string(i) + " = " + fmt(want));
            }
            return true;
        });
    });
}

Report verify_theta_poly(const VerifyOptions& o) {
    require_n(o, 2);
    const ThetaRing ring(sl_standard(o.n));
    const int M = -2, N = 7;
    return run_samples("theta-poly", o, [&](Report& rep, uint64_t seed) {
        const BandWindow b = sample_band(o.n, M, N, seed);
        std::map<Var, Q> vars;
        for (int s = M; s < N; ++s)
            for (int i = 1; i < o.n; ++i) vars[theta_var(i, s)] = theta(b, s, i, 1);
        for (int i = 1; i < o.n; ++i)
            for (int k = 1; k <= 4; ++k)
                for (int s = M; s + k <= N; ++s) {
                    const Q got = ring.theta(i, k, s).eval([&](Var v) { return vars.at(v); });
                    const Q want = theta(b, s, i, k);
                    rep.expect(got == want, "theta_poly i=" + std::to_string(i) + " k=" + std::to_string(k) + " s=" + std::to_string(s) + ": " +
                                                fmt(got) + " != " + fmt(want));
                }
    });
}

namespace {

// Both sides of the cubic identity, with minors supplied by D(rows, cols).
template <class T>
std::pair<T, T> cubic_sides(int k, const std::function<T(const std::vector<int>&, const std::vector<int>&)>& D) {
    auto range = [](int a, int b) {
        std::vector<int> r;
        for (int x = a; x <= b; ++x) r.push_back(x);
        return r;
    };
    std::vector<int> skip;  // [1,k] without k-1
    for (int x = 1; x <= k; ++x)
        if (x != k - 1) skip.push_back(x);
    const T lhs = D(range(2, k), range(1, k - 1)) *
                  (D(range(1, k - 1), range(1, k - 1)) * D(range(3, k + 1), skip) - D(range(1, k - 1), skip) * D(range(3, k + 1), range(1, k - 1)));
    const T rhs = D(range(2, k - 1), range(1, k - 2)) * D(range(3, k + 1), range(1, k - 1)) * D(range(1, k), range(1, k)) +
                  D(range(3, k), range(1, k - 2)) * D(range(1, k - 1), range(1, k - 1)) * D(range(2, k + 1), range(1, k));
    return {lhs, rhs};
}

}  // namespace

Report verify_cubic_numeric(int kmax, const VerifyOptions& o) {
    return run_samples("cubic", o, [&](Report& rep, uint64_t seed) {
        RationalSampler rng(seed);
        for (int k = 2; k <= kmax; ++k) {
            Matrix a(k + 1, k);
            for (int r = 0; r <= k; ++r)
                for (int col = 0; col < k; ++col) a(r, col) = rng.next();
            auto [lhs, rhs] = cubic_sides<Q>(k, [&](const std::vector<int>& P, const std::vector<int>& C) { return minor(a, P, C); });
            rep.expect(lhs == rhs, "cubic k=" + std::to_string(k) + ": " + fmt(lhs) + " != " + fmt(rhs));
        }
    });
}

Report verify_cubic_symbolic(int k) {
    Report rep;
    rep.check = "cubic-symbolic";
    auto D = [](const std::vector<int>& P, const std::vector<int>& C) {
        std::vector<std::vector<SparsePoly>> m;
        for (int r : P) {
            std::vector<SparsePoly> row;
            for (int col : C) row.push_back(SparsePoly::var({r, col}));
            m.push_back(std::move(row));
        }
        return poly_det(m);
    };
    auto [lhs, rhs] = cubic_sides<SparsePoly>(k, D);
    rep.expect(lhs == rhs, "cubic identity fails symbolically at k=" + std::to_string(k));
    return rep;
}

Report verify_exchange_and_translation(int max_rank, int M, int N) {
    Report rep;
    rep.check = "exchange-translation";
    for (const auto& d : all_types(max_rank))
        for (const auto& w : all_coxeter_words(d)) {
            const CoxeterElement c = make_coxeter(d, w);
            Report r = verify_red_exchange_shape(c, build_gamma_tilde_window(c, M, N));
            r.merge(verify_tau_translation(c, M, N, Color::red));
            r.merge(verify_tau_translation(c, M, N, Color::green));
            for (auto& m : r.messages) m = d.name() + " " + format_word(w) + ": " + m;
            rep.merge(r);
        }
    return rep;
}

Report verify_max_rank(int max_rank, int bound) {
    Report rep;
    rep.check = "max-rank";
    for (const auto& d : all_types(max_rank))
        for (const auto& w : all_coxeter_words(d)) {
            const CoxeterElement c = make_coxeter(d, w);
            for (int M = -bound; M <= 0; ++M)
                for (int N = 0; N <= bound; ++N) {
                    const std::string at = d.name() + " " + format_word(w) + " (" + std::to_string(M) + "," + std::to_string(N) + ")";
                    rep.expect(max_rank_check(build_gamma_tilde_window(c, M, N).quiver), "Gamma~ window " + at + " is not of full rank");
                    rep.expect(max_rank_check(build_xi_window(c, M, N).quiver), "Xi window " + at + " is not of full rank");
                }
        }
    return rep;
}

const std::vector<std::string>& verify_kinds() {
    static const std::vector<std::string> k{"gluing",      "theta-psi",      "tsystem",  "cubic",     "fz-minor",
                                            "translation", "black-mutation", "seq-m",    "laurent3",  "theta-poly"};
    return k;
}

Report verify_kind(const std::string& kind, const VerifyOptions& o) {
    if (kind == "gluing") return verify_gluing(o);
    if (kind == "theta-psi") return verify_theta_psi(o);
    if (kind == "tsystem") return verify_tsystem(o);
    if (kind == "fz-minor") return verify_fz_minor(o);
    if (kind == "black-mutation") return verify_black_mutation(o);
    if (kind == "laurent3") return verify_laurent3(o);
    if (kind == "translation") return verify_translation(o);
    if (kind == "seq-m") return verify_seq_m(o);
    if (kind == "theta-poly") return verify_theta_poly(o);
    if (kind == "cubic") {
        Report r = verify_cubic_numeric(6, o);
        r.merge(verify_cubic_symbolic(2));
        r.merge(verify_cubic_symbolic(3));
        return r;
    }
    throw std::invalid_argument("unknown check '" + kind + "'");
}

}  // namespace bandlab
