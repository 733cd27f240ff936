#include "bandlab/tsystem.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

namespace bandlab {

namespace {

SparsePoly shift(const SparsePoly& p, int ds) {
    if (ds == 0) return p;
    return p.map_vars([ds](Var v) { return Var{v.first + ds, v.second}; });
}

std::string sup(int s) { return "^{(" + std::to_string(s) + ")}"; }

}  // namespace

const SparsePoly& ThetaRing::at_zero(int i, int k) const {
    {
        std::shared_lock lock(mu_);
        auto it = memo_.find({i, k});
        if (it != memo_.end()) return it->second;
    }
    SparsePoly p;
    if (k == 0) p = SparsePoly(1);
    else if (k == 1) p = SparsePoly::var(theta_var(i, 0));
    else {
        // theta^{(0)}_{i,k} = (theta^{(0)}_{i,k-1} theta^{(1)}_{i,k-1} - prod_j theta^{(a_ij)}_{j,k-1}) / theta^{(1)}_{i,k-2}
        const SparsePoly& prev = at_zero(i, k - 1);
        SparsePoly nb(1);
        for (int j : c_.data.neighbours(i)) nb = nb * shift(at_zero(j, k - 1), c_.a(i, j));
        p = (prev * shift(prev, 1) - nb) / shift(at_zero(i, k - 2), 1);
    }
    std::unique_lock lock(mu_);
    return memo_.try_emplace({i, k}, std::move(p)).first->second;
}

SparsePoly ThetaRing::theta(int i, int k, int s) const {
    if (k < 0) throw std::invalid_argument("theta needs k >= 0");
    if (i < 1 || i > c_.n()) return SparsePoly(1);
    return shift(at_zero(i, k), s);
}

SparsePoly theta_poly(const CoxeterElement& c, int i, int k, int s) { return ThetaRing(c).theta(i, k, s); }

std::string format_theta_poly(const SparsePoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, coef] : p.terms()) {
        const Q a = abs(coef);
        if (first) out += coef < 0 ? "−" : "";
        else out += coef < 0 ? " − " : " + ";
        first = false;
        std::string mono;
        for (const auto& [v, e] : m.e) {
            mono += "θ" + sup(v.first) + "_" + std::to_string(v.second);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) out += to_string(a);
        else if (a == 1) out += mono;
        else out += to_string(a) + mono;
    }
    return out;
}

std::string format_theta_expansion(const ThetaRing& ring, int i, int k, int s) {
    return "θ" + sup(s) + "_{" + std::to_string(i) + "," + std::to_string(k) + "} = " + format_theta_poly(ring.theta(i, k, s));
}

namespace {

struct LadderState {
    Quiver q;
    std::vector<SparsePoly> x;
    std::vector<int> n;  // current superscript per vertex
    std::vector<bool> source;
};

int find_vertex(const Quiver& q, int i, int row) { return q.find(i, row); }

// Does the subquiver on rows <= top match Lambda_top for one of the two
// orientations, with n shifted by a constant? Returns the source flags.
bool match_lambda(const CoxeterElement& c, const LadderState& st, int top, std::vector<bool>& src, std::string& why) {
    const int rank = c.n();
    for (bool plus : {true, false}) {
        ThetaSeed ref = build_theta_seed(c, top, 1, plus);
        bool ok = true;
        int off = 0;
        bool have_off = false;
        for (int a = 0; a < ref.seed.quiver.size() && ok; ++a) {
            const auto& va = ref.seed.quiver.vertex(a);
            const int x = find_vertex(st.q, va.i, va.r);
            const int d = st.n[x] - ref.n[va.i - 1][va.r - 1];
            if (!have_off) {
                off = d;
                have_off = true;
            } else if (d != off) ok = false;
            for (int b = 0; b < ref.seed.quiver.size() && ok; ++b) {
                const auto& vb = ref.seed.quiver.vertex(b);
                if (va.r == top && vb.r == top) continue;
                const int y = find_vertex(st.q, vb.i, vb.r);
                if (st.q.b(x, y) != ref.seed.quiver.b(a, b)) ok = false;
            }
        }
        if (ok) {
            src.assign(st.q.size(), false);
            for (int i = 1; i <= rank; ++i)
                for (int r = 1; r <= top; ++r) src[find_vertex(st.q, i, r)] = ref.source[i - 1][r - 1];
            return true;
        }
    }
    why = "rows <= " + std::to_string(top) + " do not form Lambda_" + std::to_string(top);
    return false;
}

}  // namespace

LadderResult ladder_verify(const CoxeterElement& c, int N) {
    LadderResult res;
    res.report.check = "ladder";
    ThetaRing ring(c);
    const int rank = c.n();
    const ThetaSeed init = build_theta_seed(c, N);
    std::map<int, std::set<int>> seen;

    auto fresh = [&]() {
        LadderState st;
        st.q = init.seed.quiver;
        for (int v = 0; v < st.q.size(); ++v) {
            const auto& lab = *init.seed.labels[v].theta;
            st.x.push_back(ring.theta(lab.i, lab.k, lab.s));
            st.n.push_back(lab.s);
            st.source.push_back(init.source[lab.i - 1][lab.k - 1]);
            if (lab.k == 1) seen[lab.i].insert(lab.s);
        }
        return st;
    };

    // first-step mutations
    {
        LadderState st = fresh();
        for (int v : st.q.mutable_vertices()) {
            const auto& vx = st.q.vertex(v);
            const int want = st.n[v] + (st.source[v] ? 1 : -1);
            try {
                SparsePoly y = exchange<SparsePoly>(st.q, v, st.x, SparsePoly(1));
                res.report.expect(y == ring.theta(vx.i, vx.r, want),
                                  "first step at " + vertex_name(vx) + " is not theta^(" + std::to_string(want) + ")");
            } catch (const std::domain_error&) {
                res.report.fail("first step at " + vertex_name(vx) + " is not polynomial");
            }
        }
    }

    for (int dir : {1, -1}) {
        LadderState st = fresh();
        for (int top = N; top >= 2; top -= 2) {
            // ascending: sources then sinks; descending the reverse
            for (int pass = 0; pass < 2; ++pass) {
                const bool want_source = (pass == 0) == (dir > 0);
                const int max_row = pass == 0 ? top - 1 : top - 2;
                for (int v = 0; v < st.q.size(); ++v) {
                    const auto& vx = st.q.vertex(v);
                    if (vx.r > max_row || st.source[v] != want_source) continue;
                    LadderStep step{v, vx.i, vx.r, st.n[v], st.n[v] + dir, {}};
                    try {
                        SparsePoly y = exchange<SparsePoly>(st.q, v, st.x, SparsePoly(1));
                        st.q.mutate(v);
                        st.x[v] = y;
                        st.n[v] += dir;
                        step.poly = format_theta_poly(y);
                        res.report.expect(y == ring.theta(vx.i, vx.r, st.n[v]),
                                          "ladder step at " + vertex_name(vx) + " is not " +
                                              theta_to_string(ThetaLabel{vx.i, vx.r, st.n[v]}));
                        if (vx.r == 1) seen[vx.i].insert(st.n[v]);
                    } catch (const std::domain_error&) {
                        res.report.fail("ladder step at " + vertex_name(vx) + " is not polynomial");
                        return res;
                    }
                    res.steps.push_back(step);
                }
            }
            if (top - 2 >= 1) {
                std::string why;
                std::vector<bool> src;
                if (!match_lambda(c, st, top - 2, src, why)) {
                    res.report.fail(why);
                    break;
                }
                res.report.pass();
                st.source = src;
            }
        }
    }

    for (int i = 1; i <= rank; ++i) {
        std::vector<int> got(seen[i].begin(), seen[i].end());
        res.collected[i] = got;
        std::vector<int> want;
        const int lo = init.n[i - 1][N - 1];
        for (int s = lo; s < lo + N; ++s) want.push_back(s);
        std::ostringstream msg;
        msg << "row-1 values of column " << i << " are {";
        for (size_t a = 0; a < got.size(); ++a) msg << (a ? "," : "") << got[a];
        msg << "}, expected [" << lo << "," << lo + N - 1 << "]";
        res.report.expect(got == want, msg.str());
    }
    return res;
}

KRLabel kr_label(const CoxeterElement& c, int i, int k, int s) { return {i, k, 2 * s + 1 - c.xi_of(i)}; }

std::string format_kr(const KRLabel& w, bool rank_one) {
    std::string out = "[W";
    if (!rank_one) out += sup(w.i);
    return out + "_{" + std::to_string(w.k) + ",q^" + std::to_string(w.r) + "}]";
}

std::string tsystem_as_KNS(const CoxeterElement& c, int i, int k, int s) {
    const bool r1 = c.n() == 1;
    std::string out = format_kr(kr_label(c, i, k, s), r1) + format_kr(kr_label(c, i, k, s + 1), r1) + " = " +
                      format_kr(kr_label(c, i, k + 1, s), r1) + format_kr(kr_label(c, i, k - 1, s + 1), r1) + " + ";
    std::string nb;
    for (int j : c.data.neighbours(i)) nb += format_kr(kr_label(c, j, k, s + c.a(i, j)), r1);
    return out + (nb.empty() ? "1" : nb);
}

Report verify_kr_dictionary(const CoxeterElement& c, int kmax, int smax) {
    Report rep;
    rep.check = "kr-dictionary";
    std::set<std::tuple<int, int, int>> image;
    for (int i = 1; i <= c.n(); ++i)
        for (int k = 1; k <= kmax; ++k)
            for (int s = -smax; s <= smax; ++s) {
                const KRLabel w = kr_label(c, i, k, s);
                const std::string at = "(" + std::to_string(i) + "," + std::to_string(k) + "," + std::to_string(s) + ")";
                image.insert({w.i, w.k, w.r});
                // inverse: s = (r - 1 + xi_i) / 2
                rep.expect((w.r - 1 + c.xi_of(i)) % 2 == 0 && (w.r - 1 + c.xi_of(i)) / 2 == s, "kr_label not invertible at " + at);
                rep.expect(kr_label(c, i, k, s + 1).r == w.r + 2, "shift s+1 is not q^{r+2} at " + at);
                rep.expect(kr_label(c, i, k + 1, s) == KRLabel{i, k + 1, w.r}, "level k+1 mismatch at " + at);
                for (int j : c.data.neighbours(i))
                    rep.expect(kr_label(c, j, k, s + c.a(i, j)).r == w.r + 1,
                               "neighbour " + std::to_string(j) + " is not at q^{r+1} at " + at);
            }
    rep.expect(static_cast<int>(image.size()) == c.n() * kmax * (2 * smax + 1), "kr_label is not injective");
    return rep;
}

}  // namespace bandlab
