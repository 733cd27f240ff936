#include "bandlab/bands.hpp"

#include <map>
#include <stdexcept>

namespace bandlab {

namespace {

const CartanData& type_a(int n) {
    thread_local std::map<int, CartanData> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_cartan('A', n - 1)).first;
    return it->second;
}

// w-bar e_b = sign * e_{image}, letters applied right to left.
std::pair<int, int> lift_basis(const Word& w, int b) {
    int idx = b, sign = 1;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        const int j = *it;
        if (idx == j) idx = j + 1;
        else if (idx == j + 1) {
            idx = j;
            sign = -sign;
        }
    }
    return {idx, sign};
}

Q leading_minor(const Matrix& g, int i) {
    std::vector<int> r(i);
    for (int a = 0; a < i; ++a) r[a] = a;
    return det(g.select(r, r));
}

}  // namespace

Matrix step_matrix(int n, const UnipotentStep& st) {
    if (static_cast<int>(st.a.size()) != n - 1) throw std::invalid_argument("step needs n-1 parameters");
    Matrix x(n, n);
    for (int k = 0; k < n - 1; ++k) x(0, k) = st.a[k];
    x(0, n - 1) = (n - 1) % 2 ? -1 : 1;
    for (int r = 1; r < n; ++r) x(r, r - 1) = 1;
    return x;
}

BandWindow::BandWindow(int n, int M, int N, Matrix rows) : n_(n), M_(M), N_(N), rows_(std::move(rows)) {
    if (M > N) throw std::invalid_argument("band window needs M <= N");
    if (rows_.rows() != N - M + n || rows_.cols() != n) throw std::invalid_argument("band window has the wrong shape");
}

const Q& BandWindow::at(int row, int col) const {
    if (row < M_ || row > N_ + n_ - 1 || col < 1 || col > n_)
        throw std::out_of_range("band entry (" + std::to_string(row) + "," + std::to_string(col) + ") outside the window");
    return rows_(row - M_, col - 1);
}

Matrix BandWindow::block(int s) const {
    if (s < M_ || s > N_) throw std::out_of_range("block B(" + std::to_string(s) + ") outside the window");
    std::vector<int> rs(n_), cs(n_);
    for (int a = 0; a < n_; ++a) {
        rs[a] = s - M_ + a;
        cs[a] = a;
    }
    return rows_.select(rs, cs);
}

Q BandWindow::minor(const std::vector<int>& band_rows, const std::vector<int>& cols) const {
    if (band_rows.size() != cols.size()) throw std::invalid_argument("minor needs as many rows as columns");
    std::vector<int> rs, cs;
    for (int r : band_rows) {
        if (r < M_ || r > N_ + n_ - 1) throw std::out_of_range("band row " + std::to_string(r) + " outside the window");
        rs.push_back(r - M_);
    }
    for (int c : cols) cs.push_back(c - 1);
    return det(rows_.select(rs, cs));
}

UnipotentStep BandWindow::step(int s) const {
    Matrix x = block(s) * inverse(block(s + 1));
    UnipotentStep st;
    for (int k = 0; k < n_ - 1; ++k) st.a.push_back(x(0, k));
    return st;
}

BandWindow make_band(const Matrix& g0, int M, int N, const std::vector<UnipotentStep>& steps) {
    const int n = g0.rows();
    if (!(M <= 0 && 0 <= N)) throw std::invalid_argument("band window needs M <= 0 <= N");
    if (det(g0) != 1) throw std::invalid_argument("B(0) is not unimodular");
    if (static_cast<int>(steps.size()) != N - M) throw std::invalid_argument("need one step per s in [M, N-1]");
    const Q sgn = (n - 1) % 2 ? -1 : 1;
    Matrix rows(N - M + n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) rows(-M + a, b) = g0(a, b);
    // forward: r_{s+n} = (-1)^{n-1} (r_s - sum_k a_k r_{s+k})
    for (int s = 0; s < N; ++s) {
        const auto& a = steps[s - M].a;
        for (int col = 0; col < n; ++col) {
            Q v = rows(s - M, col);
            for (int k = 1; k < n; ++k) v -= a[k - 1] * rows(s + k - M, col);
            rows(s + n - M, col) = sgn * v;
        }
    }
    // backward: r_s = sum_k a_k r_{s+k} + (-1)^{n-1} r_{s+n}
    for (int s = -1; s >= M; --s) {
        const auto& a = steps[s - M].a;
        for (int col = 0; col < n; ++col) {
            Q v = sgn * rows(s + n - M, col);
            for (int k = 1; k < n; ++k) v += a[k - 1] * rows(s + k - M, col);
            rows(s - M, col) = v;
        }
    }
    return BandWindow(n, M, N, std::move(rows));
}

Matrix random_sl(int n, RationalSampler& rng) {
    Matrix l = Matrix::identity(n), u = Matrix::identity(n), d = Matrix::identity(n);
    Q prod = 1;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a > b) l(a, b) = rng.next();
            if (a < b) u(a, b) = rng.next();
        }
    for (int a = 0; a + 1 < n; ++a) {
        d(a, a) = rng.next_nonzero();
        prod *= d(a, a);
    }
    d(n - 1, n - 1) = 1 / prod;
    // a random signed permutation keeps the leading minors from being special
    Word w;
    const int len = rng.uniform(0, n * (n - 1) / 2);
    for (int t = 0; t < len && n > 1; ++t) w.push_back(rng.uniform(1, n - 1));
    return lift(n, w) * l * d * u;
}

UnipotentStep random_step(int n, RationalSampler& rng) {
    UnipotentStep st;
    for (int k = 0; k < n - 1; ++k) st.a.push_back(rng.next());
    return st;
}

BandWindow sample_band(int n, int M, int N, uint64_t seed) {
    if (n < 2) throw std::invalid_argument("bands need n >= 2");
    RationalSampler rng(seed);
    Matrix g0 = random_sl(n, rng);
    std::vector<UnipotentStep> steps;
    for (int s = M; s < N; ++s) steps.push_back(random_step(n, rng));
    return make_band(g0, M, N, steps);
}

BandWindow extend_forward(const BandWindow& b, const UnipotentStep& st) {
    const int n = b.n();
    std::vector<UnipotentStep> steps;
    for (int s = b.M(); s < b.N(); ++s) steps.push_back(b.step(s));
    steps.push_back(st);
    if (b.M() > 0 || b.N() < 0) throw std::invalid_argument("window must contain 0");
    (void)n;
    return make_band(b.block(0), b.M(), b.N() + 1, steps);
}

BandWindow extend_backward(const BandWindow& b, const UnipotentStep& st) {
    std::vector<UnipotentStep> steps{st};
    for (int s = b.M(); s < b.N(); ++s) steps.push_back(b.step(s));
    if (b.M() > 0 || b.N() < 0) throw std::invalid_argument("window must contain 0");
    return make_band(b.block(0), b.M() - 1, b.N(), steps);
}

BandWindow slice(const BandWindow& b, int M, int N) {
    if (M < b.M() || N > b.N() || M > N) throw std::out_of_range("slice outside the window");
    const int n = b.n();
    Matrix rows(N - M + n, n);
    for (int r = M; r <= N + n - 1; ++r)
        for (int c = 1; c <= n; ++c) rows(r - M, c - 1) = b.at(r, c);
    return BandWindow(n, M, N, std::move(rows));
}

bool is_band(const BandWindow& b) {
    const int n = b.n();
    for (int s = b.M(); s <= b.N(); ++s)
        if (det(b.block(s)) != 1) return false;
    for (int s = b.M(); s < b.N(); ++s) {
        Matrix x = b.block(s) * inverse(b.block(s + 1));
        if (!(x == step_matrix(n, b.step(s)))) return false;
    }
    return true;
}

Matrix lift(int n, const Word& w) {
    Matrix m(n, n);
    for (int b = 1; b <= n; ++b) {
        auto [idx, sign] = lift_basis(w, b);
        m(idx - 1, b - 1) = sign;
    }
    return m;
}

Q generalized_minor(const Matrix& g, const Word& u, const Word& v, int i) {
    const int n = g.rows();
    Matrix lu = lift(n, u);
    Matrix lut(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) lut(a, b) = lu(b, a);
    return leading_minor(lut * g * lift(n, v), i);
}

Q minor_by_weights(const Matrix& g, int i, const Weight& uw, const Weight& vw) {
    const int n = g.rows();
    const CartanData& d = type_a(n);
    Word u = minimal_word_to(d, i, uw);
    Word v = minimal_word_to(d, i, vw);
    std::vector<int> rs, cs;
    int sign = 1;
    for (int b = 1; b <= i; ++b) {
        auto [ru, su] = lift_basis(u, b);
        auto [cv, sv] = lift_basis(v, b);
        rs.push_back(ru - 1);
        cs.push_back(cv - 1);
        sign *= su * sv;
    }
    Q val = det(g.select(rs, cs));
    return sign > 0 ? val : Q(-val);
}

Q eval_minor_label(const BandWindow& b, const CoxeterElement& c, const CoxeterElement& ct, const MinorLabel& m) {
    return minor_by_weights(b.block(m.s), m.i, coxeter_power_weight(c, m.i, m.k), coxeter_power_weight(ct, m.i, m.l));
}

Q flag_minor(const BandWindow& b, const std::vector<int>& band_rows) {
    std::vector<int> cols;
    for (size_t c = 1; c <= band_rows.size(); ++c) cols.push_back(static_cast<int>(c));
    return b.minor(band_rows, cols);
}

Q theta(const BandWindow& b, int s, int i, int k) {
    if (k == 0 || i == 0 || i == b.n()) return 1;
    if (k < 0 || i < 0 || i > b.n()) throw std::out_of_range("theta index out of range");
    return leading_minor(b.block(s) * inverse(b.block(s + k)), i);
}

Q psi(const BandWindow& b, int s, int i, int k) {
    const int n = b.n();
    if (k == 0 || i == 0 || i == n) return 1;
    std::vector<int> rs, cs;
    for (int r = s; r <= s + i - 1; ++r) rs.push_back(r);
    for (int r = s + i + k; r <= s + n + k - 1; ++r) rs.push_back(r);
    for (int c = 1; c <= n; ++c) cs.push_back(c);
    return b.minor(rs, cs);
}

BandWindow act_group(const BandWindow& b, const Matrix& g) {
    if (g.rows() != b.n() || det(g) != 1) throw std::invalid_argument("group element must be in SL(n)");
    return BandWindow(b.n(), b.M(), b.N(), b.rows() * g);
}

BandWindow act_torus(const BandWindow& b, const std::vector<Q>& t) {
    const int n = b.n();
    Q prod = 1;
    for (const Q& x : t) prod *= x;
    if (static_cast<int>(t.size()) != n || prod != 1) throw std::invalid_argument("torus element must be a unimodular diagonal");
    Matrix rows = b.rows();
    for (int r = b.M(); r <= b.N() + n - 1; ++r)
        for (int c = 0; c < n; ++c) rows(r - b.M(), c) *= t[((r % n) + n) % n];
    return BandWindow(n, b.M(), b.N(), std::move(rows));
}

Q character(const Weight& lam, const std::vector<Q>& d) {
    Q out = 1, prefix = 1;
    for (size_t j = 0; j < lam.size(); ++j) {
        prefix *= d[j];
        for (int e = 0; e < std::abs(lam[j]); ++e) out = lam[j] > 0 ? Q(out * prefix) : Q(out / prefix);
    }
    return out;
}

CoxeterElement sl_standard(int n) { return standard_coxeter(make_cartan('A', n - 1)); }

}  // namespace bandlab
