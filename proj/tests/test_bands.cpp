#include "bandlab/bands.hpp"

#include <doctest.h>

using namespace bandlab;

namespace {

Matrix from_rows(const std::vector<std::vector<int>>& r) {
    Matrix m(static_cast<int>(r.size()), static_cast<int>(r[0].size()));
    for (size_t a = 0; a < r.size(); ++a)
        for (size_t b = 0; b < r[a].size(); ++b) m(a, b) = r[a][b];
    return m;
}

// Random reduced word in S_n: keep a letter only if it lengthens the word.
Word random_reduced(const CartanData& d, RationalSampler& rng, int tries) {
    Word w;
    for (int t = 0; t < tries; ++t) {
        Word x = w;
        x.push_back(rng.uniform(1, d.rank));
        if (word_length(d, x) == static_cast<int>(x.size())) w = x;
    }
    return w;
}

}  // namespace

TEST_CASE("sampled windows are bands") {
    for (int n = 2; n <= 5; ++n)
        for (uint64_t seed = 0; seed < 5; ++seed) {
            auto b = sample_band(n, -3, 4, stream_seed(11, seed));
            CHECK(is_band(b));
            CHECK(b.rows().rows() == 4 + 3 + n);
        }
}

TEST_CASE("extend and slice round trip") {
    RationalSampler rng(5);
    auto b = sample_band(3, -1, 1, 9);
    auto st = random_step(3, rng);
    auto f = extend_forward(b, st);
    CHECK(f.N() == 2);
    CHECK(is_band(f));
    CHECK(f.step(1).a == st.a);
    CHECK(slice(f, -1, 1).rows() == b.rows());
    auto g = extend_backward(b, st);
    CHECK(g.M() == -2);
    CHECK(g.step(-2).a == st.a);
    CHECK(slice(g, -1, 1).rows() == b.rows());
    CHECK_THROWS(slice(b, -2, 0));
}

TEST_CASE("the SL(2) example array") {
    // rows -2 .. 4 of the infinite array; B(0) is rows 0,1
    Matrix rows = from_rows({{4, 5}, {3, 4}, {2, 3}, {1, 2}, {2, 5}, {3, 8}, {4, 11}});
    BandWindow b(2, -2, 3, rows);
    CHECK(is_band(b));
    CHECK(b.block(0) == from_rows({{2, 3}, {1, 2}}));
    CHECK(b.step(0).a == std::vector<Q>{4});
    CHECK(b.step(1).a == std::vector<Q>{2});
    // g(s) = [[s, 3s-1], [s+1, 3s+2]] for s > 0 and g(-s) = [[s+2, s+3], [s+1, s+2]]
    for (int s = 1; s <= 3; ++s) CHECK(b.block(s) == from_rows({{s, 3 * s - 1}, {s + 1, 3 * s + 2}}));
    for (int s = 0; s <= 2; ++s) CHECK(b.block(-s) == from_rows({{s + 2, s + 3}, {s + 1, s + 2}}));
    std::vector<UnipotentStep> steps;
    for (int s = -2; s < 3; ++s) steps.push_back(b.step(s));
    CHECK(make_band(b.block(0), -2, 3, steps).rows() == rows);
}

TEST_CASE("SL(2) band with zero steps") {
    auto b = make_band(Matrix::identity(2), 0, 1, {UnipotentStep{{0}}});
    CHECK(b.block(1) == from_rows({{0, 1}, {-1, 0}}));
    CHECK(step_matrix(2, UnipotentStep{{0}}) == from_rows({{0, -1}, {1, 0}}));
}

TEST_CASE("minor from weights agrees with the lifted definition") {
    RationalSampler rng(21);
    for (int n = 2; n <= 5; ++n) {
        CartanData d = make_cartan('A', n - 1);
        for (int rep = 0; rep < 30; ++rep) {
            Matrix g = random_sl(n, rng);
            Word u = random_reduced(d, rng, 12), v = random_reduced(d, rng, 12);
            const int i = rng.uniform(1, n - 1);
            Weight uw = apply_word(d, u, fundamental(d, i)), vw = apply_word(d, v, fundamental(d, i));
            INFO("n=" << n << " u=" << format_word(u) << " v=" << format_word(v) << " i=" << i);
            CHECK(generalized_minor(g, u, v, i) == minor_by_weights(g, i, uw, vw));
        }
    }
}

TEST_CASE("lift is a signed permutation of determinant one") {
    for (int n = 2; n <= 5; ++n) {
        CartanData d = make_cartan('A', n - 1);
        auto w0 = longest_element(d).word;
        Matrix m = lift(n, w0);
        CHECK(det(m) == 1);
        // w0 reverses the basis up to sign
        for (int a = 0; a < n; ++a) CHECK(abs(m(n - 1 - a, a)) == 1);
    }
    CHECK(lift(2, {1}) == from_rows({{0, -1}, {1, 0}}));
}

TEST_CASE("minors are invariant under the unipotent step quotient") {
    // theta is a function of B(s) B(s+k)^{-1}, so the right G-action fixes it
    RationalSampler rng(3);
    for (int n = 2; n <= 4; ++n) {
        auto b = sample_band(n, -1, 3, stream_seed(3, n));
        auto bg = act_group(b, random_sl(n, rng));
        for (int s = -1; s <= 0; ++s)
            for (int i = 1; i < n; ++i)
                for (int k = 1; s + k <= 3; ++k) CHECK(theta(b, s, i, k) == theta(bg, s, i, k));
    }
}

TEST_CASE("left torus action scales a minor by its left weight") {
    for (int n = 2; n <= 4; ++n) {
        auto c = sl_standard(n);
        auto ct = tilde_coxeter(c);
        auto b = sample_band(n, -3, 3, stream_seed(17, n));
        std::vector<Q> t;
        Q prod = 1;
        for (int a = 0; a + 1 < n; ++a) {
            t.push_back(Q(a + 2, 2 * a + 3));
            prod *= t.back();
        }
        t.push_back(1 / prod);
        auto bt = act_torus(b, t);
        for (int s = -3; s <= 3; ++s)
            for (int i = 1; i < n; ++i)
                for (int k = -2; k <= 2; ++k)
                    for (int l = -1; l <= 1; ++l) {
                        MinorLabel m{i, s, k, l};
                        Weight left = coxeter_power(c, coxeter_power_weight(c, i, k), s);
                        CHECK(eval_minor_label(bt, c, ct, m) == character(left, t) * eval_minor_label(b, c, ct, m));
                    }
    }
}

TEST_CASE("psi is a maximal minor of the band") {
    auto b = sample_band(3, 0, 4, 8);
    CHECK(psi(b, 0, 1, 0) == 1);
    CHECK(psi(b, 0, 2, 1) == b.minor({0, 1, 3}, {1, 2, 3}));
    CHECK(theta(b, 1, 2, 0) == 1);
    CHECK_THROWS(theta(b, 3, 1, 2));
}
