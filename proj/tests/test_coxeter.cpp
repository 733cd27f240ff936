#include "bandlab/coxeter.hpp"

#include <doctest.h>

#include <algorithm>

using namespace bandlab;

TEST_CASE("D5 example data") {
    auto c = make_coxeter(parse_type("D5"), {2, 4, 1, 3, 5});
    CHECK(c.m == std::vector<int>{4, 4, 4, 5, 3});
    CHECK(c.xi == std::vector<int>{-1, 0, -1, 0, -2});
    CHECK(c.tilde_word == Word{4, 3, 1, 5, 2});
    CHECK(c.adapted == Word{2, 4, 1, 3, 5, 2, 4, 1, 3, 5, 2, 4, 1, 3, 5, 2, 4, 1, 3, 4});
    std::vector<std::pair<int, int>> q = c.q_arrows;
    std::sort(q.begin(), q.end());
    CHECK(q == std::vector<std::pair<int, int>>{{2, 1}, {2, 3}, {3, 5}, {4, 3}});
    CHECK(w_ik(c, 1, 2) == Word{2, 4, 1});
    CHECK(w_ik(c, 2, 2) == Word{2});
    CHECK(w_ik(c, 3, 1).empty());
    CHECK_THROWS(w_ik(c, 5, 4));

    auto dims = ar_dimension_vectors(c);
    CHECK(dims.at(9) == std::vector<int>{1, 2, 2, 1, 1});
    CHECK(dims.at(7) == std::vector<int>{0, 1, 1, 0, 0});
    // c(alpha_2) = alpha_1 + alpha_2 + alpha_3 + alpha_4
    auto img = to_root_coords(c.data, coxeter_power(c, simple_root(c.data, 2), 1));
    CHECK(img == std::vector<Q>{1, 1, 1, 1, 0});
}

TEST_CASE("tilde and small type A examples") {
    auto a3 = make_coxeter(parse_type("A3"), {1, 3, 2});
    CHECK(a3.tilde_word == Word{2, 1, 3});
    CHECK(tilde_coxeter(a3).xi == std::vector<int>{-1, 0, -1});
    CHECK(a3.xi == std::vector<int>{0, -1, 0});
    CHECK(a3.m == std::vector<int>{2, 2, 2});
    auto a4 = make_coxeter(parse_type("A4"), {1, 2, 4, 3});
    CHECK(a4.tilde_word == Word{2, 1, 3, 4});
    CHECK(tilde_coxeter(a4).xi == std::vector<int>{-1, 0, -1, -2});
    CHECK(a4.m == std::vector<int>{3, 3, 2, 2});
    auto a2 = make_coxeter(parse_type("A2"), {1, 2});
    CHECK(a2.adapted == Word{1, 2, 1});
    CHECK(coxeter_power_weight(a2, 1, 2) == -fundamental(a2.data, 2));
    CHECK(coxeter_power_weight(a2, 1, 0) == fundamental(a2.data, 1));
    for (int n = 2; n <= 6; ++n) {
        auto c = standard_coxeter(make_cartan('A', n - 1));
        CHECK(c.tilde_word == c.word);
        for (int i = 1; i < n; ++i) {
            CHECK(c.m_of(i) == n - i);
            CHECK(c.xi_of(i) == 1 - i);
        }
    }
    CHECK_THROWS(make_coxeter(parse_type("A3"), {1, 1, 2}));
}

TEST_CASE("invariants over every Coxeter word of rank <= 5") {
    for (const auto& d : all_types(5)) {
        const int npos = static_cast<int>(positive_roots(d).size());
        for (const auto& w : all_coxeter_words(d)) {
            auto c = make_coxeter(d, w);
            auto ct = tilde_coxeter(c);
            CHECK(ct.tilde_word == c.word);
            CHECK(ct.m == c.m);
            int sum = 0;
            for (int i = 1; i <= d.rank; ++i) {
                sum += c.m_of(i);
                CHECK(std::count(c.adapted.begin(), c.adapted.end(), i) == c.m_of(i));
                CHECK(coxeter_power_weight(c, i, c.m_of(i)) == -fundamental(d, c.nu[i - 1]));
                for (int k = 1; k <= c.m_of(i); ++k) {
                    Word wik = w_ik(c, i, k);
                    CHECK(apply_word(d, wik, fundamental(d, i)) == coxeter_power_weight(c, i, k - 1));
                    Word cw = c.word;
                    cw.insert(cw.end(), wik.begin(), wik.end());
                    CHECK(word_length(d, cw) == d.rank + word_length(d, wik));
                }
                if (c.m_of(i) == 1) {
                    CHECK(d.kind == 'A');
                    bool st = w == standard_coxeter(d).word;
                    bool st_inv = w == inverse_word(standard_coxeter(d).word);
                    CHECK((st && i == d.rank) + (st_inv && i == 1) >= 1);
                }
            }
            CHECK(sum == npos);
            CHECK(word_length(d, c.adapted) == npos);
            // i_1 is a source of Q and xi has the right steps
            for (auto [a, b] : c.q_arrows) {
                CHECK(b != c.word[0]);
                CHECK(c.xi_of(b) == c.xi_of(a) - 1);
            }
            CHECK(c.xi_of(c.word[0]) == 0);
            CHECK_NOTHROW(ar_dimension_vectors(c));
        }
    }
}

TEST_CASE("word parsing") {
    CHECK(parse_word("2,4,1,3,5") == Word{2, 4, 1, 3, 5});
    CHECK(format_word({2, 1}) == "(2,1)");
    CHECK_THROWS(parse_word("1,x"));
}
