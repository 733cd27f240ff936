#include "bandlab/coxeter.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bandlab {

int CoxeterElement::position(int i) const {
    for (size_t p = 0; p < word.size(); ++p)
        if (word[p] == i) return static_cast<int>(p);
    throw std::out_of_range("letter not in Coxeter word");
}

CoxeterElement make_coxeter(const CartanData& d, const Word& word) {
    const int n = d.rank;
    {
        Word sorted = word;
        std::sort(sorted.begin(), sorted.end());
        Word expect(n);
        std::iota(expect.begin(), expect.end(), 1);
        if (sorted != expect) throw std::invalid_argument("Coxeter word must be a permutation of [1," + std::to_string(n) + "]");
    }
    CoxeterElement c;
    c.data = d;
    c.word = word;
    for (auto [a, b] : d.edges) {
        if (c.position(a) < c.position(b)) c.q_arrows.emplace_back(a, b);
        else c.q_arrows.emplace_back(b, a);
    }

    // Height function: xi_{i_1} = 0 and xi_j = xi_i - 1 along each arrow i -> j.
    c.xi.assign(n, 0);
    std::vector<bool> done(n, false);
    done[word[0] - 1] = true;
    for (bool changed = true; changed;) {
        changed = false;
        for (auto [a, b] : c.q_arrows) {
            if (done[a - 1] && !done[b - 1]) {
                c.xi[b - 1] = c.xi[a - 1] - 1;
                done[b - 1] = changed = true;
            } else if (done[b - 1] && !done[a - 1]) {
                c.xi[a - 1] = c.xi[b - 1] + 1;
                done[a - 1] = changed = true;
            }
        }
    }

    LongestElement le = longest_element(d);
    c.w0 = le.word;
    c.nu = le.nu;

    c.m.assign(n, 0);
    for (int i = 1; i <= n; ++i) {
        Weight target = -fundamental(d, c.nu[i - 1]);
        Weight cur = fundamental(d, i);
        int k = 0;
        while (cur != target) {
            cur = apply_word(d, word, cur);
            if (++k > 4 * n + 4) throw std::logic_error("m_i search did not terminate");
        }
        c.m[i - 1] = k;
    }

    for (auto it = word.rbegin(); it != word.rend(); ++it) c.tilde_word.push_back(c.nu[*it - 1]);
    // c~ = w0 c^{-1} w0 on every fundamental weight
    Word def = c.w0;
    Word cinv = inverse_word(word);
    def.insert(def.end(), cinv.begin(), cinv.end());
    def.insert(def.end(), c.w0.begin(), c.w0.end());
    for (int i = 1; i <= n; ++i)
        if (apply_word(d, def, fundamental(d, i)) != apply_word(d, c.tilde_word, fundamental(d, i)))
            throw std::logic_error("tilde word disagrees with w0 c^-1 w0");

    // Adapted word: cycle through c's letters, keep a letter iff it lengthens.
    const int big_n = static_cast<int>(positive_roots(d).size());
    int len = 0;
    while (len < big_n) {
        bool grew = false;
        for (int letter : word) {
            Word cand = c.adapted;
            cand.push_back(letter);
            if (word_length(d, cand) == len + 1) {
                c.adapted = std::move(cand);
                ++len;
                grew = true;
            }
        }
        if (!grew) throw std::logic_error("adapted word construction stalled");
    }
    if (!std::equal(word.begin(), word.end(), c.adapted.begin())) throw std::logic_error("adapted word does not start with c");
    return c;
}

CoxeterElement tilde_coxeter(const CoxeterElement& c) { return make_coxeter(c.data, c.tilde_word); }

CoxeterElement standard_coxeter(const CartanData& d) {
    Word w(d.rank);
    std::iota(w.begin(), w.end(), 1);
    return make_coxeter(d, w);
}

Weight coxeter_power(const CoxeterElement& c, const Weight& lam, int k) {
    Weight cur = lam;
    const Word inv = inverse_word(c.word);
    for (int t = 0; t < std::abs(k); ++t) cur = apply_word(c.data, k > 0 ? c.word : inv, cur);
    return cur;
}

Weight coxeter_power_weight(const CoxeterElement& c, int i, int k) { return coxeter_power(c, fundamental(c.data, i), k); }

Word w_ik(const CoxeterElement& c, int i, int k) {
    if (i < 1 || i > c.n()) throw std::out_of_range("w_ik: node out of range");
    if (k < 1 || k > c.m_of(i)) throw std::out_of_range("w_ik: k out of range [1,m_i]");
    if (k == 1) return {};
    int seen = 0;
    for (size_t p = 0; p < c.adapted.size(); ++p) {
        if (c.adapted[p] == i && ++seen == k) return Word(c.adapted.begin() + c.n(), c.adapted.begin() + static_cast<long>(p) + 1);
    }
    throw std::logic_error("w_ik: letter count below m_i");
}

std::map<int, std::vector<int>> ar_dimension_vectors(const CoxeterElement& c) {
    std::map<int, std::vector<int>> out;
    std::vector<int> count(c.n(), 0);
    for (size_t p = 0; p < c.adapted.size(); ++p) {
        int i = c.adapted[p];
        int k = ++count[i - 1];
        Weight diff = coxeter_power_weight(c, i, k - 1) - coxeter_power_weight(c, i, k);
        auto beta = to_root_coords(c.data, diff);
        std::vector<int> ib;
        bool positive = false;
        for (const Q& q : beta) {
            if (q.get_den() != 1 || q < 0) throw std::logic_error("dimension vector is not a positive root");
            ib.push_back(static_cast<int>(q.get_num().get_si()));
            if (q > 0) positive = true;
        }
        if (!positive || std::find(positive_roots(c.data).begin(), positive_roots(c.data).end(), ib) == positive_roots(c.data).end())
            throw std::logic_error("dimension vector is not a positive root");
        out[static_cast<int>(p) + 1] = ib;
    }
    return out;
}

std::vector<Word> all_coxeter_words(const CartanData& d) {
    Word w(d.rank);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Word> out;
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

Word parse_word(const std::string& s) {
    Word w;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        size_t used = 0;
        int x = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("bad word: " + s);
        w.push_back(x);
    }
    return w;
}

std::string format_word(const Word& w) {
    std::string s = "(";
    for (size_t k = 0; k < w.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(w[k]);
    }
    return s + ")";
}

}  // namespace bandlab
