#include "bandlab/rootdata.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace bandlab {

namespace {

void check_index(const CartanData& d, int i) {
    if (i < 1 || i > d.rank) throw std::out_of_range("node index " + std::to_string(i) + " outside [1," + std::to_string(d.rank) + "]");
}

}  // namespace

std::vector<int> CartanData::neighbours(int i) const {
    std::vector<int> out;
    for (int j = 1; j <= rank; ++j)
        if (adjacent(i, j)) out.push_back(j);
    return out;
}

CartanData make_cartan(char kind, int n) {
    CartanData d;
    d.kind = kind;
    d.rank = n;
    std::vector<std::pair<int, int>> e;
    switch (kind) {
    case 'A':
        if (n < 1) throw std::invalid_argument("A_n needs n >= 1");
        for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
        break;
    case 'D':
        if (n < 4) throw std::invalid_argument("D_n needs n >= 4");
        for (int i = 1; i < n - 1; ++i) e.emplace_back(i, i + 1);
        e.emplace_back(n - 2, n);
        break;
    case 'E':
        if (n < 6 || n > 8) throw std::invalid_argument("E_n needs 6 <= n <= 8");
        e.emplace_back(1, 3);
        e.emplace_back(2, 4);
        for (int i = 3; i < n; ++i) e.emplace_back(i, i + 1);
        break;
    default:
        throw std::invalid_argument(std::string("unknown type ") + kind);
    }
    d.edges = e;
    d.cartan.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) d.cartan[i][i] = 2;
    for (auto [a, b] : e) d.cartan[a - 1][b - 1] = d.cartan[b - 1][a - 1] = -1;
    return d;
}

CartanData parse_type(const std::string& s) {
    if (s.size() < 2) throw std::invalid_argument("bad type descriptor: " + s);
    char k = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    int n = 0;
    try {
        size_t used = 0;
        n = std::stoi(s.substr(1), &used);
        if (used != s.size() - 1) throw std::invalid_argument("");
    } catch (...) {
        throw std::invalid_argument("bad type descriptor: " + s);
    }
    return make_cartan(k, n);
}

std::vector<CartanData> all_types(int max_rank) {
    std::vector<CartanData> out;
    for (int n = 1; n <= max_rank; ++n) {
        out.push_back(make_cartan('A', n));
        if (n >= 4) out.push_back(make_cartan('D', n));
        if (n >= 6 && n <= 8) out.push_back(make_cartan('E', n));
    }
    return out;
}

Weight fundamental(const CartanData& d, int i) {
    check_index(d, i);
    Weight w(d.rank, 0);
    w[i - 1] = 1;
    return w;
}

Weight simple_root(const CartanData& d, int i) {
    check_index(d, i);
    return d.cartan[i - 1];
}

Weight zero_weight(const CartanData& d) { return Weight(d.rank, 0); }

Weight operator+(const Weight& a, const Weight& b) {
    Weight r(a);
    for (size_t k = 0; k < r.size(); ++k) r[k] += b[k];
    return r;
}

Weight operator-(const Weight& a, const Weight& b) {
    Weight r(a);
    for (size_t k = 0; k < r.size(); ++k) r[k] -= b[k];
    return r;
}

Weight operator-(const Weight& a) {
    Weight r(a);
    for (int& x : r) x = -x;
    return r;
}

Weight scale(const Weight& a, int k) {
    Weight r(a);
    for (int& x : r) x *= k;
    return r;
}

void reflect_inplace(const CartanData& d, int i, Weight& lam) {
    const int li = lam[i - 1];
    if (li == 0) return;
    const auto& row = d.cartan[i - 1];
    for (int j = 0; j < d.rank; ++j) lam[j] -= li * row[j];
}

Weight apply_word(const CartanData& d, const Word& w, Weight lam) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        check_index(d, *it);
        reflect_inplace(d, *it, lam);
    }
    return lam;
}

Word inverse_word(const Word& w) { return Word(w.rbegin(), w.rend()); }

int pairing(const Weight& lam, int j) { return lam[j - 1]; }
int pairing_pos(const Weight& lam, int j) { return std::max(lam[j - 1], 0); }

std::vector<Q> to_root_coords(const CartanData& d, const Weight& lam) {
    Matrix c(d.rank, d.rank);
    for (int i = 0; i < d.rank; ++i)
        for (int j = 0; j < d.rank; ++j) c(i, j) = d.cartan[i][j];
    Matrix ci = inverse(c);
    std::vector<Q> out(d.rank, Q(0));
    // lam = sum_i beta_i alpha_i and alpha_i = row i, so lam^T = beta^T C.
    for (int j = 0; j < d.rank; ++j)
        for (int i = 0; i < d.rank; ++i) out[j] += Q(lam[i]) * ci(i, j);
    return out;
}

Weight from_root_coords(const CartanData& d, const std::vector<int>& beta) {
    Weight lam(d.rank, 0);
    for (int i = 0; i < d.rank; ++i)
        for (int j = 0; j < d.rank; ++j) lam[j] += beta[i] * d.cartan[i][j];
    return lam;
}

const std::vector<std::vector<int>>& positive_roots(const CartanData& d) {
    static std::mutex mu;
    static std::map<std::string, std::vector<std::vector<int>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d.name());
    if (it != cache.end()) return it->second;
    // Orbit of the simple roots under reflections, in root coordinates.
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> frontier;
    for (int i = 0; i < d.rank; ++i) {
        std::vector<int> b(d.rank, 0);
        b[i] = 1;
        seen.insert(b);
        frontier.push_back(b);
    }
    while (!frontier.empty()) {
        auto b = frontier.back();
        frontier.pop_back();
        for (int i = 0; i < d.rank; ++i) {
            int p = 0;
            for (int j = 0; j < d.rank; ++j) p += d.cartan[i][j] * b[j];
            if (p == 0) continue;
            auto nb = b;
            nb[i] -= p;
            if (std::all_of(nb.begin(), nb.end(), [](int x) { return x >= 0; }) && seen.insert(nb).second) frontier.push_back(nb);
        }
    }
    std::vector<std::vector<int>> roots(seen.begin(), seen.end());
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
        int ha = 0, hb = 0;
        for (int x : a) ha += x;
        for (int x : b) hb += x;
        return ha != hb ? ha < hb : a < b;
    });
    return cache.emplace(d.name(), std::move(roots)).first->second;
}

int word_length(const CartanData& d, const Word& w) {
    // l(w) = #{beta > 0 : w(beta) < 0}; reflections act on root coordinates by
    // s_i(beta) = beta - (C beta)_i alpha_i.
    int count = 0;
    for (const auto& root : positive_roots(d)) {
        auto b = root;
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            int i = *it - 1;
            int p = 0;
            for (int j = 0; j < d.rank; ++j) p += d.cartan[i][j] * b[j];
            b[i] -= p;
        }
        if (std::any_of(b.begin(), b.end(), [](int x) { return x < 0; })) ++count;
    }
    return count;
}

LongestElement longest_element(const CartanData& d) {
    LongestElement out;
    const int target = static_cast<int>(positive_roots(d).size());
    int len = 0;
    while (len < target) {
        bool grew = false;
        for (int i = 1; i <= d.rank && !grew; ++i) {
            Word cand = out.word;
            cand.push_back(i);
            if (word_length(d, cand) == len + 1) {
                out.word = cand;
                ++len;
                grew = true;
            }
        }
        if (!grew) throw std::logic_error("longest element search stalled");
    }
    out.nu.assign(d.rank, 0);
    for (int i = 1; i <= d.rank; ++i) {
        Weight img = apply_word(d, out.word, fundamental(d, i));
        for (int j = 1; j <= d.rank; ++j)
            if (img == -fundamental(d, j)) out.nu[i - 1] = j;
        if (out.nu[i - 1] == 0) throw std::logic_error("w0(varpi_i) is not minus a fundamental weight");
    }
    return out;
}

Word minimal_word_to(const CartanData& d, int i, const Weight& lam) {
    // Walk lam up to the dominant chamber; the letters used, read in order,
    // give a reduced word carrying varpi_i back to lam.
    Word w;
    Weight cur = lam;
    while (true) {
        int j = 0;
        for (int k = 1; k <= d.rank; ++k)
            if (cur[k - 1] < 0) {
                j = k;
                break;
            }
        if (j == 0) break;
        reflect_inplace(d, j, cur);
        w.push_back(j);
        if (w.size() > 4096) throw std::logic_error("minimal_word_to: runaway");
    }
    if (cur != fundamental(d, i)) throw std::invalid_argument("weight " + format_weight(lam) + " is not in the orbit of varpi_" + std::to_string(i));
    return w;
}

std::string format_weight(const Weight& lam) {
    std::string s = "(";
    for (size_t k = 0; k < lam.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(lam[k]);
    }
    return s + ")";
}

}  // namespace bandlab
