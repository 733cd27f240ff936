// Coxeter elements and the data derived from them.
#pragma once

#include "bandlab/rootdata.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace bandlab {

struct CoxeterElement {
    CartanData data;
    Word word;                                // (i_1, ..., i_n)
    std::vector<std::pair<int, int>> q_arrows;  // orientation Q, earlier letter -> later letter
    std::vector<int> xi;                      // xi[i-1]
    std::vector<int> m;                       // m[i-1]
    std::vector<int> nu;                      // nu[i-1]
    Word w0;
    Word tilde_word;
    Word adapted;

    int n() const { return data.rank; }
    int xi_of(int i) const { return xi[i - 1]; }
    int m_of(int i) const { return m[i - 1]; }
    int position(int i) const;  // 0-based position of letter i in word
    // a_ij = delta(xi_j > xi_i)
    int a(int i, int j) const { return xi_of(j) > xi_of(i) ? 1 : 0; }
};

CoxeterElement make_coxeter(const CartanData& d, const Word& word);
CoxeterElement tilde_coxeter(const CoxeterElement& c);

// Standard Coxeter element (1,2,...,n).
CoxeterElement standard_coxeter(const CartanData& d);

// c^k(lam) for any integer k.
Weight coxeter_power(const CoxeterElement& c, const Weight& lam, int k);
Weight coxeter_power_weight(const CoxeterElement& c, int i, int k);

Word w_ik(const CoxeterElement& c, int i, int k);

// Position j (1-based) of the adapted word -> dim x(j) in root coordinates.
std::map<int, std::vector<int>> ar_dimension_vectors(const CoxeterElement& c);

// All permutations of [1,n], i.e. every Coxeter word.
std::vector<Word> all_coxeter_words(const CartanData& d);

Word parse_word(const std::string& s);
std::string format_word(const Word& w);

}  // namespace bandlab
