// Simply-laced Cartan data, weights in fundamental-weight coordinates, Weyl words.
//
// Nodes are 1-based throughout. A weight is stored by its coefficients on the
// fundamental weights; alpha_i is row i of the Cartan matrix. Words act with the
// leftmost letter outermost: (i1,...,ik) sends lam to s_i1(...s_ik(lam)).
#pragma once

#include "bandlab/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace bandlab {

using Weight = std::vector<int>;
using Word = std::vector<int>;

struct CartanData {
    char kind = 'A';
    int rank = 0;
    std::vector<std::vector<int>> cartan;
    std::vector<std::pair<int, int>> edges;

    int c(int i, int j) const { return cartan[i - 1][j - 1]; }
    bool adjacent(int i, int j) const { return i != j && c(i, j) == -1; }
    std::vector<int> neighbours(int i) const;
    std::string name() const { return std::string(1, kind) + std::to_string(rank); }
};

// D_n forks at n-2, E uses Bourbaki numbering.
CartanData make_cartan(char kind, int rank);
CartanData parse_type(const std::string& s);

// Every A/D/E type of rank <= max_rank (D from 4, E from 6).
std::vector<CartanData> all_types(int max_rank);

Weight fundamental(const CartanData& d, int i);
Weight simple_root(const CartanData& d, int i);
Weight zero_weight(const CartanData& d);

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator-(const Weight& a);
Weight scale(const Weight& a, int k);

void reflect_inplace(const CartanData& d, int i, Weight& lam);
Weight apply_word(const CartanData& d, const Word& w, Weight lam);
Word inverse_word(const Word& w);

// (lam, alpha_j) and its positive part.
int pairing(const Weight& lam, int j);
int pairing_pos(const Weight& lam, int j);

// Root coordinates C^{-1} lam.
std::vector<Q> to_root_coords(const CartanData& d, const Weight& lam);
Weight from_root_coords(const CartanData& d, const std::vector<int>& beta);

// Positive roots as alpha-coefficient vectors.
const std::vector<std::vector<int>>& positive_roots(const CartanData& d);

int word_length(const CartanData& d, const Word& w);

struct LongestElement {
    Word word;
    std::vector<int> nu;  // nu[i-1] with w0(varpi_i) = -varpi_nu(i)
};
LongestElement longest_element(const CartanData& d);

// Reduced word w of minimal length with w(varpi_i) = lam; throws if lam is not
// in the orbit of varpi_i.
Word minimal_word_to(const CartanData& d, int i, const Weight& lam);

std::string format_weight(const Weight& lam);

}  // namespace bandlab
