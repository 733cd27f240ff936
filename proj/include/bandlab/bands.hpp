// Finite (SL(n), c_st)-band windows over Q and the functions evaluated on them.
//
// A window with bounds M <= N stores band rows M .. N+n-1. B(s) is the n x n
// block on rows s .. s+n-1 and B(s) B(s+1)^{-1} is the step matrix with first
// row (a_1, ..., a_{n-1}, (-1)^{n-1}) and ones on the subdiagonal.
#pragma once

#include "bandlab/coxeter.hpp"
#include "bandlab/quiver.hpp"
#include "bandlab/rational.hpp"

#include <vector>

namespace bandlab {

struct UnipotentStep {
    std::vector<Q> a;  // a_1 .. a_{n-1}
};

Matrix step_matrix(int n, const UnipotentStep& st);

class BandWindow {
public:
    BandWindow(int n, int M, int N, Matrix rows);

    int n() const { return n_; }
    int M() const { return M_; }
    int N() const { return N_; }
    const Matrix& rows() const { return rows_; }

    // Entry in band row `row` (absolute index) and 1-based column.
    const Q& at(int row, int col) const;
    Matrix block(int s) const;
    // Determinant on the given absolute rows and 1-based columns.
    Q minor(const std::vector<int>& band_rows, const std::vector<int>& cols) const;

    // Recover the step parameters between B(s) and B(s+1).
    UnipotentStep step(int s) const;

private:
    int n_, M_, N_;
    Matrix rows_;
};

BandWindow make_band(const Matrix& g0, int M, int N, const std::vector<UnipotentStep>& steps);
BandWindow sample_band(int n, int M, int N, uint64_t seed);
Matrix random_sl(int n, RationalSampler& rng);
UnipotentStep random_step(int n, RationalSampler& rng);

BandWindow extend_forward(const BandWindow& b, const UnipotentStep& st);
BandWindow extend_backward(const BandWindow& b, const UnipotentStep& st);
BandWindow slice(const BandWindow& b, int M, int N);

// Every block has determinant 1 and every quotient has the step shape.
bool is_band(const BandWindow& b);

// The lift w-bar of a word in S_n (letters 1..n-1) as a signed permutation matrix.
Matrix lift(int n, const Word& w);

// Generalized minor from its definition: leading i-minor of u^-1 g v (bars on words).
Q generalized_minor(const Matrix& g, const Word& u, const Word& v, int i);

// Same value computed from the weights u(varpi_i), v(varpi_i) via one signed minor.
Q minor_by_weights(const Matrix& g, int i, const Weight& uw, const Weight& vw);

// Delta^{(s)}_{c^k varpi_i, c~^l varpi_i}(B); ct is tilde_coxeter(c).
Q eval_minor_label(const BandWindow& b, const CoxeterElement& c, const CoxeterElement& ct, const MinorLabel& m);

// Flag minor Delta_{P,[1,|P|]} of the band.
Q flag_minor(const BandWindow& b, const std::vector<int>& band_rows);

// theta^{(s)}_{i,k} = Delta_{varpi_i,varpi_i}(B(s) B(s+k)^{-1}); k = 0 gives 1.
Q theta(const BandWindow& b, int s, int i, int k);
// psi^{(s)}_{i,k}: maximal minor on rows [s, s+i-1] and [s+i+k, s+n+k-1].
Q psi(const BandWindow& b, int s, int i, int k);

BandWindow act_group(const BandWindow& b, const Matrix& g);
// Left action of the n-periodic diagonal: band row r is scaled by t[r mod n].
BandWindow act_torus(const BandWindow& b, const std::vector<Q>& t);

// Character of a weight on diag(d_1..d_n): prod_j (d_1...d_j)^{lambda_j}.
Q character(const Weight& lam, const std::vector<Q>& d);

CoxeterElement sl_standard(int n);

}  // namespace bandlab
