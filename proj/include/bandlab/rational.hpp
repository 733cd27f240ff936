// Exact rationals and small dense matrices over them.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace bandlab {

using Q = mpq_class;

std::string to_string(const Q& q);
Q parse_rational(const std::string& s);

class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, Q(0)) {}

    static Matrix identity(int n);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Q& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const Q& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    Matrix operator*(const Matrix& o) const;
    bool operator==(const Matrix& o) const;

    // Submatrix on the given 0-based row and column lists, in the order given.
    Matrix select(const std::vector<int>& rs, const std::vector<int>& cs) const;

private:
    int r_ = 0, c_ = 0;
    std::vector<Q> a_;
};

Q det(Matrix m);
Matrix inverse(const Matrix& m);
int rank(Matrix m);

// Determinant of the submatrix with 1-based rows P and columns Q (empty gives 1).
Q minor(const Matrix& m, const std::vector<int>& P, const std::vector<int>& Qc);

// Seeded source of small rationals: |num| <= 9, den in {1,2,3}.
class RationalSampler {
public:
    explicit RationalSampler(uint64_t seed) : gen_(seed) {}
    Q next();
    Q next_nonzero();
    int uniform(int lo, int hi);
    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

// Independent stream for sample `index` under a master seed.
uint64_t stream_seed(uint64_t seed, uint64_t index);

}  // namespace bandlab
