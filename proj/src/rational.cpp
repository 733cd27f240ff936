#include "bandlab/rational.hpp"

#include <stdexcept>
#include <utility>

namespace bandlab {

std::string to_string(const Q& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Q parse_rational(const std::string& s) {
    Q q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (c_ != o.r_) throw std::invalid_argument("matrix shape mismatch");
    Matrix out(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Q& x = (*this)(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.c_; ++j) out(i, j) += x * o(k, j);
        }
    return out;
}

bool Matrix::operator==(const Matrix& o) const {
    return r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
}

Matrix Matrix::select(const std::vector<int>& rs, const std::vector<int>& cs) const {
    Matrix out(static_cast<int>(rs.size()), static_cast<int>(cs.size()));
    for (size_t i = 0; i < rs.size(); ++i)
        for (size_t j = 0; j < cs.size(); ++j) out(static_cast<int>(i), static_cast<int>(j)) = (*this)(rs[i], cs[j]);
    return out;
}

Q det(Matrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
    const int n = m.rows();
    Q d = 1;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && m(piv, col) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
            d = -d;
        }
        d *= m(col, col);
        for (int i = col + 1; i < n; ++i) {
            if (m(i, col) == 0) continue;
            Q f = m(i, col) / m(col, col);
            for (int j = col; j < n; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return d;
}

Matrix inverse(const Matrix& a) {
    const int n = a.rows();
    if (n != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
    Matrix m = a, inv = Matrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && m(piv, col) == 0) ++piv;
        if (piv == n) throw std::domain_error("singular matrix");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(m(piv, j), m(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        Q p = m(col, col);
        for (int j = 0; j < n; ++j) {
            m(col, j) /= p;
            inv(col, j) /= p;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || m(i, col) == 0) continue;
            Q f = m(i, col);
            for (int j = 0; j < n; ++j) {
                m(i, j) -= f * m(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

int rank(Matrix m) {
    int r = 0;
    for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
        int piv = r;
        while (piv < m.rows() && m(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
        for (int i = r + 1; i < m.rows(); ++i) {
            if (m(i, col) == 0) continue;
            Q f = m(i, col) / m(r, col);
            for (int j = col; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

Q minor(const Matrix& m, const std::vector<int>& P, const std::vector<int>& Qc) {
    if (P.size() != Qc.size()) throw std::invalid_argument("minor: |P| != |Q|");
    if (P.empty()) return 1;
    std::vector<int> rs, cs;
    for (int p : P) rs.push_back(p - 1);
    for (int q : Qc) cs.push_back(q - 1);
    return det(m.select(rs, cs));
}

Q RationalSampler::next() {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 3);
    Q q(num(gen_), den(gen_));
    q.canonicalize();
    return q;
}

Q RationalSampler::next_nonzero() {
    Q q;
    do q = next();
    while (q == 0);
    return q;
}

int RationalSampler::uniform(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(gen_);
}

uint64_t stream_seed(uint64_t seed, uint64_t index) {
    // splitmix64 finalizer over the pair
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace bandlab
