// Sparse multivariate polynomials over Q with exact division.
//
// A variable is an integer pair (a,b); theta^{(s)}_i is (s,i) and the entry
// a_ij of a generic matrix is (i,j). Terms are kept in graded lexicographic
// order, variables compared as pairs.
#pragma once

#include "bandlab/rational.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace bandlab {

using Var = std::pair<int, int>;

struct Monomial {
    std::vector<std::pair<Var, int>> e;  // sorted by Var, exponents > 0

    int degree() const;
    bool divides(const Monomial& o) const;
    Monomial operator*(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const;  // requires divides
    bool operator==(const Monomial&) const = default;
};

// grlex: higher total degree first, then the smaller variable with the larger exponent.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class SparsePoly {
public:
    SparsePoly() = default;
    SparsePoly(const Q& c);  // NOLINT constant
    SparsePoly(int c) : SparsePoly(Q(c)) {}  // NOLINT
    static SparsePoly var(Var v);

    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }
    const std::map<Monomial, Q, GrlexGreater>& terms() const { return t_; }

    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator-(const SparsePoly& o) const;
    SparsePoly operator-() const;
    SparsePoly operator*(const SparsePoly& o) const;
    // Exact division; throws std::domain_error if o does not divide *this.
    SparsePoly operator/(const SparsePoly& o) const;
    bool operator==(const SparsePoly& o) const { return t_ == o.t_; }

    // Rename every variable through f.
    SparsePoly map_vars(const std::function<Var(Var)>& f) const;
    Q eval(const std::function<Q(Var)>& value) const;

    // Variable names come from name(v), e.g. "t1^(0)".
    std::string to_string(const std::function<std::string(Var)>& name) const;

private:
    void add_term(const Monomial& m, const Q& c);
    std::map<Monomial, Q, GrlexGreater> t_;
};

// Laplace expansion; fine for the small generic matrices used here.
SparsePoly poly_det(const std::vector<std::vector<SparsePoly>>& m);

}  // namespace bandlab
