#include "bandlab/poly.hpp"

#include <stdexcept>

namespace bandlab {

int Monomial::degree() const {
    int d = 0;
    for (const auto& [v, k] : e) d += k;
    return d;
}

bool Monomial::divides(const Monomial& o) const {
    size_t j = 0;
    for (const auto& [v, k] : e) {
        while (j < o.e.size() && o.e[j].first < v) ++j;
        if (j == o.e.size() || o.e[j].first != v || o.e[j].second < k) return false;
    }
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    size_t a = 0, b = 0;
    while (a < e.size() || b < o.e.size()) {
        if (b == o.e.size() || (a < e.size() && e[a].first < o.e[b].first)) r.e.push_back(e[a++]);
        else if (a == e.size() || o.e[b].first < e[a].first) r.e.push_back(o.e[b++]);
        else {
            r.e.push_back({e[a].first, e[a].second + o.e[b].second});
            ++a;
            ++b;
        }
    }
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r;
    size_t j = 0;
    for (const auto& [v, k] : e) {
        int kk = k;
        if (j < o.e.size() && o.e[j].first == v) kk -= o.e[j++].second;
        if (kk < 0) throw std::domain_error("monomial division");
        if (kk > 0) r.e.push_back({v, kk});
    }
    if (j != o.e.size()) throw std::domain_error("monomial division");
    return r;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    size_t i = 0;
    for (; i < a.e.size() && i < b.e.size(); ++i) {
        if (a.e[i].first != b.e[i].first) return a.e[i].first < b.e[i].first;
        if (a.e[i].second != b.e[i].second) return a.e[i].second > b.e[i].second;
    }
    return i < a.e.size() && i == b.e.size();
}

SparsePoly::SparsePoly(const Q& c) {
    if (c != 0) t_[Monomial{}] = c;
}

SparsePoly SparsePoly::var(Var v) {
    SparsePoly p;
    p.t_[Monomial{{{v, 1}}}] = 1;
    return p;
}

void SparsePoly::add_term(const Monomial& m, const Q& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.try_emplace(m, c);
    if (fresh) return;
    it->second += c;
    if (it->second == 0) t_.erase(it);
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    SparsePoly r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(m, c);
    return r;
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
    SparsePoly r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(m, -c);
    return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    SparsePoly r;
    for (const auto& [m1, c1] : t_)
        for (const auto& [m2, c2] : o.t_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

SparsePoly SparsePoly::operator/(const SparsePoly& o) const {
    if (o.is_zero()) throw std::domain_error("division by the zero polynomial");
    const auto& [lm, lc] = *o.t_.begin();
    SparsePoly rem = *this, quo;
    while (!rem.is_zero()) {
        const auto& [m, c] = *rem.t_.begin();
        if (!lm.divides(m)) throw std::domain_error("inexact polynomial division");
        SparsePoly t;
        t.t_[m / lm] = c / lc;
        quo = quo + t;
        rem = rem - t * o;
    }
    return quo;
}

SparsePoly SparsePoly::map_vars(const std::function<Var(Var)>& f) const {
    SparsePoly r;
    for (const auto& [m, c] : t_) {
        Monomial nm;
        for (const auto& [v, k] : m.e) nm = nm * Monomial{{{f(v), k}}};
        r.add_term(nm, c);
    }
    return r;
}

Q SparsePoly::eval(const std::function<Q(Var)>& value) const {
    std::map<Var, Q> cache;
    Q sum = 0;
    for (const auto& [m, c] : t_) {
        Q term = c;
        for (const auto& [v, k] : m.e) {
            auto it = cache.find(v);
            if (it == cache.end()) it = cache.emplace(v, value(v)).first;
            for (int j = 0; j < k; ++j) term *= it->second;
        }
        sum += term;
    }
    return sum;
}

std::string SparsePoly::to_string(const std::function<std::string(Var)>& name) const {
    if (t_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : t_) {
        Q a = abs(c);
        std::string sign = c < 0 ? "-" : "+";
        if (first) out += c < 0 ? "-" : "";
        else out += " " + sign + " ";
        first = false;
        std::string mono;
        for (const auto& [v, k] : m.e) {
            if (!mono.empty()) mono += "*";
            mono += name(v);
            if (k > 1) mono += "^" + std::to_string(k);
        }
        if (mono.empty()) out += bandlab::to_string(a);
        else if (a == 1) out += mono;
        else out += bandlab::to_string(a) + "*" + mono;
    }
    return out;
}

SparsePoly poly_det(const std::vector<std::vector<SparsePoly>>& m) {
    const size_t n = m.size();
    if (n == 0) return SparsePoly(1);
    if (n == 1) return m[0][0];
    SparsePoly r;
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<SparsePoly>> sub;
        for (size_t a = 1; a < n; ++a) {
            std::vector<SparsePoly> row;
            for (size_t b = 0; b < n; ++b)
                if (b != j) row.push_back(m[a][b]);
            sub.push_back(std::move(row));
        }
        SparsePoly t = m[0][j] * poly_det(sub);
        r = j % 2 ? r - t : r + t;
    }
    return r;
}

}  // namespace bandlab
