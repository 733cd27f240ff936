#include "bandlab/quiver.hpp"

#include <algorithm>
#include <stdexcept>

namespace bandlab {

const char* color_name(Color c) {
    switch (c) {
    case Color::red: return "red";
    case Color::green: return "green";
    default: return "black";
    }
}

std::string vertex_name(const Vertex& v) { return "(" + std::to_string(v.i) + "," + std::to_string(v.r) + ")"; }

int Quiver::add_vertex(const Vertex& v) {
    if (find(v.i, v.r) >= 0) throw std::logic_error("duplicate vertex " + vertex_name(v));
    verts_.push_back(v);
    for (auto& row : b_) row.push_back(0);
    b_.emplace_back(verts_.size(), 0);
    return size() - 1;
}

int Quiver::find(int i, int r) const {
    for (int id = 0; id < size(); ++id)
        if (verts_[id].i == i && verts_[id].r == r) return id;
    return -1;
}

void Quiver::add_arrows(int x, int y, int mult) {
    if (x == y) throw std::logic_error("loop at " + vertex_name(verts_[x]));
    b_[x][y] += mult;
    b_[y][x] -= mult;
}

void Quiver::drop_frozen_frozen() {
    for (int x = 0; x < size(); ++x)
        for (int y = 0; y < size(); ++y)
            if (verts_[x].frozen && verts_[y].frozen) b_[x][y] = 0;
}

std::vector<std::tuple<int, int, int>> Quiver::arrow_list() const {
    std::vector<std::tuple<int, int, int>> out;
    for (int x = 0; x < size(); ++x)
        for (int y = 0; y < size(); ++y)
            if (b_[x][y] > 0) out.emplace_back(x, y, b_[x][y]);
    return out;
}

std::vector<int> Quiver::mutable_vertices() const {
    std::vector<int> out;
    for (int x = 0; x < size(); ++x)
        if (!verts_[x].frozen) out.push_back(x);
    return out;
}

void Quiver::mutate(int k) {
    if (k < 0 || k >= size()) throw std::out_of_range("mutation vertex out of range");
    if (verts_[k].frozen) throw std::invalid_argument("cannot mutate frozen vertex " + vertex_name(verts_[k]));
    const int n = size();
    auto nb = b_;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == k || y == k) nb[x][y] = -b_[x][y];
            else nb[x][y] = b_[x][y] + (std::abs(b_[x][k]) * b_[k][y] + b_[x][k] * std::abs(b_[k][y])) / 2;
        }
    b_ = std::move(nb);
    drop_frozen_frozen();
}

std::pair<BiDegree, BiDegree> neighbour_degrees(const Seed& s, int k) {
    const auto& q = s.quiver;
    BiDegree in, out;
    const size_t r = s.labels[k].degree->ldeg.size();
    in.ldeg = in.rdeg = out.ldeg = out.rdeg = Weight(r, 0);
    for (int y = 0; y < q.size(); ++y) {
        int bb = q.b(y, k);
        if (bb == 0) continue;
        if (!s.labels[y].degree) throw std::logic_error("neighbour without degree");
        const auto& d = *s.labels[y].degree;
        BiDegree& tgt = bb > 0 ? in : out;
        tgt.ldeg = tgt.ldeg + scale(d.ldeg, std::abs(bb));
        tgt.rdeg = tgt.rdeg + scale(d.rdeg, std::abs(bb));
    }
    return {in, out};
}

bool degree_balanced(const Seed& s, int k) {
    auto [in, out] = neighbour_degrees(s, k);
    return in == out;
}

Seed mutate(const Seed& s, int k) {
    Seed t = s;
    const auto& lab = s.labels.at(k);
    if (s.quiver.vertex(k).frozen) throw std::invalid_argument("cannot mutate frozen vertex " + vertex_name(s.quiver.vertex(k)));
    if (lab.value) {
        if (*lab.value == 0) throw std::domain_error("zero cluster variable at " + vertex_name(s.quiver.vertex(k)));
        std::vector<Q> x(s.quiver.size(), Q(1));
        for (int y = 0; y < s.quiver.size(); ++y)
            if (s.labels[y].value) x[y] = *s.labels[y].value;
            else if (s.quiver.b(y, k) != 0) throw std::logic_error("numeric neighbour without value");
        t.labels[k].value = exchange<Q>(s.quiver, k, x, Q(1));
    }
    if (lab.degree) {
        auto [in, out] = neighbour_degrees(s, k);
        if (!(in == out)) throw std::logic_error("degree imbalance at " + vertex_name(s.quiver.vertex(k)));
        t.labels[k].degree = BiDegree{in.ldeg - lab.degree->ldeg, in.rdeg - lab.degree->rdeg};
    }
    t.labels[k].minor.reset();
    t.labels[k].theta.reset();
    t.quiver.mutate(k);
    t.trace.push_back(k);
    return t;
}

Seed mutate_sequence(Seed s, const std::vector<int>& schedule) {
    for (int k : schedule) s = mutate(s, k);
    return s;
}

IsoReport seed_isomorphic(const Seed& a, const Seed& b, const std::vector<int>& map,
                          const std::function<bool(const VertexLabel&, const VertexLabel&)>& label_eq) {
    IsoReport rep;
    const auto& qa = a.quiver;
    const auto& qb = b.quiver;
    std::vector<int> seen(qb.size(), 0);
    for (int x = 0; x < qa.size(); ++x) {
        if (map[x] < 0) continue;
        if (seen[map[x]]++) {
            rep.ok = false;
            rep.diffs.push_back("map not injective at " + vertex_name(qb.vertex(map[x])));
        }
    }
    for (int x = 0; x < qa.size(); ++x) {
        if (map[x] < 0) continue;
        if (qa.vertex(x).frozen != qb.vertex(map[x]).frozen) {
            rep.ok = false;
            rep.diffs.push_back("frozen flag differs at " + vertex_name(qa.vertex(x)));
        }
        for (int y = 0; y < qa.size(); ++y) {
            if (map[y] < 0) continue;
            if (qa.b(x, y) != qb.b(map[x], map[y]) && qa.b(x, y) > 0) {
                rep.ok = false;
                rep.diffs.push_back("arrow " + vertex_name(qa.vertex(x)) + "->" + vertex_name(qa.vertex(y)) + " x" + std::to_string(qa.b(x, y)) +
                                    " maps to x" + std::to_string(qb.b(map[x], map[y])));
            } else if (qa.b(x, y) == 0 && qb.b(map[x], map[y]) > 0) {
                rep.ok = false;
                rep.diffs.push_back("extra arrow " + vertex_name(qb.vertex(map[x])) + "->" + vertex_name(qb.vertex(map[y])));
            }
        }
        if (label_eq && !label_eq(a.labels[x], b.labels[map[x]])) {
            rep.ok = false;
            rep.diffs.push_back("label differs at " + vertex_name(qa.vertex(x)));
        }
    }
    return rep;
}

bool max_rank_check(const Quiver& q) {
    auto mut = q.mutable_vertices();
    Matrix m(q.size(), static_cast<int>(mut.size()));
    for (int x = 0; x < q.size(); ++x)
        for (size_t j = 0; j < mut.size(); ++j) m(x, static_cast<int>(j)) = q.b(x, mut[j]);
    return rank(m) == static_cast<int>(mut.size());
}

}  // namespace bandlab
