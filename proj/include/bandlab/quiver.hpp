// Iced quivers, seeds and mutation.
//
// A quiver is a skew-symmetric integer matrix b over its vertices: b(x,y) > 0
// means b(x,y) arrows x -> y. Loops and 2-cycles cannot be represented, and
// arrows between two frozen vertices are dropped after every mutation.
#pragma once

#include "bandlab/rational.hpp"
#include "bandlab/rootdata.hpp"

#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace bandlab {

enum class Color { black, red, green };
const char* color_name(Color c);

// Delta^{(s)}_{c^k varpi_i, c~^l varpi_i}
struct MinorLabel {
    int i = 0, s = 0, k = 0, l = 0;
    bool operator==(const MinorLabel&) const = default;
};

// Gluing normal form: Delta^{(s)}_{c^k varpi_i, .} = Delta^{(s+k)}_{varpi_i, .}
struct MinorNF {
    int i = 0, t = 0, l = 0;
    auto operator<=>(const MinorNF&) const = default;
};
inline MinorNF normal_form(const MinorLabel& m) { return {m.i, m.s + m.k, m.l}; }

// theta^{(s)}_{i,k}
struct ThetaLabel {
    int i = 0, k = 0, s = 0;
    bool operator==(const ThetaLabel&) const = default;
};

struct BiDegree {
    Weight ldeg, rdeg;
    bool operator==(const BiDegree&) const = default;
};

struct VertexLabel {
    std::optional<MinorLabel> minor;
    std::optional<ThetaLabel> theta;
    std::optional<Q> value;
    std::optional<BiDegree> degree;
};

struct Vertex {
    int i = 0;
    int r = 0;
    Color color = Color::black;
    bool frozen = false;
};

class Quiver {
public:
    int add_vertex(const Vertex& v);
    int size() const { return static_cast<int>(verts_.size()); }
    const Vertex& vertex(int id) const { return verts_.at(id); }
    Vertex& vertex(int id) { return verts_.at(id); }
    const std::vector<Vertex>& vertices() const { return verts_; }
    int find(int i, int r) const;  // -1 when absent

    int b(int x, int y) const { return b_[x][y]; }
    int arrows(int x, int y) const { return b_[x][y] > 0 ? b_[x][y] : 0; }
    void add_arrows(int x, int y, int mult = 1);
    void drop_frozen_frozen();

    // (src, dst, multiplicity), sorted
    std::vector<std::tuple<int, int, int>> arrow_list() const;
    std::vector<int> mutable_vertices() const;

    void mutate(int k);

private:
    std::vector<Vertex> verts_;
    std::vector<std::vector<int>> b_;
};

struct Seed {
    Quiver quiver;
    std::vector<VertexLabel> labels;
    std::vector<int> trace;
};

// (prod_in x + prod_out x) / x_k for any ring-like T.
template <class T>
T exchange(const Quiver& q, int k, const std::vector<T>& x, const T& one) {
    T in = one, out = one;
    for (int y = 0; y < q.size(); ++y) {
        const int bb = q.b(y, k);
        for (int t = 0; t < bb; ++t) in = in * x[y];
        for (int t = 0; t < -bb; ++t) out = out * x[y];
    }
    return (in + out) / x[k];
}

// Sum of degrees over in- and out-neighbours of k (with multiplicity).
std::pair<BiDegree, BiDegree> neighbour_degrees(const Seed& s, int k);
bool degree_balanced(const Seed& s, int k);

// Mutation: quiver, numeric value and degree; minor and theta labels are
// cleared (a schedule may restore them from a closed form).
Seed mutate(const Seed& s, int k);
Seed mutate_sequence(Seed s, const std::vector<int>& schedule);

struct IsoReport {
    bool ok = true;
    std::vector<std::string> diffs;
};

// map[a-vertex] = b-vertex (or -1 to skip). Arrows among mapped vertices must
// correspond; labels are compared with label_eq when supplied.
IsoReport seed_isomorphic(const Seed& a, const Seed& b, const std::vector<int>& map,
                          const std::function<bool(const VertexLabel&, const VertexLabel&)>& label_eq = {});

// Rank of the extended exchange matrix equals the number of mutable vertices.
bool max_rank_check(const Quiver& q);

std::string vertex_name(const Vertex& v);

}  // namespace bandlab
