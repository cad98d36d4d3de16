#include "tropmono/covector.hpp"

#include <numeric>

namespace tropmono {

namespace {

// Value of z_a + v_b where z_a may be +inf.  Substituting the same large M
// for every +inf entry of z makes all comparisons well defined; we compare
// the pairs (#M terms, finite rest) lexicographically, with -inf below all.
struct SymSum {
    bool neg = false;  // -inf
    int m = 0;         // 0 or 1 occurrences of M
    Rational rest;
};

SymSum sym_sum(const ExtValue& z, const ExtValue& v) {
    SymSum s;
    if (z.is_neg_inf() || v.is_neg_inf()) {
        s.neg = true;
        return s;
    }
    if (z.is_pos_inf()) {
        s.m = 1;
        s.rest = v.value();
    } else {
        s.rest = z.value() + v.value();
    }
    return s;
}

bool sym_leq(const SymSum& a, const SymSum& b) {
    if (a.neg) return true;
    if (b.neg) return false;
    if (a.m != b.m) return a.m < b.m;
    return a.rest <= b.rest;
}

}  // namespace

bool in_point_sector(const Point& v, int i, const Point& z) {
    const int d = static_cast<int>(v.size());
    if (z.size() != v.size()) throw_dim_mismatch(v.size(), z.size());
    if (i == 0) return leq(v, z);
    const int c = i - 1;
    if (!(z[c] <= v[c])) return false;
    for (int k = 0; k < d; ++k) {
        // z_i + v_k <= z_k + v_i
        if (!sym_leq(sym_sum(z[c], v[k]), sym_sum(z[k], v[c]))) return false;
    }
    return true;
}

bool in_ray_sector(int ray, int i, const Point& z) {
    if (i == 0) return z[ray].is_pos_inf();
    if (i - 1 == ray) return true;
    return z[i - 1].is_neg_inf();
}

CovectorGraph covector(const GeneratorSet& V, const Point& p) {
    if (static_cast<int>(p.size()) != V.dim)
        throw_dim_mismatch(static_cast<std::size_t>(V.dim), p.size());
    if (V.dim > 30) throw Error("TooLarge", "covector graphs support dimension <= 30");
    CovectorGraph G;
    G.dim = V.dim;
    G.n_generators = static_cast<int>(V.points.size());
    G.adj.assign(G.left_size(), 0);
    for (int j = 0; j < G.n_generators; ++j)
        for (int i = 0; i <= V.dim; ++i)
            if (in_point_sector(V.points[j], i, p)) G.adj[j] |= (1u << i);
    for (int r = 0; r < V.dim; ++r)
        for (int i = 0; i <= V.dim; ++i)
            if (in_ray_sector(r, i, p)) G.adj[G.n_generators + r] |= (1u << i);
    return G;
}

std::vector<int> CovectorGraph::right_neighbourhood(int right) const {
    std::vector<int> out;
    for (int l = 0; l < left_size(); ++l)
        if (edge(l, right)) out.push_back(l);
    return out;
}

bool CovectorGraph::connected() const {
    const int L = left_size();
    const int total = L + dim + 1;
    if (total == 0) return true;
    std::vector<int> parent(total);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (int l = 0; l < L; ++l)
        for (int i = 0; i <= dim; ++i)
            if (edge(l, i)) unite(l, L + i);
    const int root = find(0);
    for (int x = 1; x < total; ++x)
        if (find(x) != root) return false;
    return true;
}

bool is_pseudovertex(const GeneratorSet& V, const Point& p) {
    return covector(V, p).connected();
}

}  // namespace tropmono
