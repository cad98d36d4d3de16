#include "tropmono/facets.hpp"

#include <algorithm>
#include <set>

namespace tropmono {

FacetKind ApexSet::kind(int k) const {
    if (k < static_cast<int>(principal.size())) return FacetKind::Principal;
    if (k < static_cast<int>(principal.size() + boundary.size())) return FacetKind::Boundary;
    return FacetKind::Far;
}

Point ApexSet::facet_point(int k) const {
    switch (kind(k)) {
        case FacetKind::Principal: return principal[k];
        case FacetKind::Boundary: {
            const int dir = boundary[k - principal.size()];
            Point q = all_pos_inf(dim);
            q[dir] = ExtValue::neg_inf();
            return q;
        }
        default: throw Error("FarApex", "the far apex has no coordinates");
    }
}

std::string ApexSet::facet_label(int k) const {
    switch (kind(k)) {
        case FacetKind::Principal: return "a" + std::to_string(k + 1);
        case FacetKind::Boundary:
            return "B" + std::to_string(boundary[k - principal.size()] + 1);
        default: return "far";
    }
}

std::vector<Point> principal_apices(const GeneratorSet& input) {
    const GeneratorSet V = minimal_generators(input);
    const int d = V.dim;
    const int n = static_cast<int>(V.points.size());
    if (n == 0) return {};

    // Candidate coordinates per axis: finite generator values plus +inf.
    std::vector<std::vector<ExtValue>> axis(d);
    for (int i = 0; i < d; ++i) {
        std::set<Rational> vals;
        for (const Point& v : V.points)
            if (v[i].is_finite()) vals.insert(v[i].value());
        for (const Rational& q : vals) axis[i].push_back(ExtValue(q));
        axis[i].push_back(ExtValue::pos_inf());
    }

    std::vector<Point> found;
    Point a(d);
    std::vector<std::size_t> idx(d, 0);
    while (true) {
        for (int i = 0; i < d; ++i) a[i] = axis[i][idx[i]];

        bool ok = true;
        for (int j = 0; j < n && ok; ++j)
            if (strictly_less(V.points[j], a)) ok = false;
        for (int i = 0; i < d && ok; ++i) {
            if (a[i].is_pos_inf()) continue;
            bool witness = false;
            for (int j = 0; j < n && !witness; ++j) {
                const Point& v = V.points[j];
                if (!(v[i] == a[i])) continue;
                bool below = true;
                for (int k = 0; k < d && below; ++k)
                    if (k != i && !(v[k] < a[k])) below = false;
                witness = below;
            }
            ok = witness;
        }
        if (ok) found.push_back(a);

        int pos = d - 1;
        while (pos >= 0 && ++idx[pos] == axis[pos].size()) idx[pos--] = 0;
        if (pos < 0) break;
    }
    std::sort(found.begin(), found.end(), PointLess{});
    return found;
}

ApexSet apex_set(const GeneratorSet& input) {
    const GeneratorSet V = minimal_generators(input);
    ApexSet F;
    F.dim = V.dim;
    F.principal = principal_apices(V);
    for (int i = 0; i < V.dim; ++i) {
        bool hit = false;
        for (const Point& v : V.points)
            if (v[i].is_neg_inf()) hit = true;
        if (hit) F.boundary.push_back(i);
    }
    return F;
}

bool incident_point(const Point& x, const Point& q) {
    if (x.size() != q.size()) throw_dim_mismatch(x.size(), q.size());
    if (!leq(x, q)) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] == q[i]) return true;
    return false;
}

bool incident_ray(int ray, const Point& q) { return q[ray].is_pos_inf(); }

IncidenceGraph incidence_graph(const GeneratorSet& input) {
    const GeneratorSet V = minimal_generators(input);
    IncidenceGraph G;
    G.dim = V.dim;
    G.n_generators = static_cast<int>(V.points.size());
    G.apices = apex_set(V);
    G.edges.assign(G.left_size(), std::vector<char>(G.right_size(), 0));
    for (int r = 0; r < G.right_size(); ++r) {
        if (G.apices.kind(r) == FacetKind::Far) {
            for (int i = 0; i < G.dim; ++i) G.edges[G.n_generators + i][r] = 1;
            continue;
        }
        const Point q = G.apices.facet_point(r);
        for (int j = 0; j < G.n_generators; ++j)
            if (incident_point(V.points[j], q)) G.edges[j][r] = 1;
        for (int i = 0; i < G.dim; ++i)
            if (incident_ray(i, q)) G.edges[G.n_generators + i][r] = 1;
    }
    return G;
}

std::vector<int> IncidenceGraph::facet_members(int r) const {
    std::vector<int> out;
    for (int l = 0; l < left_size(); ++l)
        if (edge(l, r)) out.push_back(l);
    return out;
}

GeneratorSet complementary_polyhedron(const GeneratorSet& input) {
    const GeneratorSet V = minimal_generators(input);
    std::vector<Point> gens;
    for (const Point& a : principal_apices(V)) gens.push_back(negate(a));
    return make_generator_set(V.dim, std::move(gens));
}

bool check_vertex_char(const GeneratorSet& V, const Point& v) {
    bool member = false;
    for (const Point& w : V.points)
        if (w == v) member = true;
    if (!member) throw Error("NotAGenerator", "point is not among the given generators");
    const std::vector<Point> apices = principal_apices(V);
    for (int i = 0; i < V.dim; ++i) {
        if (v[i].is_neg_inf()) continue;
        bool witness = false;
        for (const Point& a : apices) {
            if (!(v[i] == a[i])) continue;
            bool below = true;
            for (int k = 0; k < V.dim && below; ++k)
                if (k != i && !(v[k] < a[k])) below = false;
            if (below) {
                witness = true;
                break;
            }
        }
        if (!witness) return false;
    }
    return true;
}

std::vector<int> linear_functional_minimizers(const GeneratorSet& V, const Point& c) {
    if (static_cast<int>(c.size()) != V.dim)
        throw_dim_mismatch(static_cast<std::size_t>(V.dim), c.size());
    const int n = static_cast<int>(V.points.size());
    // phi_c(p) = max_i (p_i - c_i).  A -inf entry of c (from a materialized
    // boundary apex) acts as a value below all finite data, so p_i - c_i is
    // a symbolic +M + p_i; represent terms as (scale, finite part).
    struct Term {
        int scale;  // -1: -inf, 0: finite, 1: above all finite values
        Rational rest;
    };
    auto term_less = [](const Term& a, const Term& b) {
        if (a.scale != b.scale) return a.scale < b.scale;
        return a.scale != 0 ? false : a.rest < b.rest;
    };
    auto phi = [&](const Point& p) {
        Term best{-1, Rational(0)};
        for (int i = 0; i < V.dim; ++i) {
            Term t{-1, Rational(0)};
            if (!p[i].is_neg_inf() && !c[i].is_pos_inf()) {
                if (c[i].is_neg_inf())
                    t = Term{1, p[i].value()};
                else
                    t = Term{0, p[i].value() - c[i].value()};
            }
            if (term_less(best, t)) best = t;
        }
        return best;
    };
    std::vector<Term> vals;
    for (const Point& v : V.points) vals.push_back(phi(v));
    std::vector<int> out;
    if (n > 0) {
        int arg = 0;
        for (int j = 1; j < n; ++j)
            if (term_less(vals[j], vals[arg])) arg = j;
        for (int j = 0; j < n; ++j)
            if (!term_less(vals[arg], vals[j])) out.push_back(j);
    }
    for (int i = 0; i < V.dim; ++i)
        if (c[i].is_pos_inf()) out.push_back(n + i);
    return out;
}

}  // namespace tropmono
