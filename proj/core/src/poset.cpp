#include "tropmono/poset.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tropmono {

namespace {

bool point_leq(const PosetElement& a, const PosetElement& b) {
    return leq(*a.point, *b.point);
}

std::string set_name(const std::vector<int>& ids, const std::function<std::string(int)>& label) {
    if (ids.empty()) return "{}";
    std::string s;
    for (int i : ids) s += label(i);
    return s;
}

}  // namespace

Poset build_poset(std::vector<PosetElement> elements, const LeqFn& leq_fn) {
    Poset P;
    P.elements = std::move(elements);
    const int n = P.size();
    P.ups.assign(n, Bitset(n));
    P.downs.assign(n, Bitset(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (leq_fn(P.elements[i], P.elements[j])) P.ups[i].set(j);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i != j && P.ups[i][j] && P.ups[j][i])
                throw Error("DuplicateElements", "poset elements must be pairwise distinct");
            if (P.ups[i][j]) P.downs[j].set(i);
        }
    // covers: i < j with nothing strictly between
    for (int i = 0; i < n; ++i) {
        Bitset strict_up = P.ups[i];
        strict_up.reset(i);
        for (std::size_t j = strict_up.find_first(); j != Bitset::npos; j = strict_up.find_next(j)) {
            Bitset between = strict_up & P.downs[j];
            between.reset(j);
            if (!between.any()) P.hasse.emplace_back(i, static_cast<int>(j));
        }
    }
    std::sort(P.hasse.begin(), P.hasse.end());
    return P;
}

Poset build_point_poset(std::vector<PosetElement> elements, bool reversed) {
    for (const PosetElement& e : elements)
        if (!e.point) throw Error("MissingPoint", "point poset elements need coordinates");
    if (reversed)
        return build_poset(std::move(elements), [](const PosetElement& a, const PosetElement& b) {
            return point_leq(b, a);
        });
    return build_poset(std::move(elements), point_leq);
}

std::vector<int> Poset::minimal_elements() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i) {
        Bitset below = downs[i];
        below.reset(i);
        if (!below.any()) out.push_back(i);
    }
    return out;
}

std::vector<int> Poset::maximal_elements() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i) {
        Bitset above = ups[i];
        above.reset(i);
        if (!above.any()) out.push_back(i);
    }
    return out;
}

int Poset::bottom() const {
    auto mins = minimal_elements();
    return mins.size() == 1 ? mins[0] : -1;
}

int Poset::top() const {
    auto maxs = maximal_elements();
    return maxs.size() == 1 ? maxs[0] : -1;
}

std::vector<int> Poset::atoms() const {
    const int b = bottom();
    std::vector<int> out;
    for (const auto& [lo, hi] : hasse)
        if (lo == b) out.push_back(hi);
    return out;
}

namespace {

int unique_extreme(const Poset& P, const Bitset& candidates, bool want_max) {
    int found = -1;
    for (std::size_t i = candidates.find_first(); i != Bitset::npos; i = candidates.find_next(i)) {
        Bitset beyond = want_max ? (P.ups[i] & candidates) : (P.downs[i] & candidates);
        beyond.reset(i);
        if (!beyond.any()) {
            if (found >= 0) return -1;
            found = static_cast<int>(i);
        }
    }
    return found;
}

}  // namespace

int Poset::meet(int i, int j) const { return unique_extreme(*this, downs[i] & downs[j], true); }
int Poset::join(int i, int j) const { return unique_extreme(*this, ups[i] & ups[j], false); }

bool is_lattice(const Poset& P) {
    if (P.size() == 0) return false;
    if (P.bottom() < 0 || P.top() < 0) return false;
    for (int i = 0; i < P.size(); ++i)
        for (int j = i + 1; j < P.size(); ++j)
            if (P.meet(i, j) < 0 || P.join(i, j) < 0) return false;
    return true;
}

Poset induced_subposet(const Poset& P, const std::vector<int>& ids) {
    Poset Q;
    Q.n_generators = P.n_generators;
    const int m = static_cast<int>(ids.size());
    for (int id : ids) Q.elements.push_back(P.elements[id]);
    Q.ups.assign(m, Bitset(m));
    Q.downs.assign(m, Bitset(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (P.leq(ids[a], ids[b])) {
                Q.ups[a].set(b);
                Q.downs[b].set(a);
            }
    for (int a = 0; a < m; ++a) {
        Bitset strict_up = Q.ups[a];
        strict_up.reset(a);
        for (std::size_t b = strict_up.find_first(); b != Bitset::npos; b = strict_up.find_next(b)) {
            Bitset between = strict_up & Q.downs[b];
            between.reset(b);
            if (!between.any()) Q.hasse.emplace_back(a, static_cast<int>(b));
        }
    }
    std::sort(Q.hasse.begin(), Q.hasse.end());
    return Q;
}

Poset closure_lattice(const BipartiteGraph& G) {
    std::set<Bitset> closed;
    Bitset full(G.left_size);
    full.set();
    closed.insert(full);
    for (const Bitset& nb : G.right_nbhd) closed.insert(nb);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Bitset> snapshot(closed.begin(), closed.end());
        for (std::size_t a = 0; a < snapshot.size(); ++a)
            for (std::size_t b = a + 1; b < snapshot.size(); ++b) {
                Bitset meet = snapshot[a] & snapshot[b];
                if (closed.insert(meet).second) grew = true;
            }
        if (closed.size() > 200000)
            throw BudgetError("TooLarge", "closure lattice exceeds the element budget");
    }
    closed.insert(Bitset(G.left_size));  // bottom, adjoined even if not closed

    std::vector<Bitset> sets(closed.begin(), closed.end());
    std::sort(sets.begin(), sets.end(), [](const Bitset& a, const Bitset& b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a < b;
    });

    std::vector<PosetElement> elements;
    for (const Bitset& S : sets) {
        PosetElement e;
        for (std::size_t i = S.find_first(); i != Bitset::npos; i = S.find_next(i))
            e.vertex_label.push_back(static_cast<int>(i));
        for (int r = 0; r < G.right_size; ++r)
            if (S.is_subset_of(G.right_nbhd[r])) e.apex_label.push_back(r);
        e.name = set_name(e.vertex_label, [](int i) { return "l" + std::to_string(i); });
        elements.push_back(std::move(e));
    }
    const int m = static_cast<int>(elements.size());
    Poset P = build_poset(std::move(elements), [&](const PosetElement& a, const PosetElement& b) {
        return std::includes(b.vertex_label.begin(), b.vertex_label.end(),
                             a.vertex_label.begin(), a.vertex_label.end());
    });
    (void)m;
    return P;
}

VertexFacetLattice vertex_facet_lattice(const GeneratorSet& V) {
    VertexFacetLattice out;
    out.generators = minimal_generators(V);
    out.incidence = incidence_graph(out.generators);
    const int L = out.incidence.left_size();
    BipartiteGraph G;
    G.left_size = L;
    G.right_size = out.incidence.right_size();
    for (int r = 0; r < G.right_size; ++r) {
        Bitset nb(L);
        for (int l = 0; l < L; ++l)
            if (out.incidence.edge(l, r)) nb.set(l);
        G.right_nbhd.push_back(nb);
    }
    out.lattice = closure_lattice(G);
    out.lattice.n_generators = out.incidence.n_generators;

    auto label = [&](int l) {
        if (l < out.incidence.n_generators) return out.generators.label(l);
        return "e" + std::to_string(l - out.incidence.n_generators + 1);
    };
    for (int k = 0; k < out.lattice.size(); ++k) {
        PosetElement& e = out.lattice.elements[k];
        e.name = set_name(e.vertex_label, label);
        bool affine = e.vertex_label.empty();
        for (int l : e.vertex_label)
            if (l < out.incidence.n_generators) affine = true;
        if (affine) e.point = vf_element_point(out, k);
        // the empty closed set plays the role of the formal bottom
        if (e.vertex_label.empty()) e.formal = true;
    }
    return out;
}

Point vf_element_point(const VertexFacetLattice& L, int element) {
    const int d = L.generators.dim;
    const int n = L.incidence.n_generators;
    Point m = all_neg_inf(d);
    for (int l : L.lattice.elements[element].vertex_label) {
        if (l < n)
            m = componentwise_max(m, L.generators.points[l]);
        else
            m[l - n] = ExtValue::pos_inf();
    }
    return m;
}

Poset affine_part(const VertexFacetLattice& L) {
    std::vector<int> ids;
    for (int k = 0; k < L.lattice.size(); ++k) {
        const auto& S = L.lattice.elements[k].vertex_label;
        bool keep = S.empty();
        for (int l : S)
            if (l < L.lattice.n_generators) keep = true;
        if (keep) ids.push_back(k);
    }
    return induced_subposet(L.lattice, ids);
}

namespace {

// Distinct points max(S) for S <= points u modified unit vectors, S n points
// nonempty, including every +inf pattern; bottom excluded.
std::vector<Point> subset_maxima(const std::vector<Point>& points, int d) {
    std::set<Point, PointLess> base;
    Point acc = all_neg_inf(d);
    std::function<void(std::size_t, const Point&, bool)> rec =
        [&](std::size_t j, const Point& cur, bool nonempty) {
            if (j == points.size()) {
                if (nonempty) base.insert(cur);
                return;
            }
            rec(j + 1, cur, nonempty);
            rec(j + 1, componentwise_max(cur, points[j]), true);
        };
    rec(0, acc, false);

    std::set<Point, PointLess> all;
    for (const Point& b : base) {
        for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
            Point p = b;
            for (int i = 0; i < d; ++i)
                if ((mask >> i) & 1u) p[i] = ExtValue::pos_inf();
            all.insert(p);
        }
    }
    return {all.begin(), all.end()};
}

PosetElement max_lattice_element(const GeneratorSet& V, const Point& p) {
    PosetElement e;
    e.point = p;
    const int n = static_cast<int>(V.points.size());
    for (int j = 0; j < n; ++j)
        if (leq(V.points[j], p)) e.vertex_label.push_back(j);
    for (int i = 0; i < V.dim; ++i)
        if (p[i].is_pos_inf()) e.vertex_label.push_back(n + i);
    e.name = point_str(p);
    return e;
}

PosetElement formal_bottom_element(const Point& p) {
    PosetElement e;
    e.point = p;
    e.formal = true;
    e.name = point_str(p);
    return e;
}

void check_enumeration_budget(std::size_t n, int d) {
    if (n + static_cast<std::size_t>(d) > 20)
        throw BudgetError("TooLarge", "subset enumeration needs |V| + d <= 20");
}

}  // namespace

Poset max_lattice(const GeneratorSet& V) {
    const GeneratorSet W = minimal_generators(V);
    check_enumeration_budget(W.points.size(), W.dim);
    std::vector<PosetElement> elements;
    elements.push_back(formal_bottom_element(all_neg_inf(W.dim)));
    for (const Point& p : subset_maxima(W.points, W.dim))
        elements.push_back(max_lattice_element(W, p));
    Poset P = build_point_poset(std::move(elements));
    P.n_generators = static_cast<int>(W.points.size());
    return P;
}

Poset min_lattice(const GeneratorSet& V) {
    const GeneratorSet W = minimal_generators(V);
    const ApexSet F = apex_set(W);
    const std::vector<Point>& apices = F.principal;
    check_enumeration_budget(apices.size(), W.dim);
    std::vector<Point> neg;
    for (const Point& a : apices) neg.push_back(negate(a));

    // Admissible sets must contain a facet-apex: a principal one, or a
    // modified min-unit that realizes an actual boundary apex.
    std::uint32_t boundary_mask = 0;
    for (int dir : F.boundary) boundary_mask |= (1u << dir);

    std::set<Point, PointLess> pts;
    std::set<Point, PointLess> bases;  // maxima of subsets of -A, empty set included
    std::function<void(std::size_t, const Point&, bool)> rec =
        [&](std::size_t j, const Point& cur, bool nonempty) {
            if (j == neg.size()) {
                if (nonempty)
                    bases.insert(cur);
                return;
            }
            rec(j + 1, cur, nonempty);
            rec(j + 1, componentwise_max(cur, neg[j]), true);
        };
    rec(0, all_neg_inf(W.dim), false);
    for (std::uint32_t mask = 0; mask < (1u << W.dim); ++mask) {
        const bool anchored = (mask & boundary_mask) != 0;
        for (const Point& b : bases) {
            Point p = b;
            for (int i = 0; i < W.dim; ++i)
                if ((mask >> i) & 1u) p[i] = ExtValue::pos_inf();
            pts.insert(p);
        }
        if (anchored) {  // boundary apices alone may anchor a set
            Point p = all_neg_inf(W.dim);
            for (int i = 0; i < W.dim; ++i)
                if ((mask >> i) & 1u) p[i] = ExtValue::pos_inf();
            pts.insert(p);
        }
    }

    std::vector<PosetElement> elements;
    elements.push_back(formal_bottom_element(all_pos_inf(W.dim)));
    const int k = static_cast<int>(apices.size());
    for (const Point& q : pts) {
        PosetElement e;
        e.point = negate(q);
        for (int j = 0; j < k; ++j)
            if (leq(*e.point, apices[j])) e.apex_label.push_back(j);
        for (int i = 0; i < W.dim; ++i)
            if ((*e.point)[i].is_neg_inf()) e.apex_label.push_back(k + i);
        e.name = point_str(*e.point);
        elements.push_back(std::move(e));
    }
    Poset P = build_point_poset(std::move(elements), /*reversed=*/true);
    P.n_generators = k;
    return P;
}

namespace {

// Membership of p among the min-lattice points min(T), T a subset of the
// principal apices and modified min-units containing a facet-apex.  Finite
// coordinates need a pinning apex above p; -inf coordinates are pinned by
// modified min-units; +inf coordinates just restrict the choices.
bool is_min_lattice_point(const ApexSet& F, const Point& p) {
    const int d = F.dim;
    if (p == all_pos_inf(d)) return true;  // formal minimum of the reversed order
    bool any_finite = false;
    for (int i = 0; i < d; ++i) {
        if (!p[i].is_finite()) continue;
        any_finite = true;
        bool pinned = false;
        for (const Point& a : F.principal)
            if (leq(p, a) && a[i] == p[i]) {
                pinned = true;
                break;
            }
        if (!pinned) return false;
    }
    if (any_finite) return true;
    // pure +-inf pattern: the defining set still must contain a facet-apex
    for (int dir : F.boundary)
        if (p[dir].is_neg_inf()) return true;
    for (const Point& a : F.principal)
        if (leq(p, a)) return true;
    return false;
}

}  // namespace

Poset max_min_poset(const GeneratorSet& V) {
    const GeneratorSet W = minimal_generators(V);
    const ApexSet F = apex_set(W);
    const int k = static_cast<int>(F.principal.size());
    Poset Lmax = max_lattice(W);
    std::vector<int> ids;
    for (int i = 0; i < Lmax.size(); ++i) {
        const Point& p = *Lmax.elements[i].point;
        if (!is_min_lattice_point(F, p)) continue;
        PosetElement& e = Lmax.elements[i];
        for (int j = 0; j < k; ++j)
            if (leq(p, F.principal[j])) e.apex_label.push_back(j);
        for (int t = 0; t < F.dim; ++t)
            if (p[t].is_neg_inf()) e.apex_label.push_back(k + t);
        ids.push_back(i);
    }
    Poset P = induced_subposet(Lmax, ids);
    P.n_generators = Lmax.n_generators;
    return P;
}

bool is_characteristic_point(const GeneratorSet& V, const Point& p) {
    const CovectorGraph G = covector(V, p);
    const int n = G.n_generators;
    for (int i = 1; i <= G.dim; ++i) {
        if (p[i - 1].is_pos_inf()) continue;
        bool witness = false;
        for (int j = 0; j < n && !witness; ++j) {
            if (!G.edge(j, 0) || !G.edge(j, i)) continue;
            bool good = true;
            for (int u = 0; u < G.left_size() && good; ++u) {
                if (u == j || !G.edge(u, 0) || G.edge(u, i)) continue;
                if ((G.adj[u] & ~G.adj[j]) == 0) good = false;  // N(u) <= N(j)
            }
            witness = good;
        }
        if (!witness) return false;
    }
    return true;
}

Poset cp_order(const GeneratorSet& V) {
    const GeneratorSet W = minimal_generators(V);
    Poset Lmax = max_lattice(W);
    std::vector<int> ids;
    for (int i = 0; i < Lmax.size(); ++i) {
        if (Lmax.elements[i].formal)
            ids.push_back(i);
        else if (is_characteristic_point(W, *Lmax.elements[i].point))
            ids.push_back(i);
    }
    Poset P = induced_subposet(Lmax, ids);
    P.n_generators = Lmax.n_generators;
    return P;
}

bool is_scarf_point(const GeneratorSet& V, const Point& p) {
    const CovectorGraph G = covector(V, p);
    const int n = G.n_generators;
    // Defining sets range over generator subsets extended by the modified
    // unit vectors of the +inf coordinates; the set must meet V.
    std::vector<int> below;
    for (int j = 0; j < n; ++j)
        if (G.edge(j, 0)) below.push_back(j);
    if (below.empty()) return false;
    // every finite coordinate needs a generator attaining it
    for (int i = 1; i <= G.dim; ++i) {
        if (!p[i - 1].is_finite()) continue;
        bool hit = false;
        for (int j : below)
            if (G.edge(j, i)) hit = true;
        if (!hit) return false;
    }
    // uniqueness: every generator below p is the sole witness of some
    // coordinate, or it is the only generator at all
    for (int j : below) {
        bool required = below.size() == 1;
        for (int i = 1; i <= G.dim && !required; ++i) {
            if (!G.edge(j, i)) continue;
            bool alone = true;
            for (int k : below)
                if (k != j && G.edge(k, i)) alone = false;
            required = alone;
        }
        if (!required) return false;
    }
    return true;
}

Poset scarf_poset(const GeneratorSet& V) {
    const GeneratorSet W = minimal_generators(V);
    Poset Lmax = max_lattice(W);
    std::vector<int> ids;
    for (int i = 0; i < Lmax.size(); ++i) {
        if (Lmax.elements[i].formal) continue;  // no formal bottom here
        if (is_scarf_point(W, *Lmax.elements[i].point)) ids.push_back(i);
    }
    Poset P = induced_subposet(Lmax, ids);
    P.n_generators = Lmax.n_generators;
    return P;
}

Poset pseudovertex_poset(const GeneratorSet& V, const PseudovertexOptions& opts) {
    const GeneratorSet W = minimal_generators(V);
    const int d = W.dim;
    bool any_finite = false;
    Rational lo, hi;
    for (const Point& v : W.points)
        for (const ExtValue& x : v) {
            if (!x.is_finite()) continue;
            if (!x.is_integer())
                throw Error("NonIntegerInput",
                            "pseudovertex enumeration needs integer coordinates; scale the "
                            "instance to clear denominators first");
            if (!any_finite || x.value() < lo) lo = x.value();
            if (!any_finite || x.value() > hi) hi = x.value();
            any_finite = true;
        }
    long low = mpz_get_si(lo.get_num().get_mpz_t());
    long high = mpz_get_si(hi.get_num().get_mpz_t());
    const long range = high - low;
    long box_low = opts.box_low.value_or(low - d * range);
    long box_high = opts.box_high.value_or(high + d * range);

    const long per_axis = box_high - box_low + 1 + 2;  // grid values plus -inf, +inf
    double cells = 1;
    for (int i = 0; i < d; ++i) cells *= static_cast<double>(per_axis);
    if (cells > static_cast<double>(opts.grid_budget))
        throw BudgetError("GridBudgetExceeded",
                          "pseudovertex grid has " + std::to_string(cells) +
                              " cells; budget is " + std::to_string(opts.grid_budget));

    std::vector<PosetElement> elements;
    elements.push_back(formal_bottom_element(all_neg_inf(d)));

    // Axis values: box integers, -inf, +inf; index 0 is -inf.
    std::vector<ExtValue> axis;
    axis.push_back(ExtValue::neg_inf());
    for (long t = box_low; t <= box_high; ++t) axis.push_back(ExtValue(t));
    axis.push_back(ExtValue::pos_inf());

    std::vector<std::size_t> idx(d, 0);
    Point p(d);
    while (true) {
        bool all_bottom = true;
        bool has_top = false;
        for (int i = 0; i < d; ++i) {
            p[i] = axis[idx[i]];
            if (idx[i] != 0) all_bottom = false;
            if (idx[i] + 1 == axis.size()) has_top = true;
        }
        // node 0 is isolated unless a generator lies below p or some
        // coordinate is +inf; that rejects the bulk of the grid cheaply
        bool candidate = !all_bottom && (has_top || contains(W, p));
        if (candidate && is_pseudovertex(W, p)) {
            PosetElement e;
            e.point = p;
            e.name = point_str(p);
            elements.push_back(std::move(e));
        }
        int pos = d - 1;
        while (pos >= 0 && ++idx[pos] == axis.size()) idx[pos--] = 0;
        if (pos < 0) break;
    }
    Poset P = build_point_poset(std::move(elements));
    P.n_generators = static_cast<int>(W.points.size());
    return P;
}

DedekindMacNeille dedekind_macneille(const Poset& P) {
    const int n = P.size();
    std::set<Bitset> cuts;
    Bitset full(n);
    full.set();
    cuts.insert(full);  // lower bounds of the empty family
    for (int i = 0; i < n; ++i) cuts.insert(P.downs[i]);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Bitset> snapshot(cuts.begin(), cuts.end());
        for (std::size_t a = 0; a < snapshot.size(); ++a)
            for (std::size_t b = a + 1; b < snapshot.size(); ++b)
                if (cuts.insert(snapshot[a] & snapshot[b]).second) grew = true;
        if (cuts.size() > 200000)
            throw BudgetError("TooLarge", "Dedekind-MacNeille completion exceeds the budget");
    }
    // The empty cut belongs iff the poset has no global lower bound.
    Bitset lower_of_all(n);
    lower_of_all.set();
    for (int i = 0; i < n; ++i) lower_of_all &= P.downs[i];
    if (!lower_of_all.any()) cuts.insert(Bitset(n));

    std::vector<Bitset> sets(cuts.begin(), cuts.end());
    std::sort(sets.begin(), sets.end(), [](const Bitset& a, const Bitset& b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a < b;
    });
    DedekindMacNeille out;
    std::vector<PosetElement> elements;
    for (const Bitset& S : sets) {
        PosetElement e;
        for (std::size_t i = S.find_first(); i != Bitset::npos; i = S.find_next(i))
            e.vertex_label.push_back(static_cast<int>(i));
        e.name = set_name(e.vertex_label, [](int i) { return "p" + std::to_string(i); });
        elements.push_back(std::move(e));
    }
    out.lattice =
        build_poset(std::move(elements), [](const PosetElement& a, const PosetElement& b) {
            return std::includes(b.vertex_label.begin(), b.vertex_label.end(),
                                 a.vertex_label.begin(), a.vertex_label.end());
        });
    out.embedding.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < sets.size(); ++k)
            if (sets[k] == P.downs[i]) out.embedding[i] = static_cast<int>(k);
    }
    return out;
}

PosetComparison poset_compare(const Poset& P, const Poset& Q, bool ignore_formal) {
    auto active = [&](const Poset& R) {
        std::vector<int> ids;
        for (int i = 0; i < R.size(); ++i)
            if (!(ignore_formal && R.elements[i].formal)) ids.push_back(i);
        return ids;
    };
    const std::vector<int> pa = active(P), qa = active(Q);
    std::map<Point, int, PointLess> q_index;
    for (std::size_t b = 0; b < qa.size(); ++b) {
        const auto& e = Q.elements[qa[b]];
        if (!e.point) throw Error("IdentificationFailure", "target element lacks a point");
        q_index.emplace(*e.point, static_cast<int>(b));
    }
    std::vector<int> f(pa.size());
    for (std::size_t a = 0; a < pa.size(); ++a) {
        const auto& e = P.elements[pa[a]];
        if (!e.point) throw Error("IdentificationFailure", "source element lacks a point");
        auto it = q_index.find(*e.point);
        if (it == q_index.end())
            throw Error("IdentificationFailure",
                        "no counterpart for element " + point_str(*e.point));
        f[a] = it->second;
    }
    const Poset Pi = induced_subposet(P, pa);
    const Poset Qi = induced_subposet(Q, qa);

    PosetComparison cmp;
    cmp.subposet = true;
    for (std::size_t a = 0; a < pa.size() && cmp.subposet; ++a)
        for (std::size_t b = 0; b < pa.size() && cmp.subposet; ++b)
            if (Pi.leq(a, b) != Qi.leq(f[a], f[b])) cmp.subposet = false;
    cmp.cover_preserving = cmp.subposet;
    if (cmp.subposet) {
        std::set<std::pair<int, int>> q_covers(Qi.hasse.begin(), Qi.hasse.end());
        for (const auto& [lo, hi] : Pi.hasse)
            if (!q_covers.count({f[lo], f[hi]})) {
                cmp.cover_preserving = false;
                break;
            }
    }
    cmp.equal = cmp.subposet && pa.size() == qa.size();
    return cmp;
}

}  // namespace tropmono
