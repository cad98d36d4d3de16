#include <doctest.h>

#include <map>
#include <set>

#include "builders.hpp"
#include "oracles.hpp"
#include "tropmono/poset.hpp"

using namespace tropmono;
using namespace tropmono::testing;

namespace {

GeneratorSet two_d() { return gens(2, {{1, 2}, {2, -1000}}, {"v1", "v2"}); }

GeneratorSet maxmin4d(bool tilde = false) {
    return gens(4,
                {{4, 2, 3, 1},
                 {2, 4, 6, 2},
                 {3, 1, 2, 3},
                 tilde ? std::vector<long>{1, 4, 1, 3} : std::vector<long>{1, 3, 1, 3},
                 {9, -1000, -1000, -1000},
                 {-1000, 9, -1000, -1000},
                 {-1000, -1000, 9, -1000},
                 {-1000, -1000, -1000, 9}},
                {"s", "t", "v", "w", "X", "Y", "Z", "T"});
}

std::set<Point, PointLess> poset_points(const Poset& P, bool include_formal = true) {
    std::set<Point, PointLess> out;
    for (const auto& e : P.elements)
        if (e.point && (include_formal || !e.formal)) out.insert(*e.point);
    return out;
}

int find_point(const Poset& P, const Point& p) {
    for (int k = 0; k < P.size(); ++k)
        if (P.elements[k].point && *P.elements[k].point == p) return k;
    return -1;
}

Bitset bits(int n, const std::vector<int>& ids) {
    Bitset b(n);
    for (int i : ids) b.set(i);
    return b;
}

}  // namespace

TEST_CASE("closure lattices of small bipartite graphs") {
    // complete bipartite: only the full set is closed, the empty set is adjoined
    BipartiteGraph K23;
    K23.left_size = 2;
    K23.right_size = 3;
    K23.right_nbhd.assign(3, bits(2, {0, 1}));
    auto L = closure_lattice(K23);
    CHECK(L.size() == 2);
    CHECK(is_lattice(L));

    // perfect matching on 3 + 3: singleton neighbourhoods close to the
    // five-element lattice of singletons with bottom and top
    BipartiteGraph M;
    M.left_size = 3;
    M.right_size = 3;
    for (int i = 0; i < 3; ++i) M.right_nbhd.push_back(bits(3, {i}));
    auto B = closure_lattice(M);
    CHECK(B.size() == 5);
    CHECK(is_lattice(B));
    CHECK(B.atoms().size() == 3);

    // complement neighbourhoods make every subset closed: the Boolean lattice
    BipartiteGraph C;
    C.left_size = 3;
    C.right_size = 3;
    for (int i = 0; i < 3; ++i) {
        Bitset nb = bits(3, {0, 1, 2});
        nb.reset(i);
        C.right_nbhd.push_back(nb);
    }
    auto BL = closure_lattice(C);
    CHECK(BL.size() == 8);
    CHECK(is_lattice(BL));
    CHECK(BL.atoms().size() == 3);
}

TEST_CASE("vertex-facet lattice of the 2d example is the 10-element lattice") {
    auto VF = vertex_facet_lattice(two_d());
    REQUIRE(VF.lattice.size() == 10);
    CHECK(is_lattice(VF.lattice));
    std::set<std::string> names;
    for (const auto& e : VF.lattice.elements) names.insert(e.name);
    std::set<std::string> expect{"{}", "v1",   "v2",   "e1",   "e2",
                                 "v1v2", "v1e2", "v2e1", "e1e2", "v1v2e1e2"};
    CHECK(names == expect);
    // covers of the bottom are the four singletons
    CHECK(VF.lattice.atoms().size() == 4);

    auto aff = affine_part(VF);
    CHECK(aff.size() == 7);
    CHECK(is_lattice(aff));
}

TEST_CASE("model lattice: chains through AB and unequal chain lengths") {
    auto M = gens(3, {{2, 0, 1}, {2, 1, 0}, {1, 2, 5}, {1, 3, 4}, {1, 4, 3}, {1, 5, 2}},
                  {"A", "B", "C", "D", "E", "F"});
    auto VF = vertex_facet_lattice(M);
    int ab = -1;
    for (int k = 0; k < VF.lattice.size(); ++k)
        if (VF.lattice.elements[k].name == "AB") ab = k;
    REQUIRE(ab >= 0);
    std::set<std::string> covers;
    for (const auto& [lo, hi] : VF.lattice.hasse)
        if (lo == ab) covers.insert(VF.lattice.elements[hi].name);
    CHECK(covers == std::set<std::string>{"ABC", "ABD", "ABE", "ABF", "ABe1"});

    // maximal chains of unequal length: ABe1 is covered by the top while the
    // chains through ABC continue below the top
    int abe1 = -1, top = VF.lattice.top();
    for (int k = 0; k < VF.lattice.size(); ++k)
        if (VF.lattice.elements[k].name == "ABe1") abe1 = k;
    REQUIRE(abe1 >= 0);
    bool abe1_covered_by_top = false;
    int abc_cover_below_top = 0;
    for (const auto& [lo, hi] : VF.lattice.hasse) {
        if (lo == abe1 && hi == top) abe1_covered_by_top = true;
        if (VF.lattice.elements[lo].name == "ABC" && hi != top) ++abc_cover_below_top;
    }
    CHECK(abe1_covered_by_top);
    CHECK(abc_cover_below_top > 0);
}

TEST_CASE("degenerate example: uvw is an edge containing three vertices") {
    auto V2 = gens(3, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}, {"u", "v", "w"});
    auto VF = vertex_facet_lattice(V2);
    int uvw = -1;
    for (int k = 0; k < VF.lattice.size(); ++k)
        if (VF.lattice.elements[k].name == "uvw") uvw = k;
    REQUIRE(uvw >= 0);
    // uvw is the meet of the three facets uvwe1, uvwe2, uvwe3
    std::vector<int> facets;
    for (int k = 0; k < VF.lattice.size(); ++k) {
        const std::string& n = VF.lattice.elements[k].name;
        if (n == "uvwe1" || n == "uvwe2" || n == "uvwe3") facets.push_back(k);
    }
    REQUIRE(facets.size() == 3);
    CHECK(VF.lattice.meet(facets[0], facets[1]) == uvw);
    CHECK(VF.lattice.meet(VF.lattice.meet(facets[0], facets[1]), facets[2]) == uvw);
}

TEST_CASE("affine part of the simplex example is the classical face lattice") {
    auto V1 = gens(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {"a", "b", "c"});
    auto aff = affine_part(vertex_facet_lattice(V1));
    // conv(a,b,c) + orthant has 3 vertices, 6 edges, 4 facets, plus top and bottom
    CHECK(aff.size() == 15);
    CHECK(is_lattice(aff));
    CHECK(aff.atoms().size() == 3);
}

TEST_CASE("max-lattice of the 2d example matches the figure") {
    auto L = max_lattice(two_d());
    REQUIRE(L.size() == 9);
    std::set<Point, PointLess> expect{
        xpt({-1000, -1000}), pt({1, 2}),        xpt({1, 1000}),
        xpt({2, -1000}),     pt({2, 2}),        xpt({1000, -1000}),
        xpt({1000, 2}),      xpt({2, 1000}),    xpt({1000, 1000})};
    CHECK(poset_points(L) == expect);
    CHECK(is_lattice(L));
    // labels: the element (2,2) is generated by both vertices
    int m = find_point(L, pt({2, 2}));
    CHECK(L.elements[m].vertex_label == std::vector<int>{0, 1});

    // single generator: Boolean lattice of infinity patterns plus bottom
    auto S = max_lattice(gens(2, {{0, 0}}));
    CHECK(S.size() == 5);
    CHECK(is_lattice(S));
}

TEST_CASE("min-lattice points and reversal") {
    auto L = min_lattice(two_d());
    // n over both principal apices is the vertex (1,2)
    CHECK(poset_points(L).count(pt({1, 2})) == 1);
    // the reversed order has the all-+inf point as its bottom
    CHECK(*L.elements[L.bottom()].point == xpt({1000, 1000}));

    // 4d example: n_gij = (4,4,3,3)
    auto L4 = min_lattice(maxmin4d());
    CHECK(poset_points(L4).count(pt({4, 4, 3, 3})) == 1);

    // a single apex gives a chain with reversed infinity patterns
    auto LS = min_lattice(gens(2, {{2, -1000}, {-1000, 3}}));
    CHECK(is_lattice(LS));
    CHECK(poset_points(LS).count(pt({2, 3})) == 1);
}

TEST_CASE("max-min poset excludes svw but includes it after the tilde move") {
    auto MM = max_min_poset(maxmin4d());
    CHECK(poset_points(MM).count(pt({4, 3, 3, 3})) == 0);
    CHECK(find_point(max_lattice(maxmin4d()), pt({4, 3, 3, 3})) >= 0);

    auto MMt = max_min_poset(maxmin4d(true));
    CHECK(poset_points(MMt).count(pt({4, 4, 3, 3})) == 1);

    // vertices are atoms and principal apices are elements in every instance
    oracles::Rng rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        auto V = oracles::random_instance(rng, 2 + rng.next() % 3, 5, -4, 4, true);
        auto M = max_min_poset(V);
        auto pts = poset_points(M);
        for (const Point& v : V.points) CHECK(pts.count(v) == 1);
        for (const Point& a : principal_apices(V)) CHECK(pts.count(a) == 1);
    }
}

TEST_CASE("the max-min poset is the point intersection of the two lattices") {
    oracles::Rng rng(40);
    for (int trial = 0; trial < 20; ++trial) {
        const int d = 2 + static_cast<int>(rng.next() % 2);
        auto V = oracles::random_instance(rng, d, 4, -3, 3, true);
        Poset Lmax, Lmin, MM;
        try {
            Lmax = max_lattice(V);
            Lmin = min_lattice(V);
            MM = max_min_poset(V);
        } catch (const BudgetError&) {
            continue;  // too many apices for the full min-lattice enumeration
        }
        std::set<Point, PointLess> a = poset_points(Lmax), b = poset_points(Lmin);
        std::set<Point, PointLess> both;
        for (const Point& p : a)
            if (b.count(p)) both.insert(p);
        CHECK(both == poset_points(MM));
    }
}

TEST_CASE("characteristic points: witnesses on the covector graph") {
    auto W = maxmin4d();
    CHECK_FALSE(is_characteristic_point(minimal_generators(W), pt({4, 3, 3, 3})));
    auto Wt = minimal_generators(maxmin4d(true));
    CHECK_FALSE(is_characteristic_point(Wt, pt({4, 4, 3, 3})));

    // every principal apex is characteristic
    oracles::Rng rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        auto V = oracles::random_instance(rng, 2 + rng.next() % 3, 5, -4, 4, true);
        for (const Point& a : principal_apices(V)) CHECK(is_characteristic_point(V, a));
    }
}

TEST_CASE("characteristic points agree with the geometric oracle on finite data") {
    oracles::Rng rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        const int d = 2 + static_cast<int>(rng.next() % 2);
        auto V = oracles::random_instance(rng, d, 5, -3, 3, false);
        Point p(d);
        for (int i = 0; i < d; ++i) p[i] = ExtValue(rng.range(-4, 4));
        CHECK(is_characteristic_point(V, p) == oracles::finite_characteristic_oracle(V, p));
    }
}

TEST_CASE("the CP interval [v, stvwY] matches the non-lattice figure") {
    auto CP = cp_order(maxmin4d());
    const Point v = pt({3, 1, 2, 3});
    const Point stvwY = pt({4, 9, 6, 3});
    int lo = find_point(CP, v), hi = find_point(CP, stvwY);
    REQUIRE(lo >= 0);
    REQUIRE(hi >= 0);
    std::set<Point, PointLess> interval;
    for (int k = 0; k < CP.size(); ++k)
        if (CP.leq(lo, k) && CP.leq(k, hi)) interval.insert(*CP.elements[k].point);
    std::set<Point, PointLess> expect{pt({3, 1, 2, 3}), pt({4, 2, 3, 3}), pt({3, 3, 2, 3}),
                                      pt({4, 4, 6, 3}), pt({4, 9, 3, 3}), pt({4, 9, 6, 3})};
    CHECK(interval == expect);
    CHECK_FALSE(is_lattice(CP));
    // sv and vw have two minimal upper bounds inside the interval
    int sv = find_point(CP, pt({4, 2, 3, 3})), vw = find_point(CP, pt({3, 3, 2, 3}));
    CHECK(CP.join(sv, vw) == -1);
}

TEST_CASE("Scarf points") {
    auto SC = scarf_poset(two_d());
    CHECK(poset_points(SC).count(pt({2, 2})) == 1);
    // no formal bottom in the Scarf poset
    for (const auto& e : SC.elements) CHECK_FALSE(e.formal);

    auto V2 = gens(3, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    CHECK_FALSE(is_scarf_point(minimal_generators(V2), pt({1, 1, 1})));

    auto S1 = scarf_poset(gens(2, {{3, 4}}));
    CHECK(poset_points(S1).count(pt({3, 4})) == 1);
}

TEST_CASE("pseudovertex poset of the non-lattice example") {
    auto V = gens(3, {{2, 1, 0}, {2, 0, 1}, {1, 2, 3}, {1, 3, 2}});
    auto P = pseudovertex_poset(V);
    int a = find_point(P, pt({2, 2, 1}));
    int b = find_point(P, pt({2, 1, 2}));
    REQUIRE(a >= 0);
    REQUIRE(b >= 0);
    CHECK(P.join(a, b) == -1);  // no unique least upper bound
    CHECK_FALSE(is_lattice(P));
    CHECK(find_point(P, xpt({1000, 1000, 1000})) >= 0);

    // perturbing (1,3,2) to (1,4,2) splits the vertex 210
    auto Q = pseudovertex_poset(gens(3, {{2, 1, 0}, {2, 0, 1}, {1, 2, 3}, {1, 4, 2}}));
    CHECK(find_point(Q, pt({2, 1, 0})) >= 0);
    CHECK(find_point(Q, pt({2, 2, 0})) >= 0);
    CHECK(find_point(P, pt({2, 2, 0})) == -1);

    CHECK_THROWS_AS(
        pseudovertex_poset(gens(2, {{0, 0}}), []{ PseudovertexOptions o; o.grid_budget = 3; return o; }()),
        BudgetError);
    GeneratorSet half = make_generator_set(2, {{ExtValue(Rational(1, 2)), ExtValue(0)}});
    CHECK_THROWS_AS(pseudovertex_poset(half), Error);
}

TEST_CASE("max-lattice points are pseudovertices; finite ones are 0-cells") {
    oracles::Rng rng(44);
    for (int trial = 0; trial < 12; ++trial) {
        const int d = 2 + static_cast<int>(rng.next() % 2);
        auto V = oracles::random_instance(rng, d, 4, -2, 2, false);
        auto P = pseudovertex_poset(V);
        auto pts = poset_points(P);
        for (const auto& e : max_lattice(V).elements)
            if (!e.formal) CHECK(pts.count(*e.point) == 1);
        // all-finite pseudovertices change or disconnect under half-integer moves
        for (const auto& e : P.elements) {
            if (e.formal) continue;
            bool finite = true;
            for (const ExtValue& x : *e.point) finite &= x.is_finite();
            if (!finite) continue;
            const auto G = covector(V, *e.point);
            for (int i = 0; i < d; ++i)
                for (int s : {-1, 1}) {
                    Point q = *e.point;
                    q[i] = ExtValue(q[i].value() + Rational(s, 2));
                    const auto Gq = covector(V, q);
                    CHECK((!(Gq == G) || !Gq.connected()));
                }
        }
    }
}

TEST_CASE("Dedekind-MacNeille completion") {
    // completion of a lattice is the lattice itself
    auto VF = vertex_facet_lattice(two_d());
    auto dm = dedekind_macneille(VF.lattice);
    CHECK(dm.lattice.size() == VF.lattice.size());
    for (int i = 0; i < VF.lattice.size(); ++i) CHECK(dm.embedding[i] >= 0);

    // antichain of two points with bottom and top completes to itself
    std::vector<PosetElement> elems(4);
    elems[0].point = pt({0, 0});
    elems[1].point = pt({1, 2});
    elems[2].point = pt({2, 1});
    elems[3].point = pt({3, 3});
    auto A = build_point_poset(std::move(elems));
    auto dmA = dedekind_macneille(A);
    CHECK(dmA.lattice.size() == 4);
    CHECK(is_lattice(dmA.lattice));
}

TEST_CASE("DM completion of the CP-order is the affine vertex-facet lattice") {
    oracles::Rng rng(45);
    for (int trial = 0; trial < 20; ++trial) {
        const int d = 2 + static_cast<int>(rng.next() % 3);
        auto V = oracles::random_instance(rng, d, 5, -3, 3, true);
        auto CP = cp_order(V);
        auto aff = affine_part(vertex_facet_lattice(V));
        auto dm = dedekind_macneille(CP);
        REQUIRE(dm.lattice.size() == aff.size());
        // each affine element corresponds to the cut of CP points below it
        std::set<std::vector<int>> cuts;
        for (const auto& e : dm.lattice.elements) cuts.insert(e.vertex_label);
        for (const auto& e : aff.elements) {
            std::vector<int> cut;
            for (int c = 0; c < CP.size(); ++c)
                if (leq(*CP.elements[c].point, *e.point)) cut.push_back(c);
            CHECK(cuts.count(cut) == 1);
        }
        // corollary: the CP-order is a lattice iff it equals the affine part
        const bool equal = poset_compare(CP, aff, false).equal;
        CHECK(equal == is_lattice(CP));
    }
}

TEST_CASE("poset comparison identifies, embeds, and detects covers") {
    auto L = max_lattice(two_d());
    auto cmp = poset_compare(L, L);
    CHECK(cmp.equal);
    CHECK(cmp.cover_preserving);
    auto SC = scarf_poset(two_d());
    auto CP = cp_order(two_d());
    auto c2 = poset_compare(SC, CP);
    CHECK(c2.subposet);
    CHECK(c2.cover_preserving);
    CHECK_FALSE(c2.equal);
    CHECK_THROWS_AS(poset_compare(L, SC), Error);  // top of L has no counterpart
}

TEST_CASE("the poset tower holds on random instances") {
    oracles::Rng rng(46);
    for (int trial = 0; trial < 40; ++trial) {
        const int d = 2 + static_cast<int>(rng.next() % 3);
        auto V = oracles::random_instance(rng, d, 6, -4, 4, true);
        auto Lmax = max_lattice(V);
        auto MM = max_min_poset(V);
        auto CP = cp_order(V);
        auto SC = scarf_poset(V);
        auto aff = affine_part(vertex_facet_lattice(V));
        CHECK(poset_compare(SC, CP).cover_preserving);
        CHECK(poset_compare(SC, MM).cover_preserving);
        CHECK(poset_compare(SC, aff).cover_preserving);
        CHECK(poset_compare(SC, Lmax).cover_preserving);
        CHECK(poset_compare(CP, MM).subposet);
        CHECK(poset_compare(MM, aff).subposet);
        CHECK(poset_compare(aff, Lmax).subposet);
    }
}

TEST_CASE("strong genericity collapses the tower") {
    oracles::Rng rng(47);
    for (int trial = 0; trial < 25; ++trial) {
        const int d = 2 + static_cast<int>(rng.next() % 3);
        auto V = oracles::random_strongly_generic(rng, d, 5, -8, 8);
        auto MM = max_min_poset(V);
        auto CP = cp_order(V);
        auto aff = affine_part(vertex_facet_lattice(V));
        CHECK(poset_compare(CP, MM, false).equal);
        CHECK(poset_compare(CP, aff, false).equal);
        auto SC = scarf_poset(V);
        std::set<Point, PointLess> s, c;
        const Point top = all_pos_inf(d);
        for (const auto& e : SC.elements)
            if (!(*e.point == top)) s.insert(*e.point);
        for (const auto& e : CP.elements)
            if (!e.formal && !(*e.point == top)) c.insert(*e.point);
        CHECK(s == c);
    }
}

TEST_CASE("the max-lattice depends only on the order pattern") {
    oracles::Rng rng(48);
    for (int trial = 0; trial < 20; ++trial) {
        const int d = 2 + static_cast<int>(rng.next() % 2);
        auto V = oracles::random_instance(rng, d, 5, -4, 4, true);
        // order-preserving relabelling per axis: value -> 3 * rank(value)
        GeneratorSet W = V;
        for (int i = 0; i < d; ++i) {
            std::set<Rational> values;
            for (const Point& v : V.points)
                if (v[i].is_finite()) values.insert(v[i].value());
            std::map<Rational, long> rank;
            long r = 0;
            for (const Rational& q : values) rank[q] = 3 * (r++);
            for (Point& w : W.points)
                if (w[i].is_finite()) w[i] = ExtValue(rank[w[i].value()]);
        }
        auto L1 = max_lattice(V);
        auto L2 = max_lattice(W);
        REQUIRE(L1.size() == L2.size());
        // the same label sets appear with the same hasse diagram
        std::map<std::vector<int>, int> id1, id2;
        for (int k = 0; k < L1.size(); ++k) id1[L1.elements[k].vertex_label] = k;
        for (int k = 0; k < L2.size(); ++k) id2[L2.elements[k].vertex_label] = k;
        REQUIRE(id1.size() == id2.size());
        std::set<std::pair<std::vector<int>, std::vector<int>>> h1, h2;
        for (const auto& [lo, hi] : L1.hasse)
            h1.insert({L1.elements[lo].vertex_label, L1.elements[hi].vertex_label});
        for (const auto& [lo, hi] : L2.hasse)
            h2.insert({L2.elements[lo].vertex_label, L2.elements[hi].vertex_label});
        CHECK(h1 == h2);
    }
}

TEST_CASE("principal apices match the covector characterisation") {
    oracles::Rng rng(49);
    for (int trial = 0; trial < 25; ++trial) {
        const int d = 2 + static_cast<int>(rng.next() % 2);
        auto V = oracles::random_instance(rng, d, 5, -3, 3, true);
        std::set<Point, PointLess> apices;
        for (const Point& a : principal_apices(V)) apices.insert(a);
        // scan all candidates over axis values and +inf
        std::vector<std::vector<ExtValue>> axis(d);
        for (int i = 0; i < d; ++i) {
            std::set<Rational> vals;
            for (const Point& v : V.points)
                if (v[i].is_finite()) vals.insert(v[i].value());
            for (const Rational& q : vals) axis[i].push_back(ExtValue(q));
            axis[i].push_back(ExtValue::pos_inf());
        }
        std::vector<std::size_t> idx(d, 0);
        while (true) {
            Point p(d);
            for (int i = 0; i < d; ++i) p[i] = axis[i][idx[i]];
            const auto G = covector(V, p);
            // (a) no zero-neighbour of degree one; (b) every finite coordinate
            // has a generator touching exactly that coordinate node
            bool ok = true;
            bool any_zero = false;
            for (int l = 0; l < G.left_size(); ++l) {
                if (!G.edge(l, 0)) continue;
                any_zero = true;
                int deg = 0;
                for (int i = 0; i <= d; ++i) deg += G.edge(l, i);
                if (deg == 1) ok = false;
            }
            ok = ok && any_zero;
            for (int i = 1; i <= d && ok; ++i) {
                if (p[i - 1].is_pos_inf()) continue;
                bool pinned = false;
                for (int j = 0; j < G.n_generators; ++j)
                    if (G.adj[j] == ((1u << i) | 1u)) pinned = true;
                ok = pinned;
            }
            CHECK(ok == (apices.count(p) == 1));
            int pos = d - 1;
            while (pos >= 0 && ++idx[pos] == axis[pos].size()) idx[pos--] = 0;
            if (pos < 0) break;
        }
    }
}
