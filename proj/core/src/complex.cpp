#include "tropmono/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tropmono {

namespace {

// True iff the unique extreme element of `candidates` exists and equals `expect`.
bool unique_extreme_is(const Poset& L, const Bitset& candidates, bool want_max, int expect) {
    int found = -1;
    for (std::size_t x = candidates.find_first(); x != Bitset::npos; x = candidates.find_next(x)) {
        Bitset beyond = (want_max ? L.ups[x] : L.downs[x]) & candidates;
        beyond.reset(x);
        if (!beyond.any()) {
            if (found >= 0) return false;
            found = static_cast<int>(x);
        }
    }
    return found == expect;
}

std::vector<Bitset> antichain_of_maximal(std::vector<Bitset> faces) {
    std::sort(faces.begin(), faces.end(),
              [](const Bitset& a, const Bitset& b) { return a.count() > b.count(); });
    std::vector<Bitset> out;
    for (const Bitset& f : faces) {
        bool covered = false;
        for (const Bitset& g : out)
            if (f.is_subset_of(g)) {
                covered = true;
                break;
            }
        if (!covered) out.push_back(f);
    }
    std::sort(out.begin(), out.end(), [](const Bitset& a, const Bitset& b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a < b;
    });
    return out;
}

}  // namespace

SimplicialComplex make_complex(std::vector<std::string> vertex_names, std::vector<Bitset> faces,
                               std::vector<Point> vertex_points) {
    SimplicialComplex K;
    K.vertex_names = std::move(vertex_names);
    K.vertex_points = std::move(vertex_points);
    K.maximal_faces = antichain_of_maximal(std::move(faces));
    return K;
}

int SimplicialComplex::dimension() const {
    std::size_t top = 0;
    for (const Bitset& f : maximal_faces) top = std::max(top, f.count());
    return static_cast<int>(top) - 1;
}

bool SimplicialComplex::has_face(const Bitset& f) const {
    for (const Bitset& g : maximal_faces)
        if (f.is_subset_of(g)) return true;
    return false;
}

std::vector<Bitset> SimplicialComplex::all_faces() const {
    std::set<Bitset> seen;
    for (const Bitset& f : maximal_faces) {
        // enumerate subsets of f
        std::vector<int> members;
        for (std::size_t i = f.find_first(); i != Bitset::npos; i = f.find_next(i))
            members.push_back(static_cast<int>(i));
        const std::size_t m = members.size();
        if (m > 25) throw BudgetError("TooLarge", "face enumeration on a simplex of size > 25");
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
            Bitset g(n_vertices());
            for (std::size_t i = 0; i < m; ++i)
                if ((mask >> i) & 1u) g.set(members[i]);
            seen.insert(g);
        }
    }
    return {seen.begin(), seen.end()};
}

long HomologyProfile::betti(int k) const {
    auto it = reduced_betti.find(k);
    return it == reduced_betti.end() ? 0 : it->second;
}

bool HomologyProfile::trivial() const {
    for (const auto& [k, b] : reduced_betti)
        if (b != 0) return false;
    return true;
}

bool HomologyProfile::operator==(const HomologyProfile& o) const {
    for (const auto& [k, b] : reduced_betti)
        if (b != o.betti(k)) return false;
    for (const auto& [k, b] : o.reduced_betti)
        if (b != betti(k)) return false;
    return true;
}

std::string HomologyProfile::str() const {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& [k, b] : reduced_betti) {
        if (b == 0) continue;
        if (!first) os << ", ";
        os << "H" << k << "=" << b;
        first = false;
    }
    os << "]";
    return os.str();
}

HomologyProfile reduced_homology(const SimplicialComplex& K, const Field& field) {
    HomologyProfile H;
    if (K.is_void()) return H;

    // faces grouped by cardinality, each with an index
    std::vector<std::map<Bitset, int>> by_card;
    for (const Bitset& f : K.all_faces()) {
        const std::size_t c = f.count();
        if (by_card.size() <= c) by_card.resize(c + 1);
        const int idx = static_cast<int>(by_card[c].size());
        by_card[c].emplace(f, idx);
    }
    const int top_card = static_cast<int>(by_card.size()) - 1;

    // rank of boundary from cardinality c faces to cardinality c-1 faces
    std::vector<long> boundary_rank(top_card + 2, 0);
    for (int c = 1; c <= top_card; ++c) {
        SparseMatrix M;
        M.rows = static_cast<int>(by_card[c - 1].size());
        M.cols = static_cast<int>(by_card[c].size());
        M.columns.resize(M.cols);
        for (const auto& [f, col] : by_card[c]) {
            int sign = 1;
            for (std::size_t i = f.find_first(); i != Bitset::npos; i = f.find_next(i)) {
                Bitset g = f;
                g.reset(i);
                M.columns[col].emplace_back(by_card[c - 1].at(g), sign);
                sign = -sign;
            }
        }
        boundary_rank[c] = matrix_rank(M, field);
    }

    for (int c = 0; c <= top_card; ++c) {
        const long faces = static_cast<long>(by_card[c].size());
        const long upper = c + 1 <= top_card ? boundary_rank[c + 1] : 0;
        H.reduced_betti[c - 1] = faces - boundary_rank[c] - upper;
    }
    return H;
}

SimplicialComplex facet_complex(const GeneratorSet& V) {
    const GeneratorSet W = minimal_generators(V);
    const IncidenceGraph G = incidence_graph(W);
    std::vector<std::string> names;
    std::vector<Point> pts;
    for (int j = 0; j < G.n_generators; ++j) {
        names.push_back(W.label(j));
        pts.push_back(W.points[j]);
    }
    for (int i = 0; i < G.dim; ++i) {
        names.push_back("e" + std::to_string(i + 1));
        pts.push_back(max_unit_vector(G.dim, i));
    }
    std::vector<Bitset> faces;
    for (int r = 0; r < G.right_size(); ++r) {
        Bitset f(G.left_size());
        for (int l : G.facet_members(r)) f.set(l);
        faces.push_back(f);
    }
    SimplicialComplex K = make_complex(std::move(names), std::move(faces), std::move(pts));
    K.n_point_vertices = G.n_generators;
    return K;
}

SimplicialComplex bounded_complex(const SimplicialComplex& K) {
    if (K.n_point_vertices < 0)
        throw Error("NotAFacetComplex", "bounded_complex expects a facet complex");
    const int n = K.n_point_vertices;
    std::vector<std::string> names(K.vertex_names.begin(), K.vertex_names.begin() + n);
    std::vector<Point> pts;
    if (!K.vertex_points.empty())
        pts.assign(K.vertex_points.begin(), K.vertex_points.begin() + n);
    std::vector<Bitset> faces;
    for (const Bitset& f : K.maximal_faces) {
        Bitset g(n);
        for (std::size_t i = f.find_first(); i != Bitset::npos; i = f.find_next(i))
            if (static_cast<int>(i) < n) g.set(i);
        faces.push_back(g);
    }
    SimplicialComplex B = make_complex(std::move(names), std::move(faces), std::move(pts));
    B.n_point_vertices = n;
    return B;
}

SimplicialComplex order_complex(const Poset& P, int bottom, int top) {
    if (bottom < 0 || top < 0 || bottom >= P.size() || top >= P.size() || !P.leq(bottom, top))
        throw Error("MissingExtremes", "order complex needs comparable bottom and top elements");
    std::vector<int> interval;
    for (int i = 0; i < P.size(); ++i)
        if (i != bottom && i != top && P.leq(bottom, i) && P.leq(i, top)) interval.push_back(i);

    std::vector<std::string> names;
    std::vector<Point> pts;
    bool have_points = true;
    for (int id : interval) {
        names.push_back(P.elements[id].name);
        if (P.elements[id].point)
            pts.push_back(*P.elements[id].point);
        else
            have_points = false;
    }
    if (!have_points) pts.clear();

    const Poset I = induced_subposet(P, interval);
    const int m = I.size();
    std::vector<std::vector<int>> up(m);
    std::vector<char> has_lower(m, 0);
    for (const auto& [lo, hi] : I.hasse) {
        up[lo].push_back(hi);
        has_lower[hi] = 1;
    }

    // maximal chains: cover paths from minimal to maximal interval elements
    std::vector<Bitset> chains;
    chains.push_back(Bitset(m));  // the empty chain, for the empty interval
    std::vector<int> stack;
    std::function<void(int)> extend = [&](int x) {
        stack.push_back(x);
        if (up[x].empty()) {
            Bitset f(m);
            for (int v : stack) f.set(v);
            chains.push_back(f);
        } else {
            for (int y : up[x]) extend(y);
        }
        stack.pop_back();
    };
    for (int x = 0; x < m; ++x)
        if (!has_lower[x]) extend(x);
    return make_complex(std::move(names), std::move(chains), std::move(pts));
}

SimplicialComplex crosscut_complex(const Poset& L, std::optional<std::vector<int>> C_opt) {
    const int bottom = L.bottom();
    const int top = L.top();
    if (bottom < 0 || top < 0)
        throw Error("NotACrosscut", "crosscut complexes need a lattice with bottom and top");
    std::vector<int> C = C_opt.value_or(L.atoms());

    // antichain, bottom/top excluded
    for (std::size_t a = 0; a < C.size(); ++a) {
        if (C[a] == bottom || C[a] == top)
            throw Error("NotACrosscut", "crosscut may not contain the extremes");
        for (std::size_t b = 0; b < C.size(); ++b)
            if (a != b && L.leq(C[a], C[b]))
                throw Error("NotACrosscut", "crosscut must be an antichain");
    }
    // every maximal chain (cover path bottom -> top) must meet C
    std::vector<char> in_C(L.size(), 0);
    for (int c : C) in_C[c] = 1;
    std::vector<std::vector<int>> up_covers(L.size());
    for (const auto& [lo, hi] : L.hasse) up_covers[lo].push_back(hi);
    std::vector<char> seen(L.size(), 0);
    std::vector<int> dfs{bottom};
    seen[bottom] = 1;
    while (!dfs.empty()) {
        int x = dfs.back();
        dfs.pop_back();
        if (x == top)
            throw Error("NotACrosscut", "a maximal chain avoids the crosscut");
        for (int y : up_covers[x])
            if (!seen[y] && !in_C[y]) {
                seen[y] = 1;
                dfs.push_back(y);
            }
    }

    const int m = static_cast<int>(C.size());
    if (m > 20) throw BudgetError("TooLarge", "crosscut enumeration needs at most 20 elements");
    std::vector<std::string> names;
    std::vector<Point> pts;
    bool have_points = true;
    for (int id : C) {
        names.push_back(L.elements[id].name);
        if (L.elements[id].point)
            pts.push_back(*L.elements[id].point);
        else
            have_points = false;
    }
    if (!have_points) pts.clear();

    std::vector<Bitset> faces;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        Bitset below(L.size()), above(L.size());
        below.set();
        above.set();
        for (int i = 0; i < m; ++i)
            if ((mask >> i) & 1u) {
                below &= L.downs[C[i]];
                above &= L.ups[C[i]];
            }
        // spanning means meet = bottom and join = top; the meet is the unique
        // maximal common lower bound (L is a lattice), dually for the join
        const bool meet_is_bottom = unique_extreme_is(L, below, /*want_max=*/true, bottom);
        const bool join_is_top = unique_extreme_is(L, above, /*want_max=*/false, top);
        if (!(meet_is_bottom && join_is_top)) {
            Bitset f(m);
            for (int i = 0; i < m; ++i)
                if ((mask >> i) & 1u) f.set(i);
            faces.push_back(f);
        }
    }
    return make_complex(std::move(names), std::move(faces), std::move(pts));
}

SimplicialComplex koszul_complex(const GeneratorSet& V, const Point& p, int base_sector) {
    const GeneratorSet W = minimal_generators(V);
    if (base_sector < 0 || base_sector > W.dim)
        throw Error("InvalidDirection", "base sector must be in 0..d");
    const CovectorGraph G = covector(W, p);
    std::vector<std::string> names;
    for (int i = 1; i <= W.dim; ++i) names.push_back(std::to_string(i));

    std::vector<Bitset> faces;
    for (int j = 0; j < G.n_generators; ++j) {
        if (!G.edge(j, base_sector)) continue;
        Bitset avoid(W.dim);
        for (int i = 1; i <= W.dim; ++i)
            if (!G.edge(j, i)) avoid.set(i - 1);
        faces.push_back(avoid);
    }
    SimplicialComplex K = make_complex(std::move(names), std::move(faces));
    return K;  // void when no generator lies in the base sector of p
}

bool is_syzygy_point(const GeneratorSet& V, const Point& p, const Field& field) {
    return !reduced_homology(koszul_complex(V, p), field).trivial();
}

SimplicialComplex scarf_complex(const GeneratorSet& V) {
    const GeneratorSet W = minimal_generators(V);
    const std::size_t n = W.points.size();
    if (n > 16) throw BudgetError("TooLarge", "Scarf complex enumeration needs at most 16 points");

    std::map<Point, int, PointLess> achievers;
    std::map<Point, std::uint32_t, PointLess> witness;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        Point m = all_neg_inf(W.dim);
        for (std::size_t j = 0; j < n; ++j)
            if ((mask >> j) & 1u) m = componentwise_max(m, W.points[j]);
        achievers[m] += 1;
        witness[m] = mask;
    }
    std::vector<std::string> names;
    std::vector<Point> pts;
    for (std::size_t j = 0; j < n; ++j) {
        names.push_back(W.label(j));
        pts.push_back(W.points[j]);
    }
    std::vector<Bitset> faces;
    faces.push_back(Bitset(n));  // the empty subset always has a unique maximum
    for (const auto& [m, cnt] : achievers) {
        if (cnt != 1) continue;
        Bitset f(n);
        for (std::size_t j = 0; j < n; ++j)
            if ((witness[m] >> j) & 1u) f.set(j);
        faces.push_back(f);
    }
    return make_complex(std::move(names), std::move(faces), std::move(pts));
}

bool sphere_check(const GeneratorSet& V, const Field& field) {
    const HomologyProfile H = reduced_homology(facet_complex(V), field);
    for (const auto& [k, b] : H.reduced_betti) {
        const long want = (k == V.dim - 1) ? 1 : 0;
        if (b != want) return false;
    }
    return H.betti(V.dim - 1) == 1;
}

}  // namespace tropmono
