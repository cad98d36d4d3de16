#include "tropmono/ideal.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace tropmono {

std::string MonomialIdeal::monomial_str(const Exponent& u) const {
    std::string s;
    for (int i = 0; i < nvars; ++i) {
        if (u[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i + 1);
        if (u[i] != 1) s += "^" + std::to_string(u[i]);
    }
    return s.empty() ? "1" : s;
}

std::string MonomialIdeal::str() const {
    std::string s;
    for (const Exponent& u : generators) {
        if (!s.empty()) s += ", ";
        s += monomial_str(u);
    }
    return s;
}

MonomialIdeal make_ideal(int nvars, std::vector<Exponent> generators) {
    if (nvars < 1) throw Error("EmptyDimension", "ideals need at least one variable");
    if (generators.empty()) throw Error("InvalidIdeal", "the zero ideal is not supported");
    for (const Exponent& u : generators) {
        if (static_cast<int>(u.size()) != nvars)
            throw_dim_mismatch(static_cast<std::size_t>(nvars), u.size());
        bool positive = false;
        for (long e : u) {
            if (e < 0) throw Error("InvalidIdeal", "exponents must be nonnegative");
            if (e > 0) positive = true;
        }
        if (!positive) throw Error("InvalidIdeal", "the unit ideal is not supported");
    }
    MonomialIdeal I;
    I.nvars = nvars;
    I.generators = std::move(generators);
    return I;
}

bool divides(const Exponent& a, const Exponent& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponent lcm_exponent(const Exponent& a, const Exponent& b) {
    Exponent m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
    return m;
}

MonomialIdeal minimize(const MonomialIdeal& I) {
    std::vector<Exponent> keep;
    for (std::size_t j = 0; j < I.generators.size(); ++j) {
        bool redundant = false;
        for (std::size_t k = 0; k < I.generators.size() && !redundant; ++k) {
            if (k == j) continue;
            if (I.generators[k] == I.generators[j]) {
                if (k < j) redundant = true;
            } else if (divides(I.generators[k], I.generators[j])) {
                redundant = true;
            }
        }
        if (!redundant) keep.push_back(I.generators[j]);
    }
    return make_ideal(I.nvars, std::move(keep));
}

Point cech_point(const Exponent& u) {
    Point p(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        p[i] = u[i] == 0 ? ExtValue::neg_inf() : ExtValue(u[i]);
    return p;
}

Exponent exponent_of(const Point& p) {
    Exponent u(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i].is_neg_inf()) {
            u[i] = 0;
        } else if (p[i].is_integer()) {
            u[i] = mpz_get_si(p[i].value().get_num().get_mpz_t());
        } else {
            throw Error("NotIntegral", "multidegree coordinates must be integers or -inf");
        }
    }
    return u;
}

GeneratorSet polyhedron_from_ideal(const MonomialIdeal& input) {
    const MonomialIdeal I = minimize(input);
    std::vector<Point> pts;
    std::vector<std::string> labels;
    for (const Exponent& u : I.generators) {
        pts.push_back(cech_point(u));
        labels.push_back(I.monomial_str(u));
    }
    return make_generator_set(I.nvars, std::move(pts), std::move(labels));
}

MonomialIdeal ideal_from_polyhedron(const GeneratorSet& V) {
    const GeneratorSet W = minimal_generators(V);
    std::vector<Exponent> gens;
    for (const Point& p : W.points) {
        Exponent u(W.dim);
        for (int i = 0; i < W.dim; ++i) {
            if (p[i].is_neg_inf()) {
                u[i] = 0;
                continue;
            }
            if (!p[i].is_integer())
                throw Error("NotIntegral",
                            "generator coordinates must be integers; note that an ideal and its "
                            "product with x1*...*xd have isomorphic resolutions, so shifting by "
                            "(1,...,1) is harmless");
            const long e = mpz_get_si(p[i].value().get_num().get_mpz_t());
            if (e <= 0)
                throw Error("NotPositive",
                            "finite generator coordinates must be positive; shift the polyhedron "
                            "by (1,...,1), which multiplies the ideal by x1*...*xd and keeps the "
                            "resolution");
            u[i] = e;
        }
        gens.push_back(std::move(u));
    }
    return make_ideal(W.dim, std::move(gens));
}

std::vector<Exponent> irreducible_decomposition(const MonomialIdeal& I) {
    const GeneratorSet V = polyhedron_from_ideal(I);
    std::vector<Exponent> out;
    for (const Point& a : principal_apices(V)) {
        Exponent c(I.nvars);
        for (int i = 0; i < I.nvars; ++i) {
            if (a[i].is_pos_inf()) {
                c[i] = 0;
            } else {
                c[i] = mpz_get_si(a[i].value().get_num().get_mpz_t());
            }
        }
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

MonomialIdeal alexander_dual(const MonomialIdeal& input, const Exponent& c) {
    const MonomialIdeal I = minimize(input);
    if (static_cast<int>(c.size()) != I.nvars)
        throw_dim_mismatch(static_cast<std::size_t>(I.nvars), c.size());
    for (const Exponent& a : I.generators)
        for (int i = 0; i < I.nvars; ++i)
            if (!(a[i] < c[i] || (a[i] == 0 && c[i] == 0)))
                throw Error("NotStrictlyDividing",
                            "generator " + I.monomial_str(a) + " does not strictly divide x^c at "
                            "coordinate " + std::to_string(i + 1));
    std::vector<Exponent> dual;
    for (const Exponent& a : irreducible_decomposition(I)) {
        Exponent g(I.nvars);
        for (int i = 0; i < I.nvars; ++i) g[i] = a[i] >= 1 ? c[i] - a[i] : 0;
        dual.push_back(std::move(g));
    }
    return minimize(make_ideal(I.nvars, std::move(dual)));
}

Poset lcm_lattice(const MonomialIdeal& input) {
    const MonomialIdeal I = minimize(input);
    const std::size_t n = I.generators.size();
    if (n > 16) throw BudgetError("TooLarge", "LCM lattices need at most 16 generators");

    std::set<Exponent> pts;
    std::function<void(std::size_t, Exponent, bool)> rec = [&](std::size_t j, Exponent cur,
                                                               bool nonempty) {
        if (j == n) {
            if (nonempty) pts.insert(cur);
            return;
        }
        rec(j + 1, cur, nonempty);
        rec(j + 1, lcm_exponent(cur, I.generators[j]), true);
    };
    rec(0, Exponent(I.nvars, 0), false);

    std::vector<PosetElement> elements;
    {
        PosetElement bottom;
        bottom.point = cech_point(Exponent(I.nvars, 0));
        bottom.name = "1";
        elements.push_back(std::move(bottom));
    }
    for (const Exponent& u : pts) {
        PosetElement e;
        e.point = cech_point(u);
        for (std::size_t j = 0; j < n; ++j)
            if (divides(I.generators[j], u)) e.vertex_label.push_back(static_cast<int>(j));
        e.name = I.monomial_str(u);
        elements.push_back(std::move(e));
    }
    // divisibility is the componentwise order of the Cech images
    Poset L = build_point_poset(std::move(elements));
    L.n_generators = static_cast<int>(n);
    return L;
}

Poset lcm_lattice_of_polyhedron(const GeneratorSet& V) {
    Poset Lmax = max_lattice(V);
    std::vector<int> ids;
    for (int i = 0; i < Lmax.size(); ++i) {
        bool finite = true;
        for (const ExtValue& x : *Lmax.elements[i].point)
            if (x.is_pos_inf()) finite = false;
        if (finite) ids.push_back(i);
    }
    Poset L = induced_subposet(Lmax, ids);
    L.n_generators = Lmax.n_generators;
    return L;
}

long BettiTable::at(int i, const Exponent& u) const {
    auto it = entries.find({i, u});
    return it == entries.end() ? 0 : it->second;
}

std::string BettiTable::str() const {
    std::ostringstream os;
    for (const auto& [key, value] : entries) {
        os << "beta_" << key.first << ",(";
        for (std::size_t i = 0; i < key.second.size(); ++i)
            os << (i ? "," : "") << key.second[i];
        os << ") = " << value << "\n";
    }
    return os.str();
}

namespace {

void add_profile(BettiTable& T, const Exponent& degree, const HomologyProfile& H) {
    for (const auto& [k, b] : H.reduced_betti)
        if (b != 0) T.entries[{k + 2, degree}] = b;
}

Exponent top_degree(const MonomialIdeal& I) {
    Exponent top(I.nvars, 0);
    for (const Exponent& u : I.generators) top = lcm_exponent(top, u);
    return top;
}

}  // namespace

BettiTable betti_numbers(const MonomialIdeal& input, BettiMethod method, const Field& field) {
    const MonomialIdeal I = minimize(input);
    BettiTable T;
    T.nvars = I.nvars;
    T.field = field;

    if (method == BettiMethod::FacetCrosscutTop) {
        // Top column: homology of the bounded facet complex restricted to the
        // faces whose lcm label is strictly below the top multidegree.
        const GeneratorSet V = polyhedron_from_ideal(I);
        const SimplicialComplex B = bounded_complex(facet_complex(V));
        const Point top = cech_point(top_degree(I));
        std::vector<Bitset> faces;
        for (const Bitset& f : B.all_faces()) {
            Point m = all_neg_inf(V.dim);
            for (std::size_t j = f.find_first(); j != Bitset::npos; j = f.find_next(j))
                m = componentwise_max(m, B.vertex_points[j]);
            if (!(m == top)) faces.push_back(f);
        }
        SimplicialComplex restricted =
            make_complex(B.vertex_names, std::move(faces), B.vertex_points);
        add_profile(T, top_degree(I), reduced_homology(restricted, field));
        return T;
    }

    const Poset L = lcm_lattice(I);
    const int bottom = L.bottom();
    if (method == BettiMethod::LcmInterval) {
        for (int id = 0; id < L.size(); ++id) {
            if (id == bottom) continue;
            const HomologyProfile H = reduced_homology(order_complex(L, bottom, id), field);
            add_profile(T, exponent_of(*L.elements[id].point), H);
        }
        return T;
    }

    // Koszul complexes at every lcm point of the associated polyhedron
    const GeneratorSet V = polyhedron_from_ideal(I);
    for (int id = 0; id < L.size(); ++id) {
        if (id == bottom) continue;
        const Point p = *L.elements[id].point;
        const HomologyProfile H = reduced_homology(koszul_complex(V, p), field);
        add_profile(T, exponent_of(p), H);
    }
    return T;
}

Poset betti_poset(const MonomialIdeal& I, const Field& field) {
    const Poset L = lcm_lattice(minimize(I));
    const int bottom = L.bottom();
    std::vector<int> ids;
    for (int id = 0; id < L.size(); ++id) {
        if (id == bottom) continue;
        if (!reduced_homology(order_complex(L, bottom, id), field).trivial()) ids.push_back(id);
    }
    Poset B = induced_subposet(L, ids);
    B.n_generators = L.n_generators;
    return B;
}

Poset betti_poset(const GeneratorSet& V, const Field& field) {
    const Poset L = lcm_lattice_of_polyhedron(V);
    int bottom = L.bottom();
    std::vector<int> ids;
    for (int id = 0; id < L.size(); ++id) {
        if (id == bottom) continue;
        if (!reduced_homology(order_complex(L, bottom, id), field).trivial()) ids.push_back(id);
    }
    Poset B = induced_subposet(L, ids);
    B.n_generators = L.n_generators;
    return B;
}

namespace {

bool strictly_divides_tropical(const Point& a, const Point& c) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] < c[i] || (a[i].is_neg_inf() && c[i].is_neg_inf()))) return false;
    return true;
}

bool tropical_minor_singular(const std::vector<Point>& cols, const std::vector<int>& rows,
                             const std::vector<int>& col_ids) {
    const int k = static_cast<int>(rows.size());
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    ExtValue best = ExtValue::neg_inf();
    int attained = 0;
    do {
        ExtValue sum(0);
        bool neg = false;
        for (int i = 0; i < k && !neg; ++i) {
            const ExtValue& entry = cols[col_ids[perm[i]]][rows[i]];
            if (entry.is_neg_inf())
                neg = true;
            else
                sum = ExtValue(sum.value() + entry.value());
        }
        if (neg) continue;
        if (best < sum) {
            best = sum;
            attained = 1;
        } else if (best == sum) {
            ++attained;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (best.is_neg_inf()) return true;  // tropically singular: permanent is -inf
    return attained >= 2;
}

}  // namespace

bool genericity(const GeneratorSet& input, Genericity kind) {
    const GeneratorSet V = minimal_generators(input);
    const int d = V.dim;
    const int n = static_cast<int>(V.points.size());

    if (kind == Genericity::StronglyGeneric) {
        for (int i = 0; i < d; ++i)
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if (V.points[a][i].is_finite() && V.points[a][i] == V.points[b][i])
                        return false;
        return true;
    }
    if (kind == Genericity::Generic) {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                bool shared = false;
                for (int i = 0; i < d; ++i)
                    if (V.points[a][i].is_finite() && V.points[a][i] == V.points[b][i])
                        shared = true;
                if (!shared) continue;
                const Point m = componentwise_max(V.points[a], V.points[b]);
                bool witness = false;
                for (int c = 0; c < n && !witness; ++c) {
                    if (c == a || c == b) continue;
                    if (strictly_divides_tropical(V.points[c], m)) witness = true;
                }
                if (!witness) return false;
            }
        return true;
    }
    // TropicallyGeneric: no singular square minor of the d x n matrix
    const int kmax = std::min(d, n);
    for (int k = 1; k <= kmax; ++k) {
        std::vector<int> rows(k), cols(k);
        std::function<bool(int, int)> pick_rows = [&](int pos, int from) -> bool {
            if (pos == k) {
                std::function<bool(int, int)> pick_cols = [&](int cpos, int cfrom) -> bool {
                    if (cpos == k)
                        return tropical_minor_singular(V.points, rows, cols);
                    for (int c = cfrom; c < n; ++c) {
                        cols[cpos] = c;
                        if (pick_cols(cpos + 1, c + 1)) return true;
                    }
                    return false;
                };
                return pick_cols(0, 0);
            }
            for (int r = from; r < d; ++r) {
                rows[pos] = r;
                if (pick_rows(pos + 1, r + 1)) return true;
            }
            return false;
        };
        if (pick_rows(0, 0)) return false;
    }
    return true;
}

bool genericity(const MonomialIdeal& I, Genericity kind) {
    return genericity(polyhedron_from_ideal(I), kind);
}

MonomialIdeal parse_ideal_text(const std::string& text) {
    std::vector<std::string> terms;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            terms.push_back(cur);
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) terms.push_back(cur);
    if (terms.empty()) throw Error("ParseError", "no monomials given");

    int nvars = 0;
    std::vector<std::map<int, long>> parsed;
    for (const std::string& term : terms) {
        std::map<int, long> expo;
        std::size_t pos = 0;
        while (pos < term.size()) {
            if (term[pos] == '*') {
                ++pos;
                continue;
            }
            if (term[pos] != 'x')
                throw Error("ParseError", "expected a variable like x2 in '" + term + "'");
            ++pos;
            std::size_t start = pos;
            while (pos < term.size() && isdigit(static_cast<unsigned char>(term[pos]))) ++pos;
            if (start == pos) throw Error("ParseError", "missing variable index in '" + term + "'");
            const int var = std::stoi(term.substr(start, pos - start));
            long e = 1;
            if (pos < term.size() && term[pos] == '^') {
                ++pos;
                start = pos;
                while (pos < term.size() && isdigit(static_cast<unsigned char>(term[pos]))) ++pos;
                if (start == pos) throw Error("ParseError", "missing exponent in '" + term + "'");
                e = std::stol(term.substr(start, pos - start));
            }
            if (var < 1) throw Error("ParseError", "variable indices start at x1");
            expo[var - 1] += e;
            nvars = std::max(nvars, var);
        }
        if (expo.empty()) throw Error("ParseError", "empty monomial in ideal text");
        parsed.push_back(std::move(expo));
    }
    std::vector<Exponent> gens;
    for (const auto& expo : parsed) {
        Exponent u(nvars, 0);
        for (const auto& [v, e] : expo) u[v] = e;
        gens.push_back(std::move(u));
    }
    return make_ideal(nvars, std::move(gens));
}

}  // namespace tropmono
