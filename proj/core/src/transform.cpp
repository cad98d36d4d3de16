#include "tropmono/transform.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tropmono/facets.hpp"

namespace tropmono {

OrderPattern order_pattern(const GeneratorSet& V) {
    OrderPattern P;
    P.axis_blocks.resize(V.dim);
    P.neg_inf_first.assign(V.dim, 0);
    for (int i = 0; i < V.dim; ++i) {
        std::vector<int> inf_block;
        std::map<Rational, std::vector<int>> finite;
        for (std::size_t j = 0; j < V.points.size(); ++j) {
            const ExtValue& x = V.points[j][i];
            if (x.is_neg_inf())
                inf_block.push_back(static_cast<int>(j));
            else
                finite[x.value()].push_back(static_cast<int>(j));
        }
        if (!inf_block.empty()) {
            P.axis_blocks[i].push_back(inf_block);
            P.neg_inf_first[i] = 1;
        }
        for (auto& [value, block] : finite) P.axis_blocks[i].push_back(block);
    }
    return P;
}

bool is_valid_deformation(const GeneratorSet& V, const Deformation& eps) {
    const std::size_t n = V.points.size();
    if (eps.size() != n) throw_dim_mismatch(n, eps.size());
    for (const auto& row : eps)
        if (static_cast<int>(row.size()) != V.dim)
            throw_dim_mismatch(static_cast<std::size_t>(V.dim), row.size());
    for (int i = 0; i < V.dim; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const ExtValue &a = V.points[j][i], &b = V.points[k][i];
                if (!a.is_finite() || !b.is_finite()) continue;
                if (a < b && !(a.value() + eps[j][i] < b.value() + eps[k][i])) return false;
            }
    return true;
}

GeneratorSet apply_deformation(const GeneratorSet& V, const Deformation& eps) {
    GeneratorSet out = V;
    for (std::size_t j = 0; j < V.points.size(); ++j)
        for (int i = 0; i < V.dim; ++i)
            if (out.points[j][i].is_finite())
                out.points[j][i] = ExtValue(out.points[j][i].value() + eps[j][i]);
    return out;
}

namespace {

// splitmix64; fixed algorithm keeps seeded runs identical across platforms
struct Rng {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
};

}  // namespace

Generification strong_generification(const GeneratorSet& V, std::uint64_t seed) {
    const std::size_t n = V.points.size();
    const int d = V.dim;
    Generification out;
    out.eps.assign(n, std::vector<Rational>(d, Rational(0)));
    Rng rng{seed ^ 0x5bf03635u};

    for (int i = 0; i < d; ++i) {
        std::map<Rational, std::vector<int>> blocks;
        for (std::size_t j = 0; j < n; ++j)
            if (V.points[j][i].is_finite()) blocks[V.points[j][i].value()].push_back(j);
        if (blocks.empty()) continue;
        // smallest gap between consecutive finite values bounds the offsets
        Rational gap(1);
        bool have_gap = false;
        Rational prev;
        bool first = true;
        for (const auto& [value, block] : blocks) {
            if (!first) {
                Rational g = value - prev;
                if (!have_gap || g < gap) gap = g;
                have_gap = true;
            }
            prev = value;
            first = false;
        }
        const Rational delta = gap / Rational(static_cast<long>(n) * d + 1);
        for (auto& [value, block] : blocks) {
            if (block.size() < 2) continue;
            std::vector<int> order = block;
            for (std::size_t a = order.size(); a > 1; --a)
                std::swap(order[a - 1], order[rng.below(a)]);
            for (std::size_t k = 0; k < order.size(); ++k)
                out.eps[order[k]][i] = Rational(static_cast<long>(k)) * delta;
        }
    }
    out.deformed = apply_deformation(V, out.eps);
    return out;
}

PatternType pattern_type(const Point& apex, const GeneratorSet& input) {
    const GeneratorSet V = minimal_generators(input);
    const std::vector<Point> apices = principal_apices(V);
    if (std::find(apices.begin(), apices.end(), apex) == apices.end())
        throw Error("NotAnApex", "point is not a principal apex of the polyhedron");
    PatternType P;
    P.dim = V.dim;
    P.n_generators = static_cast<int>(V.points.size());
    for (int i = 0; i < V.dim; ++i) {
        if (apex[i].is_pos_inf()) continue;  // isolated axis node
        for (int j = 0; j < P.n_generators; ++j) {
            if (!(V.points[j][i] == apex[i])) continue;
            bool below = true;
            for (int k = 0; k < V.dim && below; ++k)
                if (k != i && !(V.points[j][k] < apex[k])) below = false;
            if (below) P.edges.emplace_back(i, j);
        }
    }
    std::sort(P.edges.begin(), P.edges.end());
    return P;
}

TropicalPolyhedron ith_monomial_polyhedron(const TropicalPolyhedron& P, int i) {
    if (i < 0 || i > P.dim) throw Error("InvalidDirection", "direction must be in 0..d");
    TropicalPolyhedron Q = P;
    std::set<Point, PointLess> rays(Q.rays.begin(), Q.rays.end());
    if (i == 0) {
        for (int k = 0; k < P.dim; ++k) rays.insert(max_unit_vector(P.dim, k));
    } else {
        for (int k = 0; k < P.dim; ++k)
            if (k != i - 1) rays.insert(max_unit_vector(P.dim, k));
        Point origin = all_neg_inf(P.dim);
        if (std::find(Q.points.begin(), Q.points.end(), origin) == Q.points.end())
            Q.points.push_back(origin);
    }
    Q.rays.assign(rays.begin(), rays.end());
    return Q;
}

namespace {

bool all_neg(const Point& p) {
    for (const ExtValue& x : p)
        if (!x.is_neg_inf()) return false;
    return true;
}

// Homogenised generators: points get leading 0, rays leading -inf.
std::vector<Point> homogenize(const TropicalPolyhedron& P) {
    std::vector<Point> U;
    for (const Point& v : P.points) {
        Point u(P.dim + 1);
        u[0] = ExtValue(0);
        for (int k = 0; k < P.dim; ++k) u[k + 1] = v[k];
        U.push_back(std::move(u));
    }
    for (const Point& w : P.rays) {
        if (all_neg(w)) continue;
        Point u(P.dim + 1);
        u[0] = ExtValue::neg_inf();
        for (int k = 0; k < P.dim; ++k) u[k + 1] = w[k];
        U.push_back(std::move(u));
    }
    return U;
}

// z in the i-th homogeneous sector of u: z_i + u_k <= z_k + u_i for all k.
bool in_homog_sector(const Point& u, int i, const Point& z) {
    const int m = static_cast<int>(u.size());
    for (int k = 0; k < m; ++k)
        if (!(trop_mul(z[i], u[k]) <= trop_mul(z[k], u[i]))) return false;
    return true;
}

// Cone membership by residuation: the canonical combination reaches z.
bool cone_member(const std::vector<Point>& U, const Point& z) {
    const int m = static_cast<int>(z.size());
    Point reached = all_neg_inf(m);
    for (const Point& u : U) {
        ExtValue lambda = ExtValue::pos_inf();
        bool support = false;
        for (int k = 0; k < m; ++k) {
            if (u[k].is_neg_inf()) continue;
            support = true;
            ExtValue diff = z[k].is_neg_inf() ? ExtValue::neg_inf()
                                              : ExtValue(z[k].value() - u[k].value());
            if (diff < lambda) lambda = diff;
        }
        if (!support || lambda.is_pos_inf()) continue;
        for (int k = 0; k < m; ++k) reached[k] = std::max(reached[k], trop_mul(lambda, u[k]));
    }
    return reached == z;
}

std::vector<Point> minimal_cone_generators(std::vector<Point> U) {
    // normalize each generator so its maximum entry is 0; parallel vectors
    // collapse and the one-at-a-time extremality test becomes sound
    for (Point& u : U) {
        ExtValue top = ExtValue::neg_inf();
        for (const ExtValue& x : u) top = std::max(top, x);
        if (!top.is_finite()) continue;
        for (ExtValue& x : u)
            if (x.is_finite()) x = ExtValue(x.value() - top.value());
    }
    std::sort(U.begin(), U.end(), PointLess{});
    U.erase(std::unique(U.begin(), U.end()), U.end());
    std::vector<Point> out;
    for (std::size_t j = 0; j < U.size(); ++j) {
        std::vector<Point> rest;
        for (std::size_t k = 0; k < U.size(); ++k)
            if (k != j) rest.push_back(U[k]);
        if (!cone_member(rest, U[j])) out.push_back(U[j]);
    }
    return out;
}

Point homogenize_point(const Point& p) {
    Point z(p.size() + 1);
    z[0] = ExtValue(0);
    for (std::size_t k = 0; k < p.size(); ++k) z[k + 1] = p[k];
    return z;
}

}  // namespace

bool membership(const TropicalPolyhedron& P, const Point& p) {
    if (static_cast<int>(p.size()) != P.dim)
        throw_dim_mismatch(static_cast<std::size_t>(P.dim), p.size());
    for (const ExtValue& x : p)
        if (x.is_pos_inf()) throw Error("InvalidPoint", "membership expects points without +inf");
    const std::vector<Point> U = minimal_cone_generators(homogenize(P));
    const Point z = homogenize_point(p);
    for (int i = 0; i <= P.dim; ++i) {
        bool hit = false;
        for (const Point& u : U)
            if (in_homog_sector(u, i, z)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

bool membership_residuation(const TropicalPolyhedron& P, const Point& p) {
    return cone_member(homogenize(P), homogenize_point(p));
}

bool decomposition_check(const TropicalPolyhedron& P, long padding) {
    // homogenised generator lists of each i-th monomial polyhedron
    std::vector<std::vector<Point>> parts;
    for (int i = 0; i <= P.dim; ++i) parts.push_back(homogenize(ith_monomial_polyhedron(P, i)));
    auto in_all_parts = [&](const Point& p) {
        const Point z = homogenize_point(p);
        for (int i = 0; i <= P.dim; ++i) {
            bool hit = false;
            for (const Point& u : parts[i])
                if (in_homog_sector(u, i, z)) {
                    hit = true;
                    break;
                }
            if (!hit) return false;
        }
        return true;
    };

    bool any = false;
    Rational lo, hi;
    for (const std::vector<Point>* group : {&P.points, &P.rays})
        for (const Point& v : *group)
            for (const ExtValue& x : v) {
                if (!x.is_finite()) continue;
                if (!any || x.value() < lo) lo = x.value();
                if (!any || x.value() > hi) hi = x.value();
                any = true;
            }
    if (!any) return true;
    mpz_class fl, cl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
    mpz_cdiv_q(cl.get_mpz_t(), hi.get_num().get_mpz_t(), hi.get_den().get_mpz_t());
    const long low = mpz_get_si(fl.get_mpz_t()) - padding;
    const long high = mpz_get_si(cl.get_mpz_t()) + padding;
    double cells = 1;
    for (int k = 0; k < P.dim; ++k) cells *= static_cast<double>(high - low + 1);
    if (cells > 250000)
        throw BudgetError("GridBudgetExceeded", "decomposition sample grid is too large");

    std::vector<Point> samples = P.points;
    std::vector<long> idx(P.dim, low);
    while (true) {
        Point p(P.dim);
        for (int k = 0; k < P.dim; ++k) p[k] = ExtValue(idx[k]);
        samples.push_back(p);
        int pos = P.dim - 1;
        while (pos >= 0 && ++idx[pos] > high) idx[pos--] = low;
        if (pos < 0) break;
    }
    for (const Point& p : samples)
        if (membership(P, p) != in_all_parts(p)) return false;
    return true;
}

}  // namespace tropmono
