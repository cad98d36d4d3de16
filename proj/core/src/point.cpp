#include "tropmono/point.hpp"

#include <algorithm>
#include <sstream>

namespace tropmono {

bool leq(const Point& a, const Point& b) {
    if (a.size() != b.size()) throw_dim_mismatch(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] <= b[i])) return false;
    return true;
}

bool strictly_less(const Point& a, const Point& b) {
    if (a.size() != b.size()) throw_dim_mismatch(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] < b[i])) return false;
    return true;
}

bool operator_lex_less(const Point& a, const Point& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return false;
}

Point componentwise_max(const Point& a, const Point& b) {
    if (a.size() != b.size()) throw_dim_mismatch(a.size(), b.size());
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Point componentwise_min(const Point& a, const Point& b) {
    if (a.size() != b.size()) throw_dim_mismatch(a.size(), b.size());
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
    return r;
}

Point negate(const Point& a) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = negate(a[i]);
    return r;
}

Point all_neg_inf(int dim) { return Point(dim, ExtValue::neg_inf()); }
Point all_pos_inf(int dim) { return Point(dim, ExtValue::pos_inf()); }

Point max_unit_vector(int dim, int i) {
    Point p = all_neg_inf(dim);
    p[i] = ExtValue(0);
    return p;
}

Point modified_max_unit_vector(int dim, int i) {
    Point p = all_neg_inf(dim);
    p[i] = ExtValue::pos_inf();
    return p;
}

std::string point_str(const Point& p) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) os << ",";
        os << p[i];
    }
    os << ")";
    return os.str();
}

std::string GeneratorSet::label(std::size_t j) const {
    if (j < labels.size() && !labels[j].empty()) return labels[j];
    return "v" + std::to_string(j + 1);
}

void GeneratorSet::validate() const {
    if (dim < 1) throw Error("EmptyDimension", "generator sets need dimension >= 1");
    for (const Point& p : points) {
        if (static_cast<int>(p.size()) != dim)
            throw_dim_mismatch(static_cast<std::size_t>(dim), p.size());
        bool finite = false;
        for (const ExtValue& x : p) {
            if (x.is_pos_inf())
                throw Error("InvalidGenerator", "generators cannot have +inf coordinates");
            if (!x.is_neg_inf()) finite = true;
        }
        if (!finite)
            throw Error("InvalidGenerator", "generators need at least one finite coordinate");
    }
}

GeneratorSet make_generator_set(int dim, std::vector<Point> points,
                                std::vector<std::string> labels) {
    GeneratorSet V;
    V.dim = dim;
    V.points = std::move(points);
    V.labels = std::move(labels);
    V.validate();
    return V;
}

GeneratorSet minimal_generators(const GeneratorSet& V) {
    V.validate();
    if (V.points.empty()) throw Error("EmptyGenerators", "no generators given");
    GeneratorSet out;
    out.dim = V.dim;
    for (std::size_t j = 0; j < V.points.size(); ++j) {
        bool keep = true;
        for (std::size_t k = 0; k < V.points.size() && keep; ++k) {
            if (k == j) continue;
            if (V.points[k] == V.points[j]) {
                if (k < j) keep = false;  // duplicate, first one wins
            } else if (leq(V.points[k], V.points[j])) {
                keep = false;
            }
        }
        if (keep) {
            out.points.push_back(V.points[j]);
            out.labels.push_back(V.label(j));
        }
    }
    return out;
}

bool contains(const GeneratorSet& V, const Point& p) {
    if (static_cast<int>(p.size()) != V.dim)
        throw_dim_mismatch(static_cast<std::size_t>(V.dim), p.size());
    for (const ExtValue& x : p)
        if (x.is_pos_inf()) throw Error("InvalidPoint", "contains() expects a point without +inf");
    for (const Point& v : V.points)
        if (leq(v, p)) return true;
    return false;
}

}  // namespace tropmono
