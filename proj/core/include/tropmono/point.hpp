#pragma once

#include <string>
#include <vector>

#include "tropmono/rational.hpp"

namespace tropmono {

using Point = std::vector<ExtValue>;

bool leq(const Point& a, const Point& b);          // componentwise <=
bool strictly_less(const Point& a, const Point& b);  // componentwise <
bool operator_lex_less(const Point& a, const Point& b);
Point componentwise_max(const Point& a, const Point& b);
Point componentwise_min(const Point& a, const Point& b);
Point negate(const Point& a);
Point all_neg_inf(int dim);
Point all_pos_inf(int dim);

// The max-tropical unit vector e^(i): 0 at position i, -inf elsewhere.
Point max_unit_vector(int dim, int i);
// The modified max-tropical unit vector: +inf at position i, -inf elsewhere.
Point modified_max_unit_vector(int dim, int i);

std::string point_str(const Point& p);

struct PointLess {
    bool operator()(const Point& a, const Point& b) const { return operator_lex_less(a, b); }
};

// A generator set of dimension d.  The rays e^(1..d) are implicit; `points`
// are the polytope generators, entries in {-inf} u Q with at least one finite
// coordinate.  Kept unminimized; minimal_generators() extracts the antichain.
struct GeneratorSet {
    int dim = 0;
    std::vector<Point> points;
    std::vector<std::string> labels;  // parallel to points; defaulted when empty

    std::size_t size() const { return points.size(); }
    std::string label(std::size_t j) const;
    void validate() const;
};

GeneratorSet make_generator_set(int dim, std::vector<Point> points,
                                std::vector<std::string> labels = {});

// Domination antichain: v survives iff no other generator w has w <= v.
// Duplicate points collapse to their first occurrence.  Labels follow.
GeneratorSet minimal_generators(const GeneratorSet& V);

// Membership in the monomial tropical polyhedron of V: some generator below p.
// p must have no +inf entry.
bool contains(const GeneratorSet& V, const Point& p);

// A general tropical polyhedron given by points and rays (entries in {-inf} u Q).
struct TropicalPolyhedron {
    int dim = 0;
    std::vector<Point> points;
    std::vector<Point> rays;
};

}  // namespace tropmono
