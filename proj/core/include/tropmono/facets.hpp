#pragma once

#include <string>
#include <vector>

#include "tropmono/point.hpp"

namespace tropmono {

enum class FacetKind { Principal, Boundary, Far };

// Facet-apices of a monomial tropical polyhedron.  Principal apices are
// explicit points in (Q u {+inf})^d; a boundary apex is stored as its
// direction i (the point with -inf at i and +inf elsewhere); the far apex is
// a sentinel without coordinates.
struct ApexSet {
    int dim = 0;
    std::vector<Point> principal;  // lexicographically sorted
    std::vector<int> boundary;     // 0-based directions, sorted

    int size() const { return static_cast<int>(principal.size() + boundary.size()) + 1; }
    FacetKind kind(int k) const;
    // Materialized coordinates; throws for the far apex.
    Point facet_point(int k) const;
    std::string facet_label(int k) const;  // a1..am, B1..Bd, "far"
    int far_index() const { return size() - 1; }
};

// All principal apices per the two-condition characterisation, found by
// scanning per-axis candidate values.
// TODO: for larger instances, replace the scan with an incremental
// local-upper-bound decomposition as used in multicriteria optimisation.
std::vector<Point> principal_apices(const GeneratorSet& V);

ApexSet apex_set(const GeneratorSet& V);

// Incidence between points of the hypercube: x <= q with equality somewhere.
bool incident_point(const Point& x, const Point& q);
// A ray e^(i) is incident with q iff q_i = +inf (and always with the far apex).
bool incident_ray(int ray, const Point& q);

// Bipartite vertex-facet incidences.  Left nodes: generators 0..n-1 then rays
// n..n+d-1.  Right nodes: apices in ApexSet order (principal, boundary, far).
struct IncidenceGraph {
    int dim = 0;
    int n_generators = 0;
    ApexSet apices;
    std::vector<std::vector<char>> edges;  // [left][right]

    int left_size() const { return n_generators + dim; }
    int right_size() const { return apices.size(); }
    bool edge(int l, int r) const { return edges[l][r] != 0; }
    std::vector<int> facet_members(int r) const;
};

IncidenceGraph incidence_graph(const GeneratorSet& V);

// Generators of the complementary min-tropical polyhedron, represented as the
// max-polyhedron on the negated principal apices.  Applying this twice
// recovers the minimal generators.
GeneratorSet complementary_polyhedron(const GeneratorSet& V);

// Vertex characterisation via facet-apices; must agree with minimal_generators.
bool check_vertex_char(const GeneratorSet& V, const Point& v);

// Indices (generators then rays) minimising phi_c(p) = max_i (p_i - c_i);
// a ray e^(i) counts as a minimiser iff c_i = +inf.  Entries c_i = -inf
// (materialized boundary apices) are handled as values below all finite data.
std::vector<int> linear_functional_minimizers(const GeneratorSet& V, const Point& c);

}  // namespace tropmono
