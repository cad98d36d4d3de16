#pragma once

#include <cstdint>
#include <vector>

#include "tropmono/point.hpp"

namespace tropmono {

// Bipartite graph on (generators + rays) x {0,1,...,d} recording sector
// membership of a fixed point.  Left node j < n is generator j; left node
// n + i is the ray e^(i+1).  Right nodes are coordinates 0..d packed into a
// bitmask (bit i = right node i).
struct CovectorGraph {
    int dim = 0;
    int n_generators = 0;
    std::vector<std::uint32_t> adj;  // size n_generators + dim

    int left_size() const { return n_generators + dim; }
    bool edge(int left, int right) const { return (adj[left] >> right) & 1u; }
    bool is_ray(int left) const { return left >= n_generators; }

    // N_p(0) etc. as a list of left nodes adjacent to the given right node.
    std::vector<int> right_neighbourhood(int right) const;
    // Union of right-neighbourhoods over a set of right nodes is implicit in adj.
    bool connected() const;

    friend bool operator==(const CovectorGraph& a, const CovectorGraph& b) {
        return a.dim == b.dim && a.n_generators == b.n_generators && a.adj == b.adj;
    }
};

// Membership of z in the i-th affine sector of the point v (i in 0..d).
// v has entries in {-inf} u Q; z may have +inf entries, which are compared
// symbolically as a common value larger than all finite data.
bool in_point_sector(const Point& v, int i, const Point& z);

// Membership of z in the i-th sector of the ray e^(ray): always true for
// i = ray; for 1 <= i != ray it needs z_i = -inf; for i = 0 it needs
// z_ray = +inf (formal rule for the boundary of the hypercube).
bool in_ray_sector(int ray, int i, const Point& z);

// Covector graph of p with respect to V and the implicit rays e^(1..d).
CovectorGraph covector(const GeneratorSet& V, const Point& p);

// p is a pseudovertex iff its covector graph is connected (isolated nodes count).
bool is_pseudovertex(const GeneratorSet& V, const Point& p);

}  // namespace tropmono
