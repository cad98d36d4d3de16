#pragma once

#include <cstdint>
#include <vector>

#include "tropmono/point.hpp"

namespace tropmono {

// Per-axis total preorder of the generator indices: ordered blocks of ties,
// with a -inf block first when present.
struct OrderPattern {
    // axis_blocks[i] lists the tie blocks on axis i in increasing value order;
    // block entries are generator indices, sorted.
    std::vector<std::vector<std::vector<int>>> axis_blocks;
    std::vector<char> neg_inf_first;  // per axis: the first block is the -inf block

    bool operator==(const OrderPattern& o) const {
        return axis_blocks == o.axis_blocks && neg_inf_first == o.neg_inf_first;
    }
};

OrderPattern order_pattern(const GeneratorSet& V);

using Deformation = std::vector<std::vector<Rational>>;  // per generator, per axis

// Strict coordinate inequalities must survive the shift; -inf stays -inf.
bool is_valid_deformation(const GeneratorSet& V, const Deformation& eps);

GeneratorSet apply_deformation(const GeneratorSet& V, const Deformation& eps);

struct Generification {
    GeneratorSet deformed;
    Deformation eps;
};

// Deterministic tie-breaking deformation: every finite per-axis tie splits,
// strict orders survive, and the result is strongly generic.  The seed
// shuffles which member of a tie block moves further.
Generification strong_generification(const GeneratorSet& V, std::uint64_t seed);

// Bipartite graph on coordinate axes and generators attached to an apex:
// edge (i, j) when generator j pins the apex at axis i.
struct PatternType {
    int dim = 0;
    int n_generators = 0;
    std::vector<std::pair<int, int>> edges;  // (axis, generator)

    bool operator==(const PatternType& o) const {
        return dim == o.dim && n_generators == o.n_generators && edges == o.edges;
    }
};

// Requires a to be a principal apex of the polyhedron of V.
PatternType pattern_type(const Point& apex, const GeneratorSet& V);

// The i-th monomial tropical polyhedron induced by P (i in 0..d).
TropicalPolyhedron ith_monomial_polyhedron(const TropicalPolyhedron& P, int i);

// Tropical Farkas membership via homogenised sectors of the minimal generators.
bool membership(const TropicalPolyhedron& P, const Point& p);

// Exact membership by residuation over the homogenised cone; used as the
// second route in tests and by decomposition_check.
bool membership_residuation(const TropicalPolyhedron& P, const Point& p);

// On the padded integer sample grid, membership in P agrees with membership
// in every i-th monomial polyhedron (each tested as a union of i-th sectors).
bool decomposition_check(const TropicalPolyhedron& P, long padding = 2);

}  // namespace tropmono
