#pragma once

#include <boost/dynamic_bitset.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tropmono/covector.hpp"
#include "tropmono/facets.hpp"
#include "tropmono/point.hpp"

namespace tropmono {

using Bitset = boost::dynamic_bitset<>;

struct PosetElement {
    std::optional<Point> point;
    std::vector<int> vertex_label;  // indices into V u rays (or a lattice ground set)
    std::vector<int> apex_label;    // indices into the facet list (or dual ground set)
    bool formal = false;            // adjoined bottom/top, not a computed element
    std::string name;
};

// Finite poset with typed element labels.  The order is stored explicitly;
// `hasse` is its transitive reduction.
struct Poset {
    std::vector<PosetElement> elements;
    std::vector<Bitset> ups;    // ups[i][j]   <=> i <= j
    std::vector<Bitset> downs;  // downs[i][j] <=> j <= i
    std::vector<std::pair<int, int>> hasse;  // (lower, upper) cover pairs
    int n_generators = -1;  // context for vertex-facet lattices

    int size() const { return static_cast<int>(elements.size()); }
    bool leq(int i, int j) const { return ups[i][j]; }

    std::vector<int> minimal_elements() const;
    std::vector<int> maximal_elements() const;
    int bottom() const;  // -1 unless unique
    int top() const;
    std::vector<int> atoms() const;  // covers of the bottom
    int meet(int i, int j) const;    // -1 if not unique / missing
    int join(int i, int j) const;
};

using LeqFn = std::function<bool(const PosetElement&, const PosetElement&)>;

// Fills ups/downs/hasse for pairwise-distinct elements under `leq`.
Poset build_poset(std::vector<PosetElement> elements, const LeqFn& leq);

// leq on coordinate points (componentwise order); requires points everywhere.
Poset build_point_poset(std::vector<PosetElement> elements, bool reversed = false);

Poset induced_subposet(const Poset& P, const std::vector<int>& ids);

bool is_lattice(const Poset& P);

struct BipartiteGraph {
    int left_size = 0;
    int right_size = 0;
    std::vector<Bitset> right_nbhd;  // per right node, subset of left nodes
};

// Lattice of closed subsets of the left ground set under the neighbourhood
// closure; the empty set and the full ground set are always included.
// Elements carry the closed left set (vertex_label) and the dual closed
// right set (apex_label).
Poset closure_lattice(const BipartiteGraph& G);

struct VertexFacetLattice {
    Poset lattice;
    IncidenceGraph incidence;
    GeneratorSet generators;  // minimized
};

VertexFacetLattice vertex_facet_lattice(const GeneratorSet& V);

// Induced subposet on closed sets S with S n V != {} together with {}.
Poset affine_part(const VertexFacetLattice& L);

// The coordinate point attached to a closed vertex set: max over the
// generators in S and the modified unit vectors of its rays ({} -> bottom).
Point vf_element_point(const VertexFacetLattice& L, int element);

// Elements max(S) over S <= V u modified unit vectors with S n V != {},
// plus the formal bottom; labels are the inclusion-maximal defining sets.
Poset max_lattice(const GeneratorSet& V);

// Mirror construction over the principal apices and modified min-units,
// realized as the reflected max-lattice of the complementary polyhedron.
// The stored order is the reversed componentwise order.
Poset min_lattice(const GeneratorSet& V);

// Induced subposet of the max-lattice on points that also occur in the
// min-lattice; elements carry both labels.
Poset max_min_poset(const GeneratorSet& V);

// Characteristic points: for every i either p_i = +inf or p has an i-witness,
// detected on the covector graph.
bool is_characteristic_point(const GeneratorSet& V, const Point& p);
Poset cp_order(const GeneratorSet& V);

// Scarf points: tropical barycenter of a unique subset, detected on the
// covector graph.  No formal bottom.
bool is_scarf_point(const GeneratorSet& V, const Point& p);
Poset scarf_poset(const GeneratorSet& V);

struct PseudovertexOptions {
    long grid_budget = 2'000'000;
    std::optional<long> box_low, box_high;  // override the default bounding box
};

// All pseudovertices found on the integer grid extended by +-inf coordinate
// patterns, plus the formal bottom.  Requires integral input coordinates.
Poset pseudovertex_poset(const GeneratorSet& V, const PseudovertexOptions& opts = {});

struct DedekindMacNeille {
    Poset lattice;               // cuts ordered by inclusion
    std::vector<int> embedding;  // element p of the input -> index of its principal cut
};

DedekindMacNeille dedekind_macneille(const Poset& P);

struct PosetComparison {
    bool subposet = false;
    bool cover_preserving = false;
    bool equal = false;
};

// Identifies elements via coordinate points.  Formal elements are ignored on
// both sides when ignore_formal is set.  Throws IdentificationFailure when a
// non-ignored element of P has no counterpart in Q.
PosetComparison poset_compare(const Poset& P, const Poset& Q, bool ignore_formal = true);

}  // namespace tropmono
