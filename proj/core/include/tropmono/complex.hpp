#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tropmono/homology.hpp"
#include "tropmono/poset.hpp"

namespace tropmono {

// Abstract simplicial complex given by its maximal faces (an inclusion
// antichain over the vertex list).  An empty maximal-face list is the void
// complex; a single empty face is the complex {emptyset}.
struct SimplicialComplex {
    std::vector<std::string> vertex_names;
    std::vector<Point> vertex_points;        // optional labels, parallel or empty
    std::vector<Bitset> maximal_faces;
    int n_point_vertices = -1;  // facet complexes: vertices >= this index are rays

    bool is_void() const { return maximal_faces.empty(); }
    int n_vertices() const { return static_cast<int>(vertex_names.size()); }
    int dimension() const;  // -1 for {emptyset}; meaningless for void
    bool has_face(const Bitset& f) const;
    std::vector<Bitset> all_faces() const;  // every face, including the empty one
};

// Reduces an arbitrary face family to its antichain of maximal faces.
SimplicialComplex make_complex(std::vector<std::string> vertex_names,
                               std::vector<Bitset> faces,
                               std::vector<Point> vertex_points = {});

struct HomologyProfile {
    std::map<int, long> reduced_betti;  // degree -> dim over the field, degrees -1..dim

    long betti(int k) const;
    bool trivial() const;
    bool operator==(const HomologyProfile& o) const;
    std::string str() const;
};

HomologyProfile reduced_homology(const SimplicialComplex& K, const Field& field = Field::Q());

// Vertices are the generators and rays; maximal simplices are the apex
// neighbourhoods in the vertex-facet incidence graph.
SimplicialComplex facet_complex(const GeneratorSet& V);

// The subcomplex of faces containing no ray vertex.
SimplicialComplex bounded_complex(const SimplicialComplex& K);

// Chains of the open interval (bottom, top) of P.
SimplicialComplex order_complex(const Poset& P, int bottom, int top);

// Non-spanning subsets of a crosscut C (defaults to the atoms of L).
SimplicialComplex crosscut_complex(const Poset& L, std::optional<std::vector<int>> C = {});

// Koszul complex of a point: subsets J of coordinate directions such that
// some generator below p avoids every sector S_j, j in J.  Points outside the
// closed polyhedron yield the void complex.  base_sector != 0 replaces the
// zero sector by the given one; experimental, nothing is asserted about it.
SimplicialComplex koszul_complex(const GeneratorSet& V, const Point& p, int base_sector = 0);

bool is_syzygy_point(const GeneratorSet& V, const Point& p, const Field& field = Field::Q());

// Subsets of V whose componentwise maximum is attained by no other subset.
SimplicialComplex scarf_complex(const GeneratorSet& V);

// Facet complex has the reduced homology of a (d-1)-sphere.
bool sphere_check(const GeneratorSet& V, const Field& field = Field::Q());

}  // namespace tropmono
