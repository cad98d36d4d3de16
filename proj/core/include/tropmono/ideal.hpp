#pragma once

#include <map>
#include <string>
#include <vector>

#include "tropmono/complex.hpp"
#include "tropmono/poset.hpp"

namespace tropmono {

using Exponent = std::vector<long>;

// A monomial ideal by its generating exponent vectors.
struct MonomialIdeal {
    int nvars = 0;
    std::vector<Exponent> generators;

    std::string monomial_str(const Exponent& u) const;
    std::string str() const;
};

MonomialIdeal make_ideal(int nvars, std::vector<Exponent> generators);
MonomialIdeal minimize(const MonomialIdeal& I);
bool divides(const Exponent& a, const Exponent& b);
Exponent lcm_exponent(const Exponent& a, const Exponent& b);

// Exponent 0 becomes -inf, other entries stay; inverse of ideal_from_polyhedron.
GeneratorSet polyhedron_from_ideal(const MonomialIdeal& I);

// Requires all finite coordinates to be strictly positive integers.
MonomialIdeal ideal_from_polyhedron(const GeneratorSet& V);

// Conversion of a single multidegree: 0 -> -inf.
Point cech_point(const Exponent& u);
Exponent exponent_of(const Point& p);

// Irreducible components m^a, from the principal apices with +inf -> 0.
std::vector<Exponent> irreducible_decomposition(const MonomialIdeal& I);

// Alexander dual with respect to c; every minimal generator must strictly
// divide x^c.
MonomialIdeal alexander_dual(const MonomialIdeal& I, const Exponent& c);

// Lattice of lcms of generator subsets, ordered by divisibility, with 1 as
// bottom.  Elements carry their multidegree as the point and the maximal
// generator subset as the vertex label.
Poset lcm_lattice(const MonomialIdeal& I);

// The inf-free part of the max-lattice; used to cross-check lcm_lattice.
Poset lcm_lattice_of_polyhedron(const GeneratorSet& V);

struct BettiTable {
    int nvars = 0;
    Field field;
    // beta_{i, degree}(S/I) for homological degree i >= 1; nonzero entries only.
    std::map<std::pair<int, Exponent>, long> entries;

    long at(int i, const Exponent& u) const;
    bool operator==(const BettiTable& o) const { return entries == o.entries; }
    std::string str() const;
};

enum class BettiMethod {
    LcmInterval,      // homology of open intervals below each lcm point
    Koszul,           // homology of Koszul complexes at each lcm point
    FacetCrosscutTop  // top multidegree only, from the bounded facet complex
};

BettiTable betti_numbers(const MonomialIdeal& I, BettiMethod method,
                         const Field& field = Field::Q());

// Subposet of the LCM-lattice on multidegrees with nonvanishing interval
// homology; equals the syzygy-point poset.
Poset betti_poset(const MonomialIdeal& I, const Field& field = Field::Q());
Poset betti_poset(const GeneratorSet& V, const Field& field = Field::Q());

enum class Genericity { StronglyGeneric, Generic, TropicallyGeneric };

bool genericity(const MonomialIdeal& I, Genericity kind);
bool genericity(const GeneratorSet& V, Genericity kind);

// Text form "x1^3*x2^2, x1*x3" used by the CLI.
MonomialIdeal parse_ideal_text(const std::string& text);

}  // namespace tropmono
