#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "tropmono/complex.hpp"
#include "tropmono/ideal.hpp"
#include "tropmono/poset.hpp"

namespace tropmono::io {

using nlohmann::json;

// ---- instance files ------------------------------------------------------

GeneratorSet parse_instance(const json& j);
GeneratorSet load_instance(const std::string& path);
json instance_json(const GeneratorSet& V);

// ---- ideals: monomial list text or exponent-matrix JSON -------------------

MonomialIdeal parse_ideal(const std::string& content);
MonomialIdeal load_ideal(const std::string& path);
json ideal_json(const MonomialIdeal& I);

// ---- posets ----------------------------------------------------------------

// Names for vertex_label / apex_label indices of a poset's elements.
struct PosetLabels {
    std::vector<std::string> vertex_names;
    std::vector<std::string> apex_names;
};

PosetLabels vf_labels(const GeneratorSet& minimized, const ApexSet& apices);
PosetLabels max_lattice_labels(const GeneratorSet& minimized);
PosetLabels min_lattice_labels(const ApexSet& apices);

json poset_json(const Poset& P, const PosetLabels& labels = {});
Poset parse_poset(const json& j);
std::string poset_dot(const Poset& P, const std::string& name = "poset");

// ---- complexes and homology -------------------------------------------------

json complex_json(const SimplicialComplex& K);
json homology_json(const HomologyProfile& H, const Field& field);
json betti_json(const BettiTable& T);

// ---- misc -------------------------------------------------------------------

json apex_set_json(const ApexSet& F);
json error_json(const std::string& code, const std::string& message);
std::string point_json_str(const ExtValue& v);
Field parse_field(const std::string& text);  // "q" or "p:PRIME"

}  // namespace tropmono::io
