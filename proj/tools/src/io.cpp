#include "tropmono_cli/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace tropmono::io {

namespace {

ExtValue value_from_json(const json& v) {
    if (v.is_number_integer()) return ExtValue(static_cast<long>(v.get<long long>()));
    if (v.is_string()) return parse_ext_value(v.get<std::string>());
    throw Error("ParseError", "coordinates must be integers or strings");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("FileError", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

std::string point_json_str(const ExtValue& v) { return v.str(); }

GeneratorSet parse_instance(const json& j) {
    if (!j.contains("dim") || !j.contains("generators"))
        throw Error("ParseError", "instance files need 'dim' and 'generators'");
    const int dim = j.at("dim").get<int>();
    std::vector<Point> pts;
    for (const json& row : j.at("generators")) {
        Point p;
        for (const json& v : row) p.push_back(value_from_json(v));
        if (static_cast<int>(p.size()) != dim)
            throw Error("ParseError", "generator rows must have 'dim' entries");
        pts.push_back(std::move(p));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return make_generator_set(dim, std::move(pts), std::move(labels));
}

GeneratorSet load_instance(const std::string& path) {
    json j = json::parse(read_file(path));
    return parse_instance(j);
}

json instance_json(const GeneratorSet& V) {
    json rows = json::array();
    for (const Point& p : V.points) {
        json row = json::array();
        for (const ExtValue& v : p) row.push_back(v.str());
        rows.push_back(row);
    }
    json labels = json::array();
    for (std::size_t j = 0; j < V.points.size(); ++j) labels.push_back(V.label(j));
    return json{{"dim", V.dim}, {"generators", rows}, {"labels", labels}};
}

MonomialIdeal parse_ideal(const std::string& content) {
    // JSON exponent matrix or plain monomial list
    try {
        json j = json::parse(content);
        if (j.is_object() && j.contains("nvars") && j.contains("generators")) {
            std::vector<Exponent> gens;
            for (const json& row : j.at("generators")) gens.push_back(row.get<Exponent>());
            return make_ideal(j.at("nvars").get<int>(), std::move(gens));
        }
    } catch (const json::parse_error&) {
        // fall through to the text form
    }
    return parse_ideal_text(content);
}

MonomialIdeal load_ideal(const std::string& path) { return parse_ideal(read_file(path)); }

json ideal_json(const MonomialIdeal& I) {
    json rows = json::array();
    for (const Exponent& u : I.generators) rows.push_back(u);
    return json{{"nvars", I.nvars}, {"generators", rows}, {"monomials", I.str()}};
}

PosetLabels vf_labels(const GeneratorSet& minimized, const ApexSet& apices) {
    PosetLabels L;
    for (std::size_t j = 0; j < minimized.points.size(); ++j)
        L.vertex_names.push_back(minimized.label(j));
    for (int i = 0; i < minimized.dim; ++i) L.vertex_names.push_back("e" + std::to_string(i + 1));
    for (int r = 0; r < apices.size(); ++r) L.apex_names.push_back(apices.facet_label(r));
    return L;
}

PosetLabels max_lattice_labels(const GeneratorSet& minimized) {
    PosetLabels L;
    for (std::size_t j = 0; j < minimized.points.size(); ++j)
        L.vertex_names.push_back(minimized.label(j));
    for (int i = 0; i < minimized.dim; ++i)
        L.vertex_names.push_back("E" + std::to_string(i + 1));  // modified unit vectors
    return L;
}

PosetLabels min_lattice_labels(const ApexSet& apices) {
    PosetLabels L;
    for (std::size_t j = 0; j < apices.principal.size(); ++j)
        L.apex_names.push_back("a" + std::to_string(j + 1));
    for (int i = 0; i < apices.dim; ++i) L.apex_names.push_back("M" + std::to_string(i + 1));
    return L;
}

json poset_json(const Poset& P, const PosetLabels& labels) {
    json elements = json::array();
    for (int k = 0; k < P.size(); ++k) {
        const PosetElement& e = P.elements[k];
        json je{{"id", k}};
        if (e.point) {
            json pt = json::array();
            for (const ExtValue& v : *e.point) pt.push_back(v.str());
            je["point"] = pt;
        }
        {
            json vs = json::array();
            for (int l : e.vertex_label) {
                if (l < static_cast<int>(labels.vertex_names.size()))
                    vs.push_back(labels.vertex_names[l]);
                else
                    vs.push_back("l" + std::to_string(l + 1));
            }
            je["vertices"] = vs;
        }
        {
            json as = json::array();
            for (int a : e.apex_label) {
                if (a < static_cast<int>(labels.apex_names.size()))
                    as.push_back(labels.apex_names[a]);
                else
                    as.push_back("a" + std::to_string(a + 1));
            }
            je["apices"] = as;
        }
        if (e.formal) je["formal"] = true;
        elements.push_back(std::move(je));
    }
    json hasse = json::array();
    for (const auto& [lo, hi] : P.hasse) hasse.push_back(json::array({lo, hi}));
    return json{{"elements", elements}, {"hasse", hasse}};
}

Poset parse_poset(const json& j) {
    std::vector<PosetElement> elements;
    for (const json& je : j.at("elements")) {
        PosetElement e;
        if (je.contains("point")) {
            Point p;
            for (const json& v : je.at("point")) p.push_back(value_from_json(v));
            e.point = p;
        }
        if (je.contains("formal")) e.formal = je.at("formal").get<bool>();
        if (je.contains("vertices"))
            for (const json& v : je.at("vertices")) e.name += v.get<std::string>();
        elements.push_back(std::move(e));
    }
    // order = reflexive-transitive closure of the hasse edges
    const int n = static_cast<int>(elements.size());
    std::vector<Bitset> ups(n, Bitset(n));
    for (int i = 0; i < n; ++i) ups[i].set(i);
    std::vector<std::pair<int, int>> edges;
    for (const json& ed : j.at("hasse"))
        edges.emplace_back(ed.at(0).get<int>(), ed.at(1).get<int>());
    bool grew = true;
    while (grew) {
        grew = false;
        for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
            Bitset next = ups[it->first] | ups[it->second];
            if (next != ups[it->first]) {
                ups[it->first] = next;
                grew = true;
            }
        }
    }
    Poset P;
    P.elements = std::move(elements);
    P.ups = ups;
    P.downs.assign(n, Bitset(n));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (P.ups[i][k]) P.downs[k].set(i);
    P.hasse = edges;
    std::sort(P.hasse.begin(), P.hasse.end());
    return P;
}

std::string poset_dot(const Poset& P, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    os << "  rankdir=BT;\n";
    for (int k = 0; k < P.size(); ++k) {
        std::string label = P.elements[k].name;
        if (label.empty() && P.elements[k].point) label = point_str(*P.elements[k].point);
        os << "  n" << k << " [label=\"" << label << "\"];\n";
    }
    for (const auto& [lo, hi] : P.hasse) os << "  n" << lo << " -> n" << hi << ";\n";
    os << "}\n";
    return os.str();
}

json complex_json(const SimplicialComplex& K) {
    json faces = json::array();
    for (const Bitset& f : K.maximal_faces) {
        json face = json::array();
        for (std::size_t i = f.find_first(); i != Bitset::npos; i = f.find_next(i))
            face.push_back(K.vertex_names[i]);
        faces.push_back(std::move(face));
    }
    return json{{"vertices", K.vertex_names}, {"maximal_faces", faces}};
}

json homology_json(const HomologyProfile& H, const Field& field) {
    json betti = json::object();
    for (const auto& [k, b] : H.reduced_betti) betti[std::to_string(k)] = b;
    return json{{"field", field.str()}, {"reduced_betti", betti}};
}

json betti_json(const BettiTable& T) {
    json entries = json::array();
    for (const auto& [key, value] : T.entries)
        entries.push_back(json{{"i", key.first}, {"degree", key.second}, {"value", value}});
    return json{{"nvars", T.nvars}, {"field", T.field.str()}, {"entries", entries}};
}

json apex_set_json(const ApexSet& F) {
    json principal = json::array();
    for (const Point& a : F.principal) {
        json row = json::array();
        for (const ExtValue& v : a) row.push_back(v.str());
        principal.push_back(row);
    }
    json boundary = json::array();
    for (int i : F.boundary) boundary.push_back(i + 1);
    return json{{"principal", principal}, {"boundary_directions", boundary}, {"far", true}};
}

json error_json(const std::string& code, const std::string& message) {
    return json{{"error", {{"code", code}, {"message", message}}}};
}

Field parse_field(const std::string& text) {
    if (text == "q" || text == "Q") return Field::Q();
    if (text.rfind("p:", 0) == 0) return Field::Fp(std::stol(text.substr(2)));
    throw Error("ParseError", "field must be 'q' or 'p:PRIME'");
}

}  // namespace tropmono::io
