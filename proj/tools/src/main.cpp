#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "tropmono_cli/io.hpp"
#include "tropmono_cli/verify.hpp"
#include "tropmono/transform.hpp"

using namespace tropmono;
namespace io = tropmono::io;

namespace {

struct CommonOpts {
    std::string in_path;
    std::string out_path;
    std::string format = "json";
    std::string field = "q";
    std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_in = true) {
    auto* in = cmd->add_option("--in", opts.in_path, "input file");
    if (needs_in) in->required();
    cmd->add_option("--out", opts.out_path, "output file (default stdout)");
    cmd->add_option("--format", opts.format, "output format: json or dot")
        ->check(CLI::IsMember({"json", "dot"}));
    cmd->add_option("--field", opts.field, "homology field: q or p:PRIME");
    cmd->add_option("--seed", opts.seed, "seed for randomized commands");
}

void emit(const CommonOpts& opts, const std::string& text) {
    if (opts.out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(opts.out_path);
    if (!out) throw Error("FileError", "cannot write " + opts.out_path);
    out << text;
}

void emit_poset(const CommonOpts& opts, const Poset& P, const io::PosetLabels& labels,
                const std::string& name) {
    if (opts.format == "dot")
        emit(opts, io::poset_dot(P, name));
    else
        emit(opts, io::poset_json(P, labels).dump(2));
}

// A poset command working on the minimized generators of the input instance.
template <typename Fn>
void poset_command(const CommonOpts& opts, const std::string& name, Fn&& fn) {
    const GeneratorSet V = minimal_generators(io::load_instance(opts.in_path));
    Poset P = fn(V);
    io::PosetLabels labels = io::max_lattice_labels(V);
    emit_poset(opts, P, labels, name);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"monomial tropical polyhedra: face posets, facet complexes, monomial ideals"};
    app.require_subcommand(1);

    CommonOpts opts;

    auto* c_facets = app.add_subcommand("facets", "facet-apices and incidences");
    add_common(c_facets, opts);
    auto* c_vif = app.add_subcommand("vif", "vertex-facet lattice");
    add_common(c_vif, opts);
    auto* c_maxl = app.add_subcommand("max-lattice", "max-lattice");
    add_common(c_maxl, opts);
    auto* c_minl = app.add_subcommand("min-lattice", "min-lattice");
    add_common(c_minl, opts);
    auto* c_maxmin = app.add_subcommand("maxmin", "max-min poset");
    add_common(c_maxmin, opts);
    auto* c_cp = app.add_subcommand("cp", "CP-order of characteristic points");
    add_common(c_cp, opts);
    bool report_lattice = false;
    c_cp->add_flag("--report-lattice", report_lattice,
                   "also report whether the CP-order is a lattice (experimental)");
    auto* c_scarf = app.add_subcommand("scarf", "Scarf poset");
    add_common(c_scarf, opts);
    auto* c_pseudo = app.add_subcommand("pseudovertices", "pseudovertex poset (integer grid)");
    add_common(c_pseudo, opts);
    auto* c_complex = app.add_subcommand("facet-complex", "facet complex and bounded complex");
    add_common(c_complex, opts);
    auto* c_homology = app.add_subcommand("homology", "reduced homology of the facet complex");
    add_common(c_homology, opts);
    bool bounded_flag = false;
    c_homology->add_flag("--bounded", bounded_flag, "use the bounded complex");
    auto* c_betti = app.add_subcommand("betti", "graded Betti numbers of a monomial ideal");
    add_common(c_betti, opts);
    std::string method = "all";
    c_betti->add_option("--method", method, "lcm, koszul, facet-top, or all")
        ->check(CLI::IsMember({"lcm", "koszul", "facet-top", "all"}));
    auto* c_ideal = app.add_subcommand("ideal", "convert between ideals and instances");
    add_common(c_ideal, opts);
    auto* c_dual = app.add_subcommand("dual", "Alexander dual of a monomial ideal");
    add_common(c_dual, opts);
    std::string c_vector;
    c_dual->add_option("--c", c_vector, "dual degree, e.g. 3,4")->required();
    auto* c_decompose = app.add_subcommand("decompose", "irredundant irreducible decomposition");
    add_common(c_decompose, opts);
    auto* c_deform = app.add_subcommand("deform", "seeded strong generification");
    add_common(c_deform, opts);
    auto* c_check = app.add_subcommand("check", "validate an input file");
    add_common(c_check, opts);
    auto* c_verify = app.add_subcommand("verify", "run the per-instance property suite");
    add_common(c_verify, opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_facets->parsed()) {
            const GeneratorSet V = minimal_generators(io::load_instance(opts.in_path));
            const ApexSet F = apex_set(V);
            const IncidenceGraph G = incidence_graph(V);
            io::json j = io::apex_set_json(F);
            io::json incidence = io::json::object();
            const io::PosetLabels labels = io::vf_labels(V, F);
            for (int l = 0; l < G.left_size(); ++l) {
                io::json row = io::json::array();
                for (int r = 0; r < G.right_size(); ++r)
                    if (G.edge(l, r)) row.push_back(labels.apex_names[r]);
                incidence[labels.vertex_names[l]] = row;
            }
            j["incidence"] = incidence;
            emit(opts, j.dump(2));
        } else if (c_vif->parsed()) {
            const GeneratorSet V = minimal_generators(io::load_instance(opts.in_path));
            const VertexFacetLattice VF = vertex_facet_lattice(V);
            emit_poset(opts, VF.lattice, io::vf_labels(VF.generators, VF.incidence.apices),
                       "vif");
        } else if (c_maxl->parsed()) {
            poset_command(opts, "max_lattice", [](const GeneratorSet& V) {
                return max_lattice(V);
            });
        } else if (c_minl->parsed()) {
            const GeneratorSet V = minimal_generators(io::load_instance(opts.in_path));
            emit_poset(opts, min_lattice(V), io::min_lattice_labels(apex_set(V)), "min_lattice");
        } else if (c_maxmin->parsed()) {
            const GeneratorSet V = minimal_generators(io::load_instance(opts.in_path));
            const Poset P = max_min_poset(V);
            io::PosetLabels labels = io::max_lattice_labels(V);
            labels.apex_names = io::min_lattice_labels(apex_set(V)).apex_names;
            emit_poset(opts, P, labels, "maxmin");
        } else if (c_cp->parsed()) {
            const GeneratorSet V = minimal_generators(io::load_instance(opts.in_path));
            const Poset P = cp_order(V);
            if (opts.format == "dot") {
                emit(opts, io::poset_dot(P, "cp_order"));
            } else {
                io::json j = io::poset_json(P, io::max_lattice_labels(V));
                if (report_lattice) j["is_lattice"] = is_lattice(P);
                emit(opts, j.dump(2));
            }
        } else if (c_scarf->parsed()) {
            poset_command(opts, "scarf", [](const GeneratorSet& V) { return scarf_poset(V); });
        } else if (c_pseudo->parsed()) {
            poset_command(opts, "pseudovertices", [](const GeneratorSet& V) {
                return pseudovertex_poset(V);
            });
        } else if (c_complex->parsed()) {
            const GeneratorSet V = minimal_generators(io::load_instance(opts.in_path));
            const SimplicialComplex K = facet_complex(V);
            io::json j{{"facet_complex", io::complex_json(K)},
                       {"bounded_complex", io::complex_json(bounded_complex(K))}};
            emit(opts, j.dump(2));
        } else if (c_homology->parsed()) {
            const GeneratorSet V = minimal_generators(io::load_instance(opts.in_path));
            const Field field = io::parse_field(opts.field);
            SimplicialComplex K = facet_complex(V);
            if (bounded_flag) K = bounded_complex(K);
            io::json j = io::homology_json(reduced_homology(K, field), field);
            j["complex"] = bounded_flag ? "bounded" : "facet";
            emit(opts, j.dump(2));
        } else if (c_betti->parsed()) {
            const MonomialIdeal I = minimize(io::load_ideal(opts.in_path));
            const Field field = io::parse_field(opts.field);
            io::json j{{"ideal", io::ideal_json(I)}};
            if (method == "lcm" || method == "all")
                j["lcm"] = io::betti_json(betti_numbers(I, BettiMethod::LcmInterval, field));
            if (method == "koszul" || method == "all")
                j["koszul"] = io::betti_json(betti_numbers(I, BettiMethod::Koszul, field));
            if (method == "facet-top" || method == "all")
                j["facet_top"] =
                    io::betti_json(betti_numbers(I, BettiMethod::FacetCrosscutTop, field));
            emit(opts, j.dump(2));
        } else if (c_ideal->parsed()) {
            // instance -> ideal, or ideal -> instance, detected by content
            std::ifstream in(opts.in_path);
            if (!in) throw Error("FileError", "cannot open " + opts.in_path);
            std::string content((std::istreambuf_iterator<char>(in)),
                                std::istreambuf_iterator<char>());
            bool as_instance = false;
            GeneratorSet V;
            try {
                io::json j = io::json::parse(content);
                if (j.contains("dim")) {
                    V = io::parse_instance(j);
                    as_instance = true;
                }
            } catch (const io::json::parse_error&) {
            }
            if (as_instance) {
                const MonomialIdeal I = ideal_from_polyhedron(V);
                emit(opts, io::ideal_json(I).dump(2));
            } else {
                const MonomialIdeal I = minimize(io::parse_ideal(content));
                emit(opts, io::instance_json(polyhedron_from_ideal(I)).dump(2));
            }
        } else if (c_dual->parsed()) {
            const MonomialIdeal I = minimize(io::load_ideal(opts.in_path));
            Exponent c;
            std::string token;
            std::istringstream ss(c_vector);
            while (std::getline(ss, token, ',')) c.push_back(std::stol(token));
            const MonomialIdeal D = alexander_dual(I, c);
            emit(opts, io::ideal_json(D).dump(2));
        } else if (c_decompose->parsed()) {
            const MonomialIdeal I = minimize(io::load_ideal(opts.in_path));
            io::json comps = io::json::array();
            for (const Exponent& a : irreducible_decomposition(I)) comps.push_back(a);
            emit(opts, io::json{{"ideal", io::ideal_json(I)}, {"components", comps}}.dump(2));
        } else if (c_deform->parsed()) {
            const GeneratorSet V = minimal_generators(io::load_instance(opts.in_path));
            const Generification g = strong_generification(V, opts.seed);
            io::json eps = io::json::array();
            for (const auto& row : g.eps) {
                io::json r = io::json::array();
                for (const Rational& q : row) r.push_back(q.get_str());
                eps.push_back(r);
            }
            emit(opts, io::json{{"instance", io::instance_json(g.deformed)},
                                {"epsilon", eps},
                                {"seed", opts.seed}}
                           .dump(2));
        } else if (c_check->parsed()) {
            const GeneratorSet V = io::load_instance(opts.in_path);
            const GeneratorSet W = minimal_generators(V);
            io::json j{{"valid", true},
                       {"dim", V.dim},
                       {"generators", V.points.size()},
                       {"minimal_generators", W.points.size()},
                       {"already_minimal", W.points.size() == V.points.size()}};
            emit(opts, j.dump(2));
        } else if (c_verify->parsed()) {
            const GeneratorSet V = io::load_instance(opts.in_path);
            std::ostringstream report;
            const int failures = io::run_verify(V, opts.seed, report);
            emit(opts, report.str());
            return failures == 0 ? 0 : 1;
        }
    } catch (const BudgetError& e) {
        std::cerr << io::error_json(e.code(), e.what()).dump() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << io::error_json(e.code(), e.what()).dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << io::error_json("Internal", e.what()).dump() << "\n";
        return 2;
    }
    return 0;
}
