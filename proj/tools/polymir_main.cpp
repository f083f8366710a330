// Command-line front end: JSON in, JSON (or text tables) out.
// Exit codes: 0 success, 1 check failure (with witness), 2 input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "polymir/polymir.hpp"

namespace {

using namespace polymir;

struct Io {
    std::string output_path;
    bool text = false;

    void emit(const json& j) const {
        std::string body = text ? "" : j.dump(2) + "\n";
        if (text) body = render_text(j);
        if (output_path.empty() || output_path == "-") {
            std::cout << body;
        } else {
            std::ofstream out(output_path);
            if (!out) throw input_error("cannot open output file " + output_path);
            out << body;
        }
    }

    static std::string render_text(const json& j) {
        std::ostringstream os;
        if (j.contains("conditions")) {
            for (const auto& c : j.at("conditions"))
                os << c.at("id").get<std::string>() << "\t"
                   << c.at("verdict").get<std::string>() << "\t"
                   << (c.contains("detail") ? c.at("detail").get<std::string>() : "") << "\n";
            os << "overall\t" << j.at("overall").get<std::string>() << "\n";
        } else if (j.contains("betti")) {
            os << "betti";
            for (const auto& b : j.at("betti")) os << " " << b;
            os << "\ntorsion";
            for (const auto& t : j.at("torsion")) {
                os << " [";
                for (std::size_t i = 0; i < t.size(); ++i)
                    os << (i ? "," : "") << t[i].get<std::string>();
                os << "]";
            }
            os << "\n";
        } else if (j.contains("cells")) {
            os << "cells per dimension:";
            for (const auto& layer : j.at("cells")) os << " " << layer.size();
            os << "\n";
        } else {
            os << j.dump(2) << "\n";
        }
        return os.str();
    }
};

json read_json(const std::string& path) {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw input_error("cannot open input file " + path);
    return json::parse(in);
}

ColoredSimplicialComplex tautological_coloring(const SimplicialComplex& L) {
    ColoredSimplicialComplex c;
    c.complex = L;
    int k = 0;
    for (int v : L.vertices()) c.color[v] = k++;
    c.num_colors = k;
    return c;
}

ColoredSimplicialComplex coloring_from_spec(const SimplicialComplex& L,
                                            const std::string& spec) {
    if (spec == "id") return tautological_coloring(L);
    json j = read_json(spec);
    ColoredSimplicialComplex c;
    c.complex = L;
    c.color = vertex_map_from_json(j);
    if (!j.contains("codomain_rank"))
        throw input_error("coloring JSON needs \"codomain_rank\"");
    c.num_colors = j.at("codomain_rank").get<int>() + 1;
    return c;
}

SimplicialComplex graph_input(const json& j) {
    SimplicialComplex g = complex_from_json(j);
    if (g.dimension() > 1) g = one_skeleton(g);
    return g;
}

int run_selftest(unsigned seed) {
    std::mt19937 rng(seed);
    auto random_complex = [&](int maxverts) {
        std::uniform_int_distribution<int> nv(1, maxverts);
        int n = nv(rng);
        std::vector<int> verts;
        for (int v = 0; v < n; ++v) verts.push_back(v);
        std::vector<Simplex> facets;
        std::uniform_int_distribution<int> nf(0, 2 * n);
        std::uniform_int_distribution<int> pick(0, n - 1);
        int count = nf(rng);
        for (int f = 0; f < count; ++f) {
            std::set<int> s;
            std::uniform_int_distribution<int> sz(1, std::min(n, 4));
            int k = sz(rng);
            while (int(s.size()) < k) s.insert(pick(rng));
            facets.push_back(Simplex(s.begin(), s.end()));
        }
        return SimplicialComplex::from_facets(verts, facets);
    };

    int failures = 0;
    auto check = [&](bool ok, const std::string& what) {
        std::cout << (ok ? "pass" : "FAIL") << "  " << what << "\n";
        if (!ok) ++failures;
    };

    for (int t = 0; t < 25; ++t) {
        auto L = random_complex(7);
        bool closed = true;
        for (const auto& s : L.simplices())
            for (std::size_t k = 0; k < s.size() && closed; ++k) {
                Simplex f = s;
                f.erase(f.begin() + k);
                if (!f.empty() && !L.has_simplex(f)) closed = false;
            }
        check(closed, "downward closure (random complex " + std::to_string(t) + ")");
        check(is_flag(L) == (L == clique_complex(one_skeleton(L))),
              "flag iff clique of one-skeleton");
        auto B = barycentric_subdivision(L);
        check(is_flag(B.complex), "barycentric subdivision is flag");
        check(euler_characteristic(B.complex) == euler_characteristic(L),
              "barycentric subdivision preserves Euler characteristic");
    }
    for (int t = 0; t < 10; ++t) {
        auto L = random_complex(5);
        CellComplex Z = real_toric(L);
        Z.validate();
        check(true, "boundary of boundary vanishes in Z_L(D1,S0)");
    }
    std::cout << (failures ? "selftest: FAILURES\n" : "selftest: all passed\n");
    return failures ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"polymir: flag complexes, mirror structures, polyhedral products"};
    app.require_subcommand(1);

    Io io;
    std::size_t max_cells = limits::max_cells();
    std::size_t max_group_order = limits::max_group_order();
    app.add_option("--max-cells", max_cells, "cell budget for constructions");
    app.add_option("--max-group-order", max_group_order, "group order budget");

    std::string in_path, aux_path, aux2_path, out_path, format = "json";
    std::string coloring_spec = "id", corner_spec = "cube", convention = "one-face";
    int dim_arg = 0, base_arg = 0;
    bool reduced = false, mirrored_out = false, declared_aspherical = false;
    unsigned seed = 12345;

    auto add_io = [&](CLI::App* cmd, bool needs_input = true) {
        if (needs_input) cmd->add_option("-i,--input", in_path, "input JSON file (- for stdin)")
            ->required();
        cmd->add_option("-o,--output", out_path, "output file (default stdout)");
        cmd->add_option("--format", format, "json or text");
    };

    auto* flag_check = app.add_subcommand("flag-check", "test flagness, witness on failure");
    add_io(flag_check);
    auto* clique = app.add_subcommand("clique-complex", "flag complex of a graph");
    add_io(clique);
    auto* bary = app.add_subcommand("barycentric", "barycentric subdivision");
    add_io(bary);
    auto* nerve_cmd = app.add_subcommand("nerve", "nerve of a Coxeter system");
    add_io(nerve_cmd);
    auto* davis = app.add_subcommand("davis-chamber", "Davis chamber of a Coxeter system");
    add_io(davis);
    auto* basic = app.add_subcommand("basic-construction", "U(W, X) for finite W");
    basic->add_option("--matrix", in_path, "Coxeter matrix JSON")->required();
    basic->add_option("--space", aux_path, "mirrored complex JSON")->required();
    add_io(basic, false);
    auto* coxcx = app.add_subcommand("coxeter-complex", "U(W, Delta) for finite W");
    coxcx->add_option("--matrix", in_path, "Coxeter matrix JSON")->required();
    add_io(coxcx, false);
    auto* pp = app.add_subcommand("polyhedral-product", "Z_L(A, B) over a pair family");
    pp->add_option("--complex", in_path, "simplicial complex JSON")->required();
    pp->add_option("--pairs", aux_path, "pair family JSON")->required();
    add_io(pp, false);
    auto* chamber_cmd = app.add_subcommand("chamber", "Z_L([0,1], 1)");
    add_io(chamber_cmd);
    chamber_cmd->add_flag("--mirrored", mirrored_out, "emit the canonical mirror structure");
    auto* rt = app.add_subcommand("real-toric", "Z_L(D1, S0)");
    add_io(rt);
    auto* ma = app.add_subcommand("moment-angle", "Z_L(D2, S1)");
    add_io(ma);
    auto* cone = app.add_subcommand("cone-pair", "Z_L(Cone(E), E)");
    cone->add_option("--complex", in_path, "simplicial complex JSON")->required();
    cone->add_option("--factors", aux_path, "building factors JSON")->required();
    add_io(cone, false);
    auto* gp = app.add_subcommand("graph-product", "graph product of presentations");
    gp->add_option("--graph", in_path, "graph JSON")->required();
    gp->add_option("--presentations", aux_path, "vertex presentations JSON")->required();
    add_io(gp, false);
    auto* racg_cmd = app.add_subcommand("racg", "right-angled Coxeter presentation");
    add_io(racg_cmd);
    auto* raag_cmd = app.add_subcommand("raag", "right-angled Artin presentation");
    add_io(raag_cmd);
    auto* pi1_cmd = app.add_subcommand("pi1", "edge-path presentation from a 2-skeleton");
    add_io(pi1_cmd);
    pi1_cmd->add_option("--base", base_arg, "base 0-cell index");
    auto* rs = app.add_subcommand("rs-kernel", "Reidemeister-Schreier kernel presentation");
    rs->add_option("--presentation", in_path, "presentation JSON")->required();
    rs->add_option("--target", aux_path, "target Coxeter matrix JSON")->required();
    rs->add_option("--images", aux2_path, "generator images JSON")->required();
    add_io(rs, false);
    auto* abel = app.add_subcommand("abelianization", "abelian invariants of a presentation");
    add_io(abel);
    auto* hom = app.add_subcommand("homology", "integer homology profile");
    add_io(hom);
    hom->add_flag("--reduced", reduced, "reduced homology");
    auto* pull = app.add_subcommand("pullback", "f*(X) of a corner along a coloring");
    pull->add_option("-i,--input", in_path, "simplicial complex JSON")->required();
    pull->add_option("--coloring", coloring_spec, "coloring JSON or 'id'");
    pull->add_option("--corner", corner_spec, "corner JSON or 'cube'");
    pull->add_option("--convention", convention, "one-face or zero-face (cube corner)");
    pull->add_option("-o,--output", out_path, "output file");
    pull->add_option("--format", format, "json or text");
    auto* gromov = app.add_subcommand("gromov-check", "vertex links flag (Gromov)");
    add_io(gromov);
    auto* asph = app.add_subcommand("asphericity-report", "polyhedral product asphericity hypotheses");
    asph->add_option("--complex", in_path, "simplicial complex JSON")->required();
    asph->add_option("--metadata", aux_path, "per-vertex declarations JSON")->required();
    add_io(asph, false);
    auto* crep = app.add_subcommand("corner-report", "corner conditions (i)'(ii)'(iii)'");
    crep->add_option("--corner", in_path, "mirrored complex JSON")->required();
    crep->add_flag("--aspherical", declared_aspherical, "declare the base aspherical");
    crep->add_option("--cover", aux_path, "cover data JSON (mirrored + projection)");
    add_io(crep, false);
    auto* mani = app.add_subcommand("manifold-certificate", "homology-manifold certificate");
    add_io(mani);
    mani->add_option("--dim", dim_arg, "expected dimension")->required();
    auto* self = app.add_subcommand("selftest", "randomized property checks");
    self->add_option("--seed", seed, "random seed");

    CLI11_PARSE(app, argc, argv);

    limits::max_cells() = max_cells;
    limits::max_group_order() = max_group_order;
    limits::max_simplices() = std::max(limits::max_simplices(), max_cells);
    io.output_path = out_path;
    io.text = format == "text";

    try {
        if (*flag_check) {
            auto L = complex_from_json(read_json(in_path));
            auto w = flag_witness(L);
            json j;
            j["flag"] = !w.has_value();
            if (w) j["witness"] = *w;
            io.emit(j);
            return w ? 1 : 0;
        }
        if (*clique) {
            io.emit(to_json(clique_complex(graph_input(read_json(in_path)))));
            return 0;
        }
        if (*bary) {
            auto B = barycentric_subdivision(complex_from_json(read_json(in_path)));
            json j = to_json(B.complex);
            json bc = json::object();
            for (std::size_t i = 0; i < B.barycenter_of.size(); ++i)
                bc[std::to_string(i)] = B.barycenter_of[i];
            j["barycenters"] = bc;
            io.emit(j);
            return 0;
        }
        if (*nerve_cmd) {
            CoxeterSystem sys(coxeter_matrix_from_json(read_json(in_path)));
            io.emit(to_json(sys.nerve()));
            return 0;
        }
        if (*davis) {
            CoxeterSystem sys(coxeter_matrix_from_json(read_json(in_path)));
            io.emit(to_json(davis_chamber(sys)));
            return 0;
        }
        if (*basic) {
            CoxeterSystem sys(coxeter_matrix_from_json(read_json(in_path)));
            auto X = mirrored_from_json(read_json(aux_path));
            auto T = enumerate_finite_group(sys, limits::max_group_order());
            io.emit(to_json(basic_construction(T, X)));
            return 0;
        }
        if (*coxcx) {
            CoxeterSystem sys(coxeter_matrix_from_json(read_json(in_path)));
            auto T = enumerate_finite_group(sys, limits::max_group_order());
            io.emit(to_json(coxeter_complex(T)));
            return 0;
        }
        if (*pp) {
            auto L = complex_from_json(read_json(in_path));
            auto pairs = pairs_from_json(read_json(aux_path));
            io.emit(to_json(polyhedral_product(L, pairs)));
            return 0;
        }
        if (*chamber_cmd) {
            auto L = complex_from_json(read_json(in_path));
            if (mirrored_out)
                io.emit(to_json(chamber_mirrored(L)));
            else
                io.emit(to_json(chamber(L)));
            return 0;
        }
        if (*rt) {
            io.emit(to_json(real_toric(complex_from_json(read_json(in_path)))));
            return 0;
        }
        if (*ma) {
            io.emit(to_json(moment_angle(complex_from_json(read_json(in_path)))));
            return 0;
        }
        if (*cone) {
            auto L = complex_from_json(read_json(in_path));
            auto B = building_from_json(read_json(aux_path));
            std::vector<int> verts(L.vertices().begin(), L.vertices().end());
            if (B.factors.size() != verts.size())
                throw input_error("factor count does not match the vertex count");
            if (B.degenerate())
                std::cerr << "warning: a building factor has fewer than two elements\n";
            std::map<int, std::vector<std::string>> E;
            for (std::size_t i = 0; i < verts.size(); ++i) E[verts[i]] = B.factors[i];
            io.emit(to_json(cone_pair_product(L, E)));
            return 0;
        }
        if (*gp) {
            auto G = graph_input(read_json(in_path));
            json pj = read_json(aux_path);
            std::map<int, Presentation> verts;
            for (auto it = pj.begin(); it != pj.end(); ++it)
                verts[std::stoi(it.key())] = presentation_from_json(it.value());
            io.emit(to_json(graph_product(G, verts)));
            return 0;
        }
        if (*racg_cmd) {
            io.emit(to_json(racg(graph_input(read_json(in_path)))));
            return 0;
        }
        if (*raag_cmd) {
            io.emit(to_json(raag(graph_input(read_json(in_path)))));
            return 0;
        }
        if (*pi1_cmd) {
            auto C = cell_complex_from_json(read_json(in_path));
            io.emit(to_json(pi1_from_two_skeleton(C, base_arg)));
            return 0;
        }
        if (*rs) {
            auto P = presentation_from_json(read_json(in_path));
            CoxeterSystem sys(coxeter_matrix_from_json(read_json(aux_path)));
            auto T = enumerate_finite_group(sys, limits::max_group_order());
            json ij = read_json(aux2_path);
            if (!ij.contains("images")) throw input_error("images JSON needs \"images\"");
            std::map<std::string, std::vector<int>> images;
            for (auto it = ij.at("images").begin(); it != ij.at("images").end(); ++it)
                images[it.key()] = it.value().get<std::vector<int>>();
            auto K = reidemeister_schreier(P, T, images);
            if (!K.surjective)
                std::cerr << "warning: images are not surjective; "
                             "result is the kernel onto the image subgroup\n";
            json j = to_json(K.kernel);
            j["surjective"] = K.surjective;
            j["index"] = K.index;
            io.emit(j);
            return 0;
        }
        if (*abel) {
            auto P = presentation_from_json(read_json(in_path));
            io.emit(to_json(abelian_invariants(P)));
            return 0;
        }
        if (*hom) {
            json j = read_json(in_path);
            HomologyProfile h = j.contains("facets")
                                    ? homology(complex_from_json(j), reduced)
                                    : homology(cell_complex_from_json(j), reduced);
            io.emit(to_json(h));
            return 0;
        }
        if (*pull) {
            auto L = complex_from_json(read_json(in_path));
            auto colored = coloring_from_spec(L, coloring_spec);
            CornerStructure corner = [&] {
                if (corner_spec == "cube") {
                    auto conv = convention == "zero-face" ? CubeConvention::zero_face
                                                          : CubeConvention::one_face;
                    return cube_corner(colored.num_colors - 1, conv);
                }
                return make_corner(mirrored_from_json(read_json(corner_spec)));
            }();
            io.emit(to_json(pullback(colored, corner).complex));
            return 0;
        }
        if (*gromov) {
            auto C = cell_complex_from_json(read_json(in_path));
            Report r = gromov_check(C);
            io.emit(to_json(r));
            return r.passed() ? 0 : 1;
        }
        if (*asph) {
            auto L = complex_from_json(read_json(in_path));
            json mj = read_json(aux_path);
            std::map<int, PairDeclaration> decl;
            for (auto it = mj.begin(); it != mj.end(); ++it) {
                PairDeclaration d;
                d.aspherical = it.value().value("aspherical", false);
                d.aspherical_pair = it.value().value("aspherical_pair", false);
                decl[std::stoi(it.key())] = d;
            }
            Report r = asphericity_report(L, decl);
            io.emit(to_json(r));
            return r.passed() ? 0 : 1;
        }
        if (*crep) {
            auto corner = make_corner(mirrored_from_json(read_json(in_path)));
            std::optional<CoverData> cover;
            if (!aux_path.empty()) {
                json cj = read_json(aux_path);
                CoverData cd;
                cd.cover = mirrored_from_json(cj);
                if (!cj.contains("projection"))
                    throw input_error("cover JSON needs \"projection\"");
                for (auto it = cj.at("projection").begin(); it != cj.at("projection").end(); ++it)
                    cd.projection[std::stoi(it.key())] = it.value().get<int>();
                cover = std::move(cd);
            }
            Report r = corner_conditions_report(corner, declared_aspherical, cover);
            io.emit(to_json(r));
            return r.overall() == "FAIL" ? 1 : 0;
        }
        if (*mani) {
            auto C = cell_complex_from_json(read_json(in_path));
            Report r = closed_manifold_certificate(C, dim_arg);
            io.emit(to_json(r));
            return r.passed() ? 0 : 1;
        }
        if (*self) return run_selftest(seed);
    } catch (const cap_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
