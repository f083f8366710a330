#ifndef POLYMIR_JSON_IO_HPP
#define POLYMIR_JSON_IO_HPP

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "polymir/cell_complex.hpp"
#include "polymir/coxeter.hpp"
#include "polymir/homology.hpp"
#include "polymir/mirrored.hpp"
#include "polymir/polyprod.hpp"
#include "polymir/presentation.hpp"
#include "polymir/report.hpp"
#include "polymir/simplicial.hpp"

namespace polymir {

using json = nlohmann::json;

// ---- simplicial complexes: {"vertices":[...],"facets":[[...],...]} --------

inline json to_json(const SimplicialComplex& L) {
    json j;
    j["vertices"] = std::vector<int>(L.vertices().begin(), L.vertices().end());
    j["facets"] = L.facets();
    return j;
}

inline SimplicialComplex complex_from_json(const json& j) {
    if (!j.contains("vertices") || !j.contains("facets"))
        throw input_error("complex JSON needs \"vertices\" and \"facets\"");
    return SimplicialComplex::from_facets(j.at("vertices").get<std::vector<int>>(),
                                          j.at("facets").get<std::vector<Simplex>>());
}

// ---- vertex maps: {"vertex_map":{"1":0,...}} -------------------------------

inline std::map<int, int> vertex_map_from_json(const json& j) {
    if (!j.contains("vertex_map")) throw input_error("map JSON needs \"vertex_map\"");
    std::map<int, int> m;
    for (auto it = j.at("vertex_map").begin(); it != j.at("vertex_map").end(); ++it)
        m[std::stoi(it.key())] = it.value().get<int>();
    return m;
}

inline json vertex_map_to_json(const std::map<int, int>& m) {
    json vm = json::object();
    for (auto [k, v] : m) vm[std::to_string(k)] = v;
    json j;
    j["vertex_map"] = vm;
    return j;
}

// ---- Coxeter matrices: {"index":[ids],"m":[[1,2],[2,1]]}, "inf" for inf ----

inline CoxeterMatrix coxeter_matrix_from_json(const json& j) {
    if (!j.contains("index") || !j.contains("m"))
        throw input_error("matrix JSON needs \"index\" and \"m\"");
    std::vector<int> index = j.at("index").get<std::vector<int>>();
    std::vector<std::vector<int>> m;
    for (const auto& row : j.at("m")) {
        std::vector<int> r;
        for (const auto& x : row) {
            if (x.is_string()) {
                if (x.get<std::string>() != "inf")
                    throw input_error("matrix entries are integers or \"inf\"");
                r.push_back(infinite_bond);
            } else {
                r.push_back(x.get<int>());
            }
        }
        m.push_back(std::move(r));
    }
    return CoxeterMatrix::validate(index, m);
}

inline json to_json(const CoxeterMatrix& M) {
    json rows = json::array();
    for (const auto& row : M.entries()) {
        json r = json::array();
        for (int x : row) {
            if (x == infinite_bond)
                r.push_back("inf");
            else
                r.push_back(x);
        }
        rows.push_back(r);
    }
    json j;
    j["index"] = M.index();
    j["m"] = rows;
    return j;
}

// ---- cell complexes --------------------------------------------------------
// {"cells":[["v0","v1"],["e0"]],"boundary":{"e0":[["v1",1],["v0",-1]]},
//  "labels":{"e0":"..."}}

inline json to_json(const CellComplex& C) {
    json cells = json::array();
    json boundary = json::object();
    json labels = json::object();
    for (int d = 0; d <= C.dimension(); ++d) {
        json layer = json::array();
        for (const auto& c : C.cells(d)) {
            layer.push_back(c.name);
            if (d > 0) {
                json b = json::array();
                for (auto [i, coeff] : c.boundary)
                    b.push_back(json::array({C.cells(d - 1)[i].name, coeff}));
                boundary[c.name] = b;
            }
            if (!c.label.empty()) labels[c.name] = c.label;
        }
        cells.push_back(layer);
    }
    json j;
    j["cells"] = cells;
    j["boundary"] = boundary;
    if (!labels.empty()) j["labels"] = labels;
    return j;
}

inline CellComplex cell_complex_from_json(const json& j) {
    if (!j.contains("cells")) throw input_error("cell complex JSON needs \"cells\"");
    CellComplexBuilder b;
    json boundary = j.value("boundary", json::object());
    json labels = j.value("labels", json::object());
    int d = 0;
    for (const auto& layer : j.at("cells")) {
        for (const auto& name : layer) {
            std::string n = name.get<std::string>();
            std::vector<std::pair<std::string, int>> bd;
            if (boundary.contains(n))
                for (const auto& e : boundary.at(n))
                    bd.push_back({e.at(0).get<std::string>(), e.at(1).get<int>()});
            b.add_cell(d, n, bd, labels.value(n, ""));
        }
        ++d;
    }
    return b.finalize();
}

// ---- mirrored complexes: cell complex + {"mirrors":{"0":[names],...}} ------

inline json to_json(const MirroredComplex& X) {
    json j = to_json(X.space);
    json mirrors = json::object();
    for (int i : X.mirror_index) {
        json cells = json::array();
        for (auto c : X.mirrors.at(i)) cells.push_back(X.space.cell(c).name);
        mirrors[std::to_string(i)] = cells;
    }
    j["mirrors"] = mirrors;
    return j;
}

inline MirroredComplex mirrored_from_json(const json& j) {
    MirroredComplex X;
    X.space = cell_complex_from_json(j);
    if (!j.contains("mirrors")) throw input_error("mirrored JSON needs \"mirrors\"");
    for (auto it = j.at("mirrors").begin(); it != j.at("mirrors").end(); ++it) {
        int i = std::stoi(it.key());
        X.mirror_index.push_back(i);
        for (const auto& name : it.value())
            X.mirrors[i].insert(X.space.id_of(name.get<std::string>()));
    }
    std::sort(X.mirror_index.begin(), X.mirror_index.end());
    X.validate();
    return X;
}

// ---- building products: {"factors":[[labels...],...]} ----------------------

inline RankOneBuildingProduct building_from_json(const json& j) {
    if (!j.contains("factors")) throw input_error("building JSON needs \"factors\"");
    RankOneBuildingProduct B;
    for (const auto& f : j.at("factors")) {
        std::vector<std::string> labels;
        for (const auto& x : f)
            labels.push_back(x.is_string() ? x.get<std::string>() : x.dump());
        if (labels.empty()) throw input_error("building factor must be nonempty");
        B.factors.push_back(std::move(labels));
    }
    return B;
}

// ---- cell pairs: {"pairs":{"0":{"ambient":<cell cx>,"sub":[names]},...}} ---

inline std::map<int, CellPair> pairs_from_json(const json& j) {
    if (!j.contains("pairs")) throw input_error("pair JSON needs \"pairs\"");
    std::map<int, CellPair> out;
    for (auto it = j.at("pairs").begin(); it != j.at("pairs").end(); ++it) {
        CellPair p;
        p.ambient = cell_complex_from_json(it.value().at("ambient"));
        for (const auto& name : it.value().at("sub"))
            p.sub.insert(p.ambient.id_of(name.get<std::string>()));
        p.validate();
        out.emplace(std::stoi(it.key()), std::move(p));
    }
    return out;
}

// ---- presentations ---------------------------------------------------------
// {"generators":["a","b"],"relators":[["a","a"],["a","b","a^-1","b^-1"]]}

inline Presentation presentation_from_json(const json& j) {
    if (!j.contains("generators") || !j.contains("relators"))
        throw input_error("presentation JSON needs \"generators\" and \"relators\"");
    Presentation P;
    P.generators = j.at("generators").get<std::vector<std::string>>();
    for (const auto& r : j.at("relators")) {
        std::vector<int> word;
        for (const auto& tok : r) {
            std::string t = tok.get<std::string>();
            bool inverse = false;
            if (t.size() > 3 && t.substr(t.size() - 3) == "^-1") {
                inverse = true;
                t = t.substr(0, t.size() - 3);
            }
            int idx = P.generator_index(t) + 1;
            word.push_back(inverse ? -idx : idx);
        }
        P.relators.push_back(std::move(word));
    }
    P.validate();
    return P;
}

inline json to_json(const Presentation& P) {
    json rels = json::array();
    for (const auto& r : P.relators) {
        json w = json::array();
        for (int x : r) {
            std::string t = P.generators[std::abs(x) - 1];
            if (x < 0) t += "^-1";
            w.push_back(t);
        }
        rels.push_back(w);
    }
    json j;
    j["generators"] = P.generators;
    j["relators"] = rels;
    return j;
}

// ---- homology profiles & invariants ----------------------------------------

inline json to_json(const HomologyProfile& h) {
    json t = json::array();
    for (const auto& degree : h.torsion) {
        json d = json::array();
        for (const auto& x : degree) d.push_back(x.str());
        t.push_back(d);
    }
    json j;
    j["betti"] = h.betti;
    j["torsion"] = t;
    return j;
}

inline json to_json(const AbelianInvariants& a) {
    json t = json::array();
    for (const auto& x : a.torsion) t.push_back(x.str());
    json j;
    j["free_rank"] = a.free_rank;
    j["torsion"] = t;
    return j;
}

// ---- reports ----------------------------------------------------------------

inline json to_json(const Report& r) {
    json conds = json::array();
    for (const auto& c : r.conditions) {
        json jc;
        jc["id"] = c.id;
        jc["verdict"] = c.verdict;
        if (!c.detail.empty()) jc["detail"] = c.detail;
        conds.push_back(jc);
    }
    json j;
    j["conditions"] = conds;
    j["overall"] = r.overall();
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

} // namespace polymir

#endif
