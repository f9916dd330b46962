#include "polyhecke/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace polyhecke {

using nlohmann::json;

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat((long)j.get<long long>());
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a \"num/den\" string, got: " + j.dump());
}

json rat_to_json(const Rat& r) { return json(to_string(r)); }

static QMat qmat_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a nonempty array of rows");
    std::vector<QVec> rows;
    for (const auto& row : j) {
        QVec r;
        for (const auto& x : row) r.push_back(rat_from_json(x));
        rows.push_back(std::move(r));
    }
    return QMat::from_rows(rows);
}

LatticePolytope polytope_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("polytope JSON must be an object");
    if (!j.contains("vertices")) throw std::invalid_argument("polytope JSON is missing field \"vertices\"");
    std::vector<QVec> verts;
    for (const auto& row : j.at("vertices")) {
        QVec v;
        for (const auto& x : row) v.push_back(rat_from_json(x));
        verts.push_back(std::move(v));
    }
    if (verts.empty()) throw std::invalid_argument("polytope JSON has no vertices");
    if (j.contains("lattice")) return LatticePolytope(verts, Lattice(qmat_from_json(j.at("lattice"))));
    return LatticePolytope::standard(verts);
}

json polytope_to_json(const LatticePolytope& p) {
    json verts = json::array();
    for (const auto& v : p.vertices_original()) {
        json row = json::array();
        for (const auto& x : v) row.push_back(rat_to_json(x));
        verts.push_back(row);
    }
    json lattice = json::array();
    for (std::size_t i = 0; i < p.ambient().basis().rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < p.ambient().basis().cols(); ++k)
            row.push_back(rat_to_json(p.ambient().basis().at(i, k)));
        lattice.push_back(row);
    }
    return json{{"vertices", verts}, {"lattice", lattice}};
}

LatticePolytope polytope_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open polytope file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("invalid polytope JSON in " + path + ": " + e.what());
    }
    return polytope_from_json(j);
}

json unipoly_to_json(const UniPoly& p) {
    json coeffs = json::array();
    for (long d = 0; d <= p.degree(); ++d) coeffs.push_back(rat_to_json(p.coeff((std::size_t)d)));
    return json{{"coeffs", coeffs}};
}

UniPoly unipoly_from_json(const json& j) {
    QVec coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rat_from_json(c));
    return UniPoly(std::move(coeffs));
}

json multipoly_to_json(const MultiPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json term;
        term["exponents"] = e;
        term["coeff"] = rat_to_json(c);
        terms.push_back(term);
    }
    return json{{"nvars", p.nvars()}, {"terms", terms}};
}

json fan_to_json(const LatticePolytope& p) {
    json cones = json::array();
    for (std::size_t fi = 0; fi < p.faces().size(); ++fi) {
        const Face& f = p.faces()[fi];
        Cone c = p.normal_cone((int)fi);
        json gens = json::array();
        for (const auto& g : c.generators) {
            json row = json::array();
            for (const auto& x : g) row.push_back(to_string(x));
            gens.push_back(row);
        }
        cones.push_back(json{{"face_vertices", f.vertex_ids},
                             {"face_dim", f.dim},
                             {"generators", gens},
                             {"index", to_string(c.index)}});
    }
    return json{{"cones", cones}};
}

json lattice_to_json(const Lattice& l) {
    json rows = json::array();
    for (std::size_t i = 0; i < l.basis().rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < l.basis().cols(); ++k) row.push_back(rat_to_json(l.basis().at(i, k)));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace polyhecke
