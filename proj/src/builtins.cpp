#include "polyhecke/builtins.hpp"

#include <stdexcept>

namespace polyhecke {

LatticePolytope unit_cube(int n) {
    if (n < 1) throw std::invalid_argument("cube dimension must be >= 1");
    std::vector<QVec> verts;
    for (long mask = 0; mask < (1L << n); ++mask) {
        QVec v((std::size_t)n);
        for (int j = 0; j < n; ++j) v[(std::size_t)j] = Rat((mask >> j) & 1);
        verts.push_back(std::move(v));
    }
    return LatticePolytope::standard(verts);
}

LatticePolytope standard_simplex(int n) {
    if (n < 1) throw std::invalid_argument("simplex dimension must be >= 1");
    std::vector<QVec> verts;
    verts.emplace_back((std::size_t)n, Rat(0));
    for (int i = 0; i < n; ++i) {
        QVec v((std::size_t)n, Rat(0));
        v[(std::size_t)i] = 1;
        verts.push_back(std::move(v));
    }
    return LatticePolytope::standard(verts);
}

LatticePolytope product(const LatticePolytope& a, const LatticePolytope& b) {
    std::vector<QVec> verts;
    for (const auto& va : a.vertices_original())
        for (const auto& vb : b.vertices_original()) {
            QVec v = va;
            v.insert(v.end(), vb.begin(), vb.end());
            verts.push_back(std::move(v));
        }
    return LatticePolytope::standard(verts);
}

LatticePolytope triangular_prism() { return product(standard_simplex(2), standard_simplex(1)); }

LatticePolytope singular_triangle() {
    return LatticePolytope::standard({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(1), Rat(2)}});
}

LatticePolytope square_pyramid() {
    return LatticePolytope::standard({{Rat(0), Rat(0), Rat(0)},
                                      {Rat(1), Rat(0), Rat(0)},
                                      {Rat(0), Rat(1), Rat(0)},
                                      {Rat(1), Rat(1), Rat(0)},
                                      {Rat(0), Rat(0), Rat(1)}});
}

LatticePolytope builtin_polytope(const std::string& spec) {
    auto colon = spec.find(':');
    std::string name = spec.substr(0, colon);
    int arg = 0;
    if (colon != std::string::npos) arg = std::stoi(spec.substr(colon + 1));
    if (name == "cube") return unit_cube(arg > 0 ? arg : 2);
    if (name == "simplex") return standard_simplex(arg > 0 ? arg : 2);
    if (name == "prism") return triangular_prism();
    if (name == "singular-triangle") return singular_triangle();
    throw std::invalid_argument("unknown builtin polytope: " + spec);
}

}  // namespace polyhecke
