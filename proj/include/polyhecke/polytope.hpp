#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyhecke/lattice.hpp"
#include "polyhecke/linalg.hpp"
#include "polyhecke/rat.hpp"

namespace polyhecke {

// Facet inequality <x, normal> + offset >= 0 in ambient-lattice coordinates;
// the normal is primitive and points inward.
struct Facet {
    IVec normal;
    Int offset;
    std::vector<int> vertex_ids;  // sorted
};

struct Face {
    std::vector<int> vertex_ids;  // sorted
    int dim = 0;
    std::vector<int> facet_ids;   // facets containing the face, sorted
};

// Simplicial rational cone with primitive generators in Z^n (rows).
struct Cone {
    IMat generators;
    Int index;  // Ind sigma = [L(sigma) : U(sigma)]
};

struct GammaPoint {
    IVec point;  // lattice point of the half-open parallelepiped
    QVec rho;    // barycentric coordinates, aligned with generator order
};

// A supporting hyperplane found by facet sifting.
struct SiftedFacet {
    IVec normal;
    Rat offset;
    std::vector<int> on;  // indices of input points on the hyperplane
};

// Full-dimensional lattice polytope.  Vertices are stored both in the
// original coordinates and in ambient-lattice coordinates (where they are
// integer vectors); all derived geometry lives in lattice coordinates, so
// the volume normalization giving a fundamental domain of the lattice
// volume 1 is automatic.
class LatticePolytope {
  public:
    LatticePolytope(const std::vector<QVec>& vertices, Lattice ambient);

    static LatticePolytope standard(const std::vector<QVec>& vertices) {
        if (vertices.empty()) throw std::invalid_argument("no vertices");
        return LatticePolytope(vertices, Lattice::standard((int)vertices[0].size()));
    }

    int dim() const { return n_; }
    const Lattice& ambient() const { return ambient_; }
    const IMat& vertices() const { return verts_; }            // lattice coords
    std::vector<QVec> vertices_original() const;
    const std::vector<Facet>& facets() const { return facets_; }
    const std::vector<Face>& faces() const { return faces_; }
    bool is_simple() const { return simple_; }

    std::vector<int> faces_of_dim(int d) const;
    int face_index_of_vertex_set(const std::vector<int>& vertex_ids) const;
    // Index of the whole polytope as a face of itself.
    int top_face() const;

    // Normal cone sigma_f generated by the facet normals containing f.
    // Requires a simple polytope.
    Cone normal_cone(int face_index) const;

  private:
    Lattice ambient_;
    std::vector<QVec> verts_orig_;
    IMat verts_;
    int n_ = 0;
    std::vector<Facet> facets_;
    std::vector<Face> faces_;
    bool simple_ = false;
};

// Supporting-hyperplane sift over all point subsets; exact, valid for
// rational points spanning Q^d.
std::vector<SiftedFacet> sift_facets(const std::vector<QVec>& points);

// Exact volume of conv(points) relative to Z^d (points must span Q^d
// affinely, d >= 1).
Rat volume_of_points(const std::vector<QVec>& points);

Rat volume(const LatticePolytope& p);
Rat face_volume(const LatticePolytope& p, int face_index);
// Sum of the volumes of all l-dimensional faces.
Rat vol_l(const LatticePolytope& p, int l);

struct Fan {
    std::vector<Cone> cones;  // indexed by face
};
// Errors with "not simple" on non-simple input.
Fan normal_fan(const LatticePolytope& p);

Int cone_index(const Cone& c);
bool is_nonsingular(const LatticePolytope& p);

// Lattice points of {sum rho_s s : 0 <= rho_s < 1} over the cone's
// generators, together with their barycentric coordinates.  Cardinality
// equals Ind sigma; always contains 0.
std::vector<GammaPoint> parallelepiped_points(const Cone& c);

// Rebuild the polytope with vertices re-expressed in a basis of the lattice
// M (which must contain every vertex); the result has standard ambient
// lattice, and faces correspond by vertex index.
LatticePolytope hecke_image(const LatticePolytope& p, const Lattice& m);

// Normal cone of a face of P viewed over the superlattice M: the same
// geometric cone, respanned by the primitive vectors of M on the original
// normal rays, expressed in M-coordinates.  With M the ambient lattice this
// coincides with normal_cone.
Cone normal_cone_over(const LatticePolytope& p, const Lattice& m, int face_index);

}  // namespace polyhecke
