// Newton polyhedron: compact face lattice, volumes, Kouchnirenko's formula.
#pragma once

#include "nwspec/germ.hpp"
#include "nwspec/linalg.hpp"

#include <string>
#include <vector>

namespace nwspec {

struct Face {
    int id = -1;
    std::vector<ExpVec> vertices; // minimal, sorted
    int dim = 0;
    RatVec covector;                 // w with w.v = 1 on the face, w.u >= 1 on the support
    std::vector<int> zero_axes;      // axes identically zero on the face
    std::vector<int> parent_facets;  // ids of facets containing this face

    bool on_coordinate_plane() const { return !zero_axes.empty(); }
};

struct FaceLattice {
    int n = 0;
    std::vector<Face> faces; // sorted by (dim, vertices); ids are indices

    // Containment is vertex-set inclusion.
    bool contains(int outer, int inner) const;

    const Face* find_by_vertices(const std::vector<ExpVec>& verts) const;

    std::vector<int> facets() const; // ids of (n-1)-dimensional faces
    std::vector<int> vertices() const;

    // Minimal face whose vertex set contains all the given points; -1 if none.
    int minimal_face_containing(const std::vector<ExpVec>& pts) const;

    // Faces of dimension dim+1 that contain the given face.
    int count_parents_one_up(int face_id) const;
};

// All compact faces of the Newton polyhedron. Throws precondition_error when
// the germ is not convenient (message names the missing axis).
FaceLattice compact_faces(const Germ& g);

// Each face lies in at most n - dim(face) faces of the next dimension.
bool is_simplicial(const FaceLattice& L, int n);

// V_k for k = 1..n: total k-volume of the under-diagram region met with the
// k-dimensional coordinate planes. Exact rationals.
std::vector<Rat> volumes(const Germ& g);

// n! V_n - (n-1)! V_{n-1} + ... + (-1)^n. Throws internal_error if the total
// is not an integer.
long milnor_kouchnirenko(const Germ& g);

// Face lattice as JSON text (vertex lists, dims, containment pairs).
std::string face_lattice_json(const FaceLattice& L);

} // namespace nwspec
