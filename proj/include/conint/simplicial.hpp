#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <vector>

#include "conint/haar_so3.hpp"
#include "conint/special_fn.hpp"

namespace conint {

// one spatial leaf: labelled vertices and tetrahedra as label 4-tuples
struct LeafComplex3 {
    std::vector<int> vertices;
    std::vector<std::array<int, 4>> tetrahedra;
};

// rejects duplicate labels, dangling references, a face shared by more than
// two tetrahedra, and a face-adjacency graph that is not connected
void validate_leaf(const LeafComplex3& leaf);

// text format: optional '#' comment lines, then
//   vertices <n>    followed by n labels
//   tetrahedra <m>  followed by m lines of 4 labels
LeafComplex3 read_leaf(std::istream& in);

struct VertexRec {
    int label = 0;
    int leaf = 0;
};

struct EdgeRec {
    std::array<int, 2> v{};
    bool lapse_shift = false;  // endpoints on different leaves
};

struct TriangleRec {
    std::array<int, 3> v{};
    bool in_F = false;  // carries a lapse-shift edge
};

struct TetraRec {
    std::array<int, 4> v{};
    bool gauge = false;  // interior wall of a single 4-prism
};

struct SimplexRec {
    std::array<int, 5> v{};
};

struct SimplicialComplex4 {
    int n_leaves = 0;
    int leaf_size = 0;  // vertices per leaf; vertex id = leaf * leaf_size + slot

    std::vector<VertexRec> vertices;
    std::vector<EdgeRec> edges;
    std::vector<TriangleRec> triangles;
    std::vector<TetraRec> tetrahedra;
    std::vector<SimplexRec> four_simplices;

    std::map<std::array<int, 3>, int> triangle_lookup;  // sorted vertex ids
    std::map<std::array<int, 4>, int> tetra_lookup;

    int triangle_index(std::array<int, 3> verts) const;  // -1 if absent
    int tetra_index(std::array<int, 4> verts) const;
};

// stacks n_leaves copies of the leaf, joins them with vertical edges and one
// diagonal per quadrangle, and cuts each tetrahedron-prism into 4 simplices
// by the staircase over a global vertex order.  vertex_order, if nonempty, is
// a permutation of leaf slots refining that order; sharing prisms then cut
// their common walls identically.
SimplicialComplex4 build_prism_complex(const LeafComplex3& leaf, int n_leaves,
                                       const std::vector<int>& vertex_order = {});

// selfdual connection per tetrahedron; the antiselfdual part is the
// entrywise conjugate throughout
struct ConnectionAssignment {
    std::map<int, So3cMatrix> omega;
};

// gauge-flagged tetrahedra must carry the identity
void validate_assignment(const SimplicialComplex4& cx,
                         const ConnectionAssignment& assign, double tol = 1e-12);

// ordered product of R_k = transpose(Omega_{k-1}) Omega_k over consecutive
// chain entries; consecutive tetrahedra must share a triangle
So3cMatrix holonomy(const SimplicialComplex4& cx, const ConnectionAssignment& assign,
                    const std::vector<int>& chain);

// S = 1/2 sum over triangles of (1 + i/g) sqrt(v+^2) asin(v+.r(R+)/sqrt(v+^2))
// plus the antiselfdual term with coupling (1 - i/g), r_a = eps_abc R^bc / 2.
// The euclidean flag substitutes g -> i g, giving couplings (1 +- 1/g).
// Triangles summed are the keys of areas; each needs a curvature entry.
Complex action(const SimplicialComplex4& cx, const std::map<int, AreaBivector>& areas,
               const std::map<int, So3cMatrix>& curvatures, const CouplingConfig& cfg);

// indices of the triangles that contain a lapse-shift edge; the complement
// carries the independent curvatures
std::vector<int> f_set(const SimplicialComplex4& cx);

}  // namespace conint
