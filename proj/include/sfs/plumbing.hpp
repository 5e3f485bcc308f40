#ifndef SFS_PLUMBING_HPP
#define SFS_PLUMBING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sfs/linalg.hpp"
#include "sfs/rational.hpp"
#include "sfs/seifert.hpp"

namespace sfs {

// Star-shaped framed tree: central framing plus legs of framed chains,
// each leg listed from the vertex adjacent to the center outward.
// Vertex ids: center = 0, then legs in order, outward.
struct PlumbingGraph {
    int64_t center = 0;
    std::vector<std::vector<int64_t>> legs;

    int vertex_count() const;
    int leg_start(int leg) const; // id of the center-adjacent vertex of a leg
    int degree(int vertex) const;
    int64_t framing(int vertex) const;

    friend bool operator==(const PlumbingGraph&, const PlumbingGraph&) = default;
};

// Typing of the maximal blow-down subgraph of an e0 = -1 standard graph.
// tw = -d1-d2 for non-empty types and -1 when empty:
//   CenterOnly: d1 = d2 = 1          (the lone -1 center)
//   PartialLeg: d2 = 1 < d1          (center plus a prefix of -2 vertices)
//   TwoLegs:    d2 > 1               (center plus two complete legs carrying
//                                     the torus-knot fibration T_{d2,d1})
struct TwistingData {
    enum class Type { Empty, CenterOnly, PartialLeg, TwoLegs };

    Type gamma_type = Type::Empty;
    int64_t d1 = 1;
    int64_t d2 = 1;
    std::vector<int> consumed; // vertex ids, ascending
    int64_t tw = -1;

    // bookkeeping for the blow-down: consumed legs (TwoLegs), or the leg
    // carrying the -2 chain and its length (PartialLeg)
    int leg_i = -1;
    int leg_j = -1;
    int64_t chain_len = 0;
};

struct ValidationReport {
    bool legs_ok = false;            // every leg framing <= -2
    bool negative_definite = false;
    bool expect_homology_sphere = false;
    bool unimodular = false;         // |det| = 1, when expected
    Int det = 0;
    int bad_vertex_count = 0;        // vertices with framing > -degree
    bool bad_vertices_center_only = false;

    bool ok() const {
        return legs_ok && negative_definite && (!expect_homology_sphere || unimodular) &&
               bad_vertex_count <= 1 && bad_vertices_center_only;
    }
    std::string summary() const;
};

// center = e0, leg i = negated neg_cont_frac digits of 1/r_i.
PlumbingGraph standard_graph(const SeifertData& s);

// Reads the Seifert data back off the legs; inverse of standard_graph.
SeifertData seifert_data(const PlumbingGraph& g);

// Diagonal = framings, off-diagonal 1 exactly on tree edges.
SymIntMatrix intersection_matrix(const PlumbingGraph& g);

ValidationReport validate_standard(const PlumbingGraph& g, bool expect_homology_sphere);

// Exact determinant/definiteness via leaf-first elimination along the tree;
// agrees with the generic matrix routines and stays linear in the rank.
Int graph_determinant(const PlumbingGraph& g);
bool graph_is_negative_definite(const PlumbingGraph& g);

// Solves Q x = rhs exactly along the tree; throws on singular pivots.
std::vector<Rational> solve_tree(const PlumbingGraph& g, const std::vector<Rational>& rhs);

// Figure-style typing of the maximal blow-down subgraph; the two ambiguity
// cases cannot occur on homology spheres with e0 = -1 and are reported as
// AmbiguousGammaPrime.
TwistingData gamma_prime(const PlumbingGraph& g);

// DOT export, vertex label = framing.
std::string to_dot(const PlumbingGraph& g);

} // namespace sfs

#endif
