#ifndef SFS_SURGERY_HPP
#define SFS_SURGERY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sfs/linalg.hpp"
#include "sfs/plumbing.hpp"

namespace sfs {

// One component of the surgery presentation left after the complete
// blow-down.  TB is the maximal Thurston-Bennequin number: -1 for the
// unknot, d1*d2 - d1 - d2 for the positive torus knot T(d2,d1).  The
// stabilization budget s = TB - 1 - framing counts the forced
// stabilizations; the rotation number of the component ranges over
// {-s, -s+2, ..., s}.
struct Component {
    enum class Knot { Unknot, Torus };

    Knot knot = Knot::Unknot;
    int64_t d1 = 0, d2 = 0; // torus parameters, d2 < d1 coprime
    int64_t framing = 0;
    int64_t tb_max = -1;
    int64_t budget = 0;
    int vertex = -1; // id in the original plumbing graph

    friend bool operator==(const Component&, const Component&) = default;
};

// Result of completely blowing down the standard graph: the intersection
// form Q of the Stein domain together with the knot data per component.
struct SurgeryPresentation {
    SymIntMatrix q;
    std::vector<Component> components;

    int rank() const { return q.size(); }
    friend bool operator==(const SurgeryPresentation&, const SurgeryPresentation&) = default;
};

// Rotation numbers of the Legendrian components; characteristic for Q
// (v_i = budget_i mod 2) and |v_i| <= budget_i.
struct RotationVector {
    std::vector<int64_t> v;
    friend bool operator==(const RotationVector&, const RotationVector&) = default;
};

// Splits off a <-1> summand at index v (requires q_vv = -1):
// q'_ij = q_ij + q_iv * q_jv on the remaining indices; |det| is unchanged.
SymIntMatrix blow_down_once(const SymIntMatrix& q, int v);

// Repeatedly blows down the vertices of t.consumed (only those), each at the
// moment its framing reaches -1.  Surviving center-adjacent vertices become
// T(d2,d1) components when t is TwoLegs, everything else stays an unknot.
// Components whose budget would be negative (a cable the rotation-number
// model does not cover) raise UnsupportedPresentation.
SurgeryPresentation complete_blow_down(const PlumbingGraph& g, const TwistingData& t);

// Same, but candidates are tried in the order given by `priority`
// (a permutation of the vertex ids); the result does not depend on it.
SurgeryPresentation complete_blow_down(const PlumbingGraph& g, const TwistingData& t,
                                       const std::vector<int>& priority);

// Number of rotation-number assignments = prod (budget_i + 1); this counts
// the fillable contact structures up to isotopy.
int64_t fillable_count(const SurgeryPresentation& p);

// All rotation vectors, odometer order; closed under global negation.
std::vector<RotationVector> enumerate_rotation_vectors(const SurgeryPresentation& p);

// Holds the exact inverse of Q so repeated d3 evaluations stay cheap.
class D3Evaluator {
public:
    explicit D3Evaluator(const SurgeryPresentation& p);
    // (v^T Q^{-1} v + rank)/4 in the convention 4*d3 - rank = c1^2.
    Rational operator()(const RotationVector& v) const;

private:
    const SurgeryPresentation& p_;
    RationalMatrix qinv_;
    std::vector<std::vector<int64_t>> qinv_int_; // fast path when Q is unimodular
    bool integral_ = false;
};

// d3-invariant of the Stein structure with rotation numbers v.
//
// Convention: 4*d3(xi) - rank = c1^2, i.e. d3 = (v^T Q^{-1} v + rank)/4.
// This differs by a constant shift from the normalization that gives the
// standard tight S^3 the value -1/2; here the empty presentation (S^3)
// gets d3 = 0, which is what comparisons against the correction term need.
Rational d3(const SurgeryPresentation& p, const RotationVector& v);

// d3 at the extreme vector W = (s_1,...,s_m); the canonical structure and
// its conjugate sit at +-W, the strict minimum of d3 over rotation vectors.
Rational d3_canonical(const SurgeryPresentation& p);

RotationVector canonical_rotation_vector(const SurgeryPresentation& p);

std::string to_json(const SurgeryPresentation& p);

} // namespace sfs

#endif
