#ifndef SFS_DINV_HPP
#define SFS_DINV_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "sfs/linalg.hpp"
#include "sfs/plumbing.hpp"

namespace sfs {

// Characteristic covector of a framed graph: k_i = pairing with the i-th
// vertex class, k_i = q_ii mod 2.
struct CharCovector {
    std::vector<int64_t> k;
    friend bool operator==(const CharCovector&, const CharCovector&) = default;
};

// K^T Q^{-1} K, exact; <= 0 when Q is negative definite.
Rational square(const SymIntMatrix& q, const CharCovector& k);

// Heegaard Floer correction term of the negative-definite plumbed homology
// sphere: d = (max K^2 + rank)/4 over characteristic covectors.
//
// The maximizer K* = Q x* satisfies |(Q x*)_i| <= -q_ii (a +-2 move in any
// coordinate of x would otherwise improve), so x* lies in the box
// |x_i| <= (-Q^{-1} * (-diag))_i and the search is a leg-by-leg sweep over
// x with fixed parities: K^2 = x^T Q x is separable along the tree.
// Requires a validated unimodular graph with at most one bad vertex.
Rational correction_term(const PlumbingGraph& g);

// Same value by plain enumeration of the box q_ii <= k_i <= -q_ii (widened
// by `widen`); throws UnsupportedError when the box exceeds max_points.
// Kept as an independent cross-check of the sweep above.
Rational correction_term_box(const PlumbingGraph& g, int widen = 1,
                             uint64_t max_points = 80'000'000);

// Box-enumeration maximum of K^2 with an attaining covector.
std::pair<Rational, CharCovector> max_char_square_box(const SymIntMatrix& q, int widen = 1,
                                                      uint64_t max_points = 80'000'000);

// Central framing = -1; necessary for bounding a rational homology ball.
bool e0_obstruction_check(const PlumbingGraph& g);

} // namespace sfs

#endif
