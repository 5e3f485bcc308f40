#ifndef SFS_MLEMMA_HPP
#define SFS_MLEMMA_HPP

#include <random>
#include <string>
#include <vector>

#include "sfs/linalg.hpp"
#include "sfs/rational.hpp"

namespace sfs {

// Box-constrained minimization data for F(V) = V^T Q^{-1} V: Q must be an
// irreducible negative-definite matrix with non-negative off-diagonal
// entries, and the box corner W must be non-negative.
struct BoxProblem {
    SymIntMatrix q;
    std::vector<Rational> w;
};

struct MMatrixReport {
    bool negative_definite = false;
    bool irreducible = false;
    bool offdiag_nonneg = false;
    bool inverse_negative = false; // every entry of Q^{-1} strictly negative

    bool ok() const { return negative_definite && irreducible && offdiag_nonneg && inverse_negative; }
    std::string summary() const;
};

// Checks the M-matrix hypotheses and the entrywise negativity of Q^{-1}.
MMatrixReport validate_m_matrix(const SymIntMatrix& q);

struct BoxMinResult {
    Rational value;
    // Attaining corners; sign patterns on zero coordinates are collapsed,
    // so with all w_i > 0 this must come out as exactly {+W, -W}.
    std::vector<std::vector<Rational>> argmins;
};

// F is concave, so the box minimum sits at a corner; enumerates all sign
// patterns of W.  Ranks above 24 are refused.
BoxMinResult box_min(const BoxProblem& p);

// Random valid instance: a connected graph on <= max_rank vertices with
// off-diagonal weights in {0,1,2} and a diagonally dominant negative
// diagonal, which forces definiteness (verified exactly all the same).
BoxProblem random_box_problem(std::mt19937_64& rng, int max_rank, bool positive_w);

} // namespace sfs

#endif
