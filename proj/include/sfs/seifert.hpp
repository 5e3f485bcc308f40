#ifndef SFS_SEIFERT_HPP
#define SFS_SEIFERT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sfs/rational.hpp"

namespace sfs {

// Pairwise coprime exponents of a Brieskorn homology sphere, sorted ascending.
class BrieskornData {
public:
    explicit BrieskornData(std::vector<Int> coefficients);
    BrieskornData(std::initializer_list<long> coefficients);

    const std::vector<Int>& coefficients() const { return a_; }
    int n() const { return static_cast<int>(a_.size()); }
    Int product() const;

    friend bool operator==(const BrieskornData&, const BrieskornData&) = default;
    friend bool operator<(const BrieskornData& x, const BrieskornData& y) { return x.a_ < y.a_; }
    std::string to_string() const;

private:
    std::vector<Int> a_;
};

// Normalized Seifert invariants M(e0; r_1,...,r_n) with every r_i in (0,1).
// Two legs are accepted here (lens-space data shows up inside subgraph
// typing); obstruction-level operations reject n = 2 themselves.
class SeifertData {
public:
    SeifertData(int64_t e0, std::vector<Rational> multipliers);

    int64_t e0() const { return e0_; }
    const std::vector<Rational>& multipliers() const { return rs_; }
    int n() const { return static_cast<int>(rs_.size()); }

    friend bool operator==(const SeifertData&, const SeifertData&) = default;
    std::string to_string() const;

private:
    int64_t e0_;
    std::vector<Rational> rs_;
};

struct FamilyTag {
    enum class Kind {
        // M(-(n+1)/2; 1-1/a, 1/a, ..., 1-1/a): the unique manifold realizing
        // the minimal central framing among smoothly S^4-embeddable ones.
        ExtremalCentralFraming,
        // M(-2; 1-1/a, 1/a, 1-1/a): its reverse bounds a pseudo-convex
        // domain in C^2 (zero-surgery picture on T_{2,2a}).
        PseudoconvexReverse,
        // The exceptional two-fillable, d = 0 Brieskorn spheres.
        TwoFillableSigma345,
        TwoFillableSigma257,
        TwoFillableSigma23k,
    };

    Kind kind;
    int n = 0;
    Int a = 0;
    Int k = 0;

    std::string to_string() const;
    friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

// Unique normalized data with e0 + sum(b_i/a_i) = -1/(a_1...a_n); each b_i
// is the inverse of -(a/a_i) mod a_i.
SeifertData brieskorn_to_seifert(const BrieskornData& b);

// e(Y) = e0 + sum r_i; negative exactly for the canonical orientation.
Rational euler_number(const SeifertData& s);

// Normalized data of the oppositely oriented manifold: (-e0 - n; 1 - r_i).
SeifertData reverse_orientation(const SeifertData& s);

// Detects canonically oriented Brieskorn data: pairwise coprime multiplier
// denominators with e(Y) = -1/(product of denominators).
std::optional<BrieskornData> recognize_brieskorn(const SeifertData& s);

// Named-family membership of normalized data; callers normalize first.
std::vector<FamilyTag> family_membership(const SeifertData& s);

} // namespace sfs

#endif
