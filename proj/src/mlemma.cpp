#include "sfs/mlemma.hpp"

#include <algorithm>

#include "sfs/errors.hpp"

namespace sfs {

std::string MMatrixReport::summary() const {
    std::string s;
    s += negative_definite ? "negative definite" : "NOT negative definite";
    s += irreducible ? ", irreducible" : ", reducible";
    s += offdiag_nonneg ? ", off-diagonal >= 0" : ", off-diagonal has negative entries";
    s += inverse_negative ? ", inverse entrywise < 0" : ", inverse NOT entrywise < 0";
    return s;
}

MMatrixReport validate_m_matrix(const SymIntMatrix& q) {
    MMatrixReport rep;
    const int n = q.size();
    rep.negative_definite = is_negative_definite(q);
    rep.irreducible = is_irreducible(q);
    rep.offdiag_nonneg = true;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (q(i, j) < 0) rep.offdiag_nonneg = false;
    rep.inverse_negative = false;
    if (rep.negative_definite) {
        const RationalMatrix inv = exact_inverse(q);
        rep.inverse_negative = true;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (inv.at(i, j) >= 0) rep.inverse_negative = false;
    }
    return rep;
}

BoxMinResult box_min(const BoxProblem& p) {
    const int n = p.q.size();
    if (n > 24) throw ValidationError("box_min: rank above 24 refused");
    if (static_cast<int>(p.w.size()) != n) throw ValidationError("box_min: corner size mismatch");
    for (const Rational& wi : p.w)
        if (wi < 0) throw ValidationError("box_min: negative box corner");
    const MMatrixReport rep = validate_m_matrix(p.q);
    if (!rep.negative_definite || !rep.irreducible || !rep.offdiag_nonneg)
        throw ValidationError("box_min: matrix violates the M-matrix hypotheses (" + rep.summary() + ")");

    const RationalMatrix a = exact_inverse(p.q);

    // Only coordinates with w_i > 0 carry a sign choice.
    std::vector<int> free_coords;
    for (int i = 0; i < n; ++i)
        if (p.w[i] > 0) free_coords.push_back(i);

    BoxMinResult result;
    bool have = false;
    const size_t patterns = size_t{1} << free_coords.size();
    std::vector<Rational> v(p.w);
    for (size_t bits = 0; bits < patterns; ++bits) {
        for (size_t t = 0; t < free_coords.size(); ++t) {
            const int i = free_coords[t];
            v[i] = ((bits >> t) & 1) ? -p.w[i] : p.w[i];
        }
        Rational val(0);
        for (int i = 0; i < n; ++i) {
            if (v[i] == 0) continue;
            Rational row(0);
            for (int j = 0; j < n; ++j)
                if (v[j] != 0) row += a.at(i, j) * v[j];
            val += v[i] * row;
        }
        if (!have || val < result.value) {
            result.value = val;
            result.argmins.clear();
            result.argmins.push_back(v);
            have = true;
        } else if (val == result.value) {
            result.argmins.push_back(v);
        }
    }
    std::sort(result.argmins.begin(), result.argmins.end());
    return result;
}

BoxProblem random_box_problem(std::mt19937_64& rng, int max_rank, bool positive_w) {
    // rng() % k keeps the stream independent of the standard library's
    // distribution implementations; bias is irrelevant here.
    const auto pick = [&rng](int64_t k) { return static_cast<int64_t>(rng() % static_cast<uint64_t>(k)); };

    while (true) {
        const int n = 1 + static_cast<int>(pick(max_rank));
        SymIntMatrix q(n);
        // random tree keeps the graph connected
        for (int i = 1; i < n; ++i) {
            const int parent = static_cast<int>(pick(i));
            q.set(i, parent, 1 + pick(2));
        }
        // sprinkle extra edges with weight in {1,2}
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (q(i, j) == 0 && pick(4) == 0) q.set(i, j, pick(3) == 0 ? 2 : 1);
        for (int i = 0; i < n; ++i) {
            int64_t row = 0;
            for (int j = 0; j < n; ++j)
                if (j != i) row += q(i, j);
            q.set(i, i, -(1 + row + pick(3)));
        }
        if (!is_negative_definite(q) || !is_irreducible(q)) continue; // cannot fire; kept as a guard

        std::vector<Rational> w;
        w.reserve(n);
        for (int i = 0; i < n; ++i)
            w.emplace_back(static_cast<long>(positive_w ? 1 + pick(3) : pick(4)));
        return BoxProblem{std::move(q), std::move(w)};
    }
}

} // namespace sfs
