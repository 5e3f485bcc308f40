#include "sfs/dinv.hpp"

#include <algorithm>
#include <limits>

#include "sfs/errors.hpp"

namespace sfs {

namespace {

// Parity-constrained symmetric integer range {-hi, ..., hi} with step 2.
struct Grid {
    int64_t hi = 0; // lo = -hi
    int parity = 0; // all values = parity (mod 2)
    int64_t size() const { return hi + 1; } // (hi - (-hi))/2 + 1

    int64_t value(int64_t index) const { return -hi + 2 * index; }

    static Grid make(const Int& bound, int parity) {
        if (!bound.fits_slong_p()) throw UnsupportedError("sweep range out of machine range");
        int64_t hi = bound.get_si();
        if (hi < 1) hi = 1; // inverse positivity makes bounds >= 1; keep grids nonempty
        if (((hi - parity) % 2) != 0) --hi;
        Grid g;
        g.hi = hi;
        g.parity = parity;
        return g;
    }
};

// g(y) = max_x [f(x) + 2 x y] over the child grid, for every y in the
// parent grid.  f is concave (partial maximization of the leg form, which
// is diagonally dominant within the leg), so the argmax moves monotonically
// with y and one left-to-right sweep suffices.
template <class T>
std::vector<T> sweep(const std::vector<T>& f, const Grid& child, const Grid& parent) {
    std::vector<T> g(static_cast<size_t>(parent.size()));
    int64_t xi = 0;
    const int64_t csize = child.size();
    for (int64_t yi = 0; yi < parent.size(); ++yi) {
        const T y = T(parent.value(yi));
        while (xi + 1 < csize) {
            const T cur = f[xi] + T(2) * T(child.value(xi)) * y;
            const T nxt = f[xi + 1] + T(2) * T(child.value(xi + 1)) * y;
            if (nxt > cur)
                ++xi;
            else
                break;
        }
        g[static_cast<size_t>(yi)] = f[xi] + T(2) * T(child.value(xi)) * y;
    }
    return g;
}

template <class T>
Int max_square_sweep(const PlumbingGraph& g, const std::vector<Grid>& grids) {
    const Grid& center = grids[0];
    std::vector<T> total(static_cast<size_t>(center.size()));
    for (int64_t si = 0; si < center.size(); ++si) {
        const T s = T(center.value(si));
        total[static_cast<size_t>(si)] = T(g.center) * s * s;
    }

    int id = 1;
    for (const auto& leg : g.legs) {
        const int len = static_cast<int>(leg.size());
        std::vector<T> f;
        for (int j = len - 1; j >= 0; --j) {
            const Grid& gv = grids[id + j];
            std::vector<T> fv(static_cast<size_t>(gv.size()));
            for (int64_t xi = 0; xi < gv.size(); ++xi) {
                const T x = T(gv.value(xi));
                fv[static_cast<size_t>(xi)] = T(leg[j]) * x * x;
            }
            if (j + 1 < len) {
                const auto coupled = sweep(f, grids[id + j + 1], gv);
                for (size_t i = 0; i < fv.size(); ++i) fv[i] = fv[i] + coupled[i];
            }
            f = std::move(fv);
        }
        if (len > 0) {
            const auto coupled = sweep(f, grids[id], center);
            for (size_t i = 0; i < total.size(); ++i) total[i] = total[i] + coupled[i];
        }
        id += len;
    }

    T best = total.front();
    for (const T& v : total)
        if (v > best) best = v;
    if constexpr (std::is_same_v<T, Int>)
        return best;
    else
        return Int(best);
}

void validate_for_correction_term(const PlumbingGraph& g) {
    const ValidationReport rep = validate_standard(g, true);
    if (!rep.legs_ok) throw ValidationError("correction term: leg framings must be <= -2");
    if (!rep.negative_definite) throw ValidationError("correction term: graph is not negative definite");
    if (!rep.unimodular)
        throw UnsupportedError("correction term: |det| = " + rep.det.get_str() +
                               "; only unimodular forms (single spin-c) are supported");
    if (rep.bad_vertex_count > 1 || !rep.bad_vertices_center_only)
        throw UnsupportedError("correction term: more than one bad vertex");
}

std::vector<Grid> sweep_grids(const PlumbingGraph& g) {
    const int n = g.vertex_count();

    std::vector<Rational> cvec(n), dvec(n);
    for (int v = 0; v < n; ++v) {
        cvec[v] = Rational(static_cast<long>(-g.framing(v)));
        dvec[v] = Rational(static_cast<long>(g.framing(v)));
    }

    // Box bound: |x_i| <= (P c)_i with P = -Q^{-1} > 0 and c = -diag.
    const auto z = solve_tree(g, cvec);
    // Parity class: x = Q^{-1} diag (mod 2); integral since |det| = 1.
    const auto w = solve_tree(g, dvec);

    std::vector<Grid> grids(n);
    for (int v = 0; v < n; ++v) {
        if (z[v].get_den() != 1 || w[v].get_den() != 1)
            throw std::logic_error("unimodular tree solve returned a non-integer");
        const Int bound = -z[v].get_num();
        if (bound <= 0) throw std::logic_error("inverse positivity violated in sweep bound");
        const int parity = static_cast<int>(mpz_odd_p(w[v].get_num().get_mpz_t()) ? 1 : 0);
        grids[v] = Grid::make(bound, parity);
    }
    return grids;
}

} // namespace

Rational square(const SymIntMatrix& q, const CharCovector& k) {
    const int n = q.size();
    if (static_cast<int>(k.k.size()) != n) throw ValidationError("covector length mismatch");
    for (int i = 0; i < n; ++i)
        if (((k.k[i] - q(i, i)) % 2) != 0)
            throw ValidationError("covector is not characteristic: k_" + std::to_string(i) +
                                  " != q_ii (mod 2)");
    const RationalMatrix inv = exact_inverse(q);
    Rational acc(0);
    for (int i = 0; i < n; ++i) {
        if (k.k[i] == 0) continue;
        Rational row(0);
        for (int j = 0; j < n; ++j)
            if (k.k[j] != 0) row += inv.at(i, j) * Rational(static_cast<long>(k.k[j]));
        acc += Rational(static_cast<long>(k.k[i])) * row;
    }
    return acc;
}

Rational correction_term(const PlumbingGraph& g) {
    validate_for_correction_term(g);
    const int n = g.vertex_count();
    const auto grids = sweep_grids(g);

    // Decide whether the fixed-width sweep can overflow:
    // |values| <= sum |q_v| hi_v^2 + 2 sum_edges hi_u hi_v.
    Int bound = 0;
    for (int v = 0; v < n; ++v) bound += Int(-g.framing(v)) * Int(grids[v].hi) * Int(grids[v].hi);
    int id = 1;
    for (const auto& leg : g.legs) {
        const int len = static_cast<int>(leg.size());
        for (int j = 0; j < len; ++j) {
            const int other = (j == 0) ? 0 : id + j - 1;
            bound += 2 * Int(grids[id + j].hi) * Int(grids[other].hi);
        }
        id += len;
    }

    Int best;
    if (bound < Int("1152921504606846976")) // 2^60
        best = max_square_sweep<int64_t>(g, grids);
    else
        best = max_square_sweep<Int>(g, grids);

    Int num = best + n;
    if (num % 4 != 0) throw std::logic_error("K^2 + rank is not divisible by 4");
    return make_rational(num, Int(4));
}

std::pair<Rational, CharCovector> max_char_square_box(const SymIntMatrix& q, int widen,
                                                      uint64_t max_points) {
    const int n = q.size();
    if (n == 0) return {Rational(0), CharCovector{}};

    std::vector<int64_t> hi(n);
    uint64_t points = 1;
    for (int i = 0; i < n; ++i) {
        if (q(i, i) >= 0) throw ValidationError("box enumeration needs a negative diagonal");
        hi[i] = -q(i, i) * widen;
        if (((hi[i] - q(i, i)) % 2) != 0) --hi[i];
        const uint64_t count = static_cast<uint64_t>(hi[i]) + 1;
        if (points > max_points / count)
            throw UnsupportedError("characteristic box too large to enumerate");
        points *= count;
    }

    const RationalMatrix inv = exact_inverse(q);
    bool integral = is_integral(inv);
    std::vector<std::vector<int64_t>> p;
    if (integral) {
        p.assign(n, std::vector<int64_t>(n));
        for (int i = 0; i < n && integral; ++i)
            for (int j = 0; j < n; ++j) {
                const Int& num = inv.at(i, j).get_num();
                // keep the fixed-width dot products comfortably inside int64
                if (!num.fits_slong_p() || num > Int("1099511627776") || num < Int("-1099511627776")) {
                    integral = false;
                    p.clear();
                    break;
                }
                p[i][j] = num.get_si();
            }
    }

    CharCovector k;
    k.k.assign(n, 0);
    for (int i = 0; i < n; ++i) k.k[i] = -hi[i];

    bool have_best = false;
    Rational best;
    Int best_int;
    CharCovector best_k;
    while (true) {
        if (integral) {
            int64_t acc = 0;
            for (int i = 0; i < n; ++i) {
                if (k.k[i] == 0) continue;
                int64_t row = 0;
                for (int j = 0; j < n; ++j) row += p[i][j] * k.k[j];
                acc += k.k[i] * row;
            }
            if (!have_best || Int(acc) > best_int) {
                best_int = acc;
                best_k = k;
                have_best = true;
            }
        } else {
            Rational val(0);
            for (int i = 0; i < n; ++i) {
                if (k.k[i] == 0) continue;
                Rational row(0);
                for (int j = 0; j < n; ++j)
                    if (k.k[j] != 0) row += inv.at(i, j) * Rational(static_cast<long>(k.k[j]));
                val += Rational(static_cast<long>(k.k[i])) * row;
            }
            if (!have_best || val > best) {
                best = val;
                best_k = k;
                have_best = true;
            }
        }
        int i = n - 1;
        while (i >= 0 && k.k[i] >= hi[i]) {
            k.k[i] = -hi[i];
            --i;
        }
        if (i < 0) break;
        k.k[i] += 2;
    }
    if (integral) best = Rational(best_int);
    return {best, best_k};
}

Rational correction_term_box(const PlumbingGraph& g, int widen, uint64_t max_points) {
    validate_for_correction_term(g);
    const SymIntMatrix q = intersection_matrix(g);
    const auto [best, k] = max_char_square_box(q, widen, max_points);
    Rational d = (best + q.size()) / 4;
    return d;
}

bool e0_obstruction_check(const PlumbingGraph& g) { return g.center == -1; }

} // namespace sfs
