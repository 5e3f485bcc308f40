#include "sfs/plumbing.hpp"

#include <algorithm>

#include "sfs/errors.hpp"

namespace sfs {

int PlumbingGraph::vertex_count() const {
    int n = 1;
    for (const auto& leg : legs) n += static_cast<int>(leg.size());
    return n;
}

int PlumbingGraph::leg_start(int leg) const {
    int id = 1;
    for (int i = 0; i < leg; ++i) id += static_cast<int>(legs[i].size());
    return id;
}

int PlumbingGraph::degree(int vertex) const {
    if (vertex == 0) return static_cast<int>(legs.size());
    int id = 1;
    for (const auto& leg : legs) {
        const int len = static_cast<int>(leg.size());
        if (vertex < id + len) {
            const int pos = vertex - id;
            if (len == 1) return 1;
            return (pos == 0 || pos == len - 1) ? (pos == 0 ? 2 : 1) : 2;
        }
        id += len;
    }
    throw ValidationError("vertex id out of range");
}

int64_t PlumbingGraph::framing(int vertex) const {
    if (vertex == 0) return center;
    int id = 1;
    for (const auto& leg : legs) {
        const int len = static_cast<int>(leg.size());
        if (vertex < id + len) return leg[vertex - id];
        id += len;
    }
    throw ValidationError("vertex id out of range");
}

PlumbingGraph standard_graph(const SeifertData& s) {
    PlumbingGraph g;
    g.center = s.e0();
    g.legs.reserve(s.multipliers().size());
    for (const Rational& r : s.multipliers()) {
        const auto digits = neg_cont_frac(1 / r);
        std::vector<int64_t> leg;
        leg.reserve(digits.size());
        for (const Int& c : digits) {
            if (!c.fits_slong_p()) throw UnsupportedError("leg framing out of machine range");
            leg.push_back(-c.get_si());
        }
        g.legs.push_back(std::move(leg));
    }
    return g;
}

SeifertData seifert_data(const PlumbingGraph& g) {
    std::vector<Rational> rs;
    rs.reserve(g.legs.size());
    for (const auto& leg : g.legs) {
        std::vector<Int> digits;
        digits.reserve(leg.size());
        for (int64_t f : leg) {
            if (f > -2) throw ValidationError("leg framing above -2 in standard graph");
            digits.push_back(Int(-f));
        }
        rs.push_back(1 / eval_neg_cont_frac(digits));
    }
    return SeifertData(g.center, std::move(rs));
}

SymIntMatrix intersection_matrix(const PlumbingGraph& g) {
    SymIntMatrix q(g.vertex_count());
    q.set(0, 0, g.center);
    int id = 1;
    for (const auto& leg : g.legs) {
        for (size_t j = 0; j < leg.size(); ++j) {
            q.set(id, id, leg[j]);
            q.set(id, j == 0 ? 0 : id - 1, 1);
            ++id;
        }
    }
    return q;
}

namespace {

// Leaf-first elimination pivots: every leg collapsed tip to root, center
// last.  Throws on a zero pivot (singular principal submatrix).
std::vector<Rational> star_pivots(const PlumbingGraph& g) {
    std::vector<Rational> pivots;
    Rational center_acc(g.center);
    for (const auto& leg : g.legs) {
        Rational val;
        for (auto it = leg.rbegin(); it != leg.rend(); ++it) {
            val = (it == leg.rbegin()) ? Rational(*it) : Rational(*it) - 1 / val;
            if (val == 0) throw ValidationError("singular pivot in tree elimination");
            pivots.push_back(val);
        }
        if (!leg.empty()) center_acc -= 1 / val;
    }
    pivots.push_back(center_acc);
    return pivots;
}

} // namespace

Int graph_determinant(const PlumbingGraph& g) {
    std::vector<Rational> pivots;
    try {
        pivots = star_pivots(g);
    } catch (const ValidationError&) {
        return determinant(intersection_matrix(g)); // singular pivot path
    }
    Rational det(1);
    for (const Rational& p : pivots) det *= p;
    if (det.get_den() != 1) throw std::logic_error("tree determinant not an integer");
    return det.get_num();
}

bool graph_is_negative_definite(const PlumbingGraph& g) {
    std::vector<Rational> pivots;
    try {
        pivots = star_pivots(g);
    } catch (const ValidationError&) {
        return false; // a singular principal submatrix is never definite
    }
    for (const Rational& p : pivots)
        if (p >= 0) return false;
    return true;
}

std::vector<Rational> solve_tree(const PlumbingGraph& g, const std::vector<Rational>& rhs) {
    const int n = g.vertex_count();
    if (static_cast<int>(rhs.size()) != n) throw ValidationError("solve_tree: rhs size mismatch");

    // Reduced diagonal d_v and rhs y_v after eliminating everything outward
    // of v; legs processed tip to root, then the center.
    std::vector<Rational> d(n), y(n);
    Rational dc(g.center), yc(rhs[0]);
    int id = 1;
    for (const auto& leg : g.legs) {
        const int base = id;
        const int len = static_cast<int>(leg.size());
        for (int j = len - 1; j >= 0; --j) {
            const int v = base + j;
            d[v] = Rational(leg[j]);
            y[v] = rhs[v];
            if (j + 1 < len) {
                if (d[v + 1] == 0) throw ValidationError("solve_tree: singular pivot");
                d[v] -= 1 / d[v + 1];
                y[v] -= y[v + 1] / d[v + 1];
            }
        }
        if (len > 0) {
            if (d[base] == 0) throw ValidationError("solve_tree: singular pivot");
            dc -= 1 / d[base];
            yc -= y[base] / d[base];
        }
        id += len;
    }
    if (dc == 0) throw ValidationError("solve_tree: singular matrix");

    std::vector<Rational> x(n);
    x[0] = yc / dc;
    id = 1;
    for (const auto& leg : g.legs) {
        const int base = id;
        const int len = static_cast<int>(leg.size());
        for (int j = 0; j < len; ++j) {
            const int v = base + j;
            const Rational& parent = (j == 0) ? x[0] : x[v - 1];
            x[v] = (y[v] - parent) / d[v];
        }
        id += len;
    }
    return x;
}

ValidationReport validate_standard(const PlumbingGraph& g, bool expect_homology_sphere) {
    ValidationReport rep;
    rep.expect_homology_sphere = expect_homology_sphere;

    rep.legs_ok = true;
    for (const auto& leg : g.legs) {
        if (leg.empty()) rep.legs_ok = false;
        for (int64_t f : leg)
            if (f > -2) rep.legs_ok = false;
    }

    rep.negative_definite = graph_is_negative_definite(g);
    rep.det = graph_determinant(g);
    rep.unimodular = (rep.det == 1 || rep.det == -1);

    rep.bad_vertex_count = 0;
    rep.bad_vertices_center_only = true;
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v)
        if (g.framing(v) > -g.degree(v)) {
            ++rep.bad_vertex_count;
            if (v != 0) rep.bad_vertices_center_only = false;
        }
    return rep;
}

std::string ValidationReport::summary() const {
    std::string s;
    s += legs_ok ? "legs ok" : "legs BAD";
    s += negative_definite ? ", negative definite" : ", NOT negative definite";
    s += ", det = " + det.get_str();
    if (expect_homology_sphere) s += unimodular ? " (unimodular)" : " (NOT unimodular)";
    s += ", bad vertices: " + std::to_string(bad_vertex_count);
    if (!bad_vertices_center_only) s += " (off-center!)";
    return s;
}

TwistingData gamma_prime(const PlumbingGraph& g) {
    if (g.center >= 0) throw ValidationError("gamma_prime: central framing must be negative");

    TwistingData t;
    if (g.center <= -2) {
        t.gamma_type = TwistingData::Type::Empty;
        t.tw = -1;
        return t;
    }

    const SeifertData s = seifert_data(g);
    const auto& rs = s.multipliers();
    const int n = static_cast<int>(rs.size());

    // Complete pair of legs carrying a torus-knot fibration:
    // r_i + r_j = 1 - 1/(d_i d_j).
    int pair_i = -1, pair_j = -1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Int di = rs[i].get_den(), dj = rs[j].get_den();
            if (rs[i] + rs[j] == Rational(1) - make_rational(Int(1), di * dj)) {
                if (pair_i >= 0)
                    throw AmbiguousGammaPrime("two torus-knot leg pairs match: (" + std::to_string(pair_i) +
                                              "," + std::to_string(pair_j) + ") and (" + std::to_string(i) +
                                              "," + std::to_string(j) + ")");
                pair_i = i;
                pair_j = j;
            }
        }
    if (pair_i >= 0) {
        Int di = rs[pair_i].get_den(), dj = rs[pair_j].get_den();
        if (di < dj) std::swap(di, dj);
        t.gamma_type = TwistingData::Type::TwoLegs;
        if (!di.fits_slong_p()) throw UnsupportedError("torus-knot parameter out of machine range");
        t.d1 = di.get_si();
        t.d2 = dj.get_si();
        t.leg_i = pair_i;
        t.leg_j = pair_j;
        t.consumed.push_back(0);
        for (int leg : {pair_i, pair_j}) {
            const int base = g.leg_start(leg);
            for (size_t j = 0; j < g.legs[leg].size(); ++j) t.consumed.push_back(base + static_cast<int>(j));
        }
        std::sort(t.consumed.begin(), t.consumed.end());
        t.tw = -t.d1 - t.d2;
        return t;
    }

    // A leg opening with a chain of -2 vertices; at most one such leg can
    // exist on a negative-definite graph with e0 = -1.
    int chain_leg = -1;
    for (int i = 0; i < n; ++i)
        if (g.legs[i].front() == -2) {
            if (chain_leg >= 0)
                throw AmbiguousGammaPrime("two legs open with framing -2: legs " + std::to_string(chain_leg) +
                                          " and " + std::to_string(i));
            chain_leg = i;
        }
    if (chain_leg >= 0) {
        int64_t a = 0;
        for (int64_t f : g.legs[chain_leg]) {
            if (f != -2) break;
            ++a;
        }
        t.gamma_type = TwistingData::Type::PartialLeg;
        t.d1 = a + 1;
        t.d2 = 1;
        t.leg_i = chain_leg;
        t.chain_len = a;
        t.consumed.push_back(0);
        const int base = g.leg_start(chain_leg);
        for (int64_t j = 0; j < a; ++j) t.consumed.push_back(base + static_cast<int>(j));
        std::sort(t.consumed.begin(), t.consumed.end());
        t.tw = -t.d1 - t.d2;
        return t;
    }

    t.gamma_type = TwistingData::Type::CenterOnly;
    t.d1 = t.d2 = 1;
    t.consumed.push_back(0);
    t.tw = -2;
    return t;
}

std::string to_dot(const PlumbingGraph& g) {
    std::string out = "graph plumbing {\n  node [shape=circle];\n";
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v)
        out += "  v" + std::to_string(v) + " [label=\"" + std::to_string(g.framing(v)) + "\"];\n";
    int id = 1;
    for (const auto& leg : g.legs) {
        for (size_t j = 0; j < leg.size(); ++j) {
            const int from = (j == 0) ? 0 : id - 1;
            out += "  v" + std::to_string(from) + " -- v" + std::to_string(id) + ";\n";
            ++id;
        }
    }
    out += "}\n";
    return out;
}

} // namespace sfs
