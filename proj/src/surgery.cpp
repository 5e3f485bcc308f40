#include "sfs/surgery.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include <json.hpp>

#include "sfs/errors.hpp"

namespace sfs {

namespace {

int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw UnsupportedError("blow-down entry overflow");
    return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw UnsupportedError("blow-down entry overflow");
    return r;
}

} // namespace

SymIntMatrix blow_down_once(const SymIntMatrix& q, int v) {
    const int n = q.size();
    if (v < 0 || v >= n) throw ValidationError("blow_down_once: index out of range");
    if (q(v, v) != -1) throw ValidationError("blow_down_once: framing at index is not -1");
    SymIntMatrix out(n - 1);
    for (int i = 0, oi = 0; i < n; ++i) {
        if (i == v) continue;
        for (int j = i, oj = oi; j < n; ++j) {
            if (j == v) continue;
            out.set(oi, oj, checked_add(q(i, j), checked_mul(q(i, v), q(j, v))));
            ++oj;
        }
        ++oi;
    }
    return out;
}

SurgeryPresentation complete_blow_down(const PlumbingGraph& g, const TwistingData& t) {
    std::vector<int> priority(g.vertex_count());
    std::iota(priority.begin(), priority.end(), 0);
    return complete_blow_down(g, t, priority);
}

SurgeryPresentation complete_blow_down(const PlumbingGraph& g, const TwistingData& t,
                                       const std::vector<int>& priority) {
    const int n = g.vertex_count();
    SymIntMatrix q = intersection_matrix(g);

    std::vector<bool> consumed(n, false);
    for (int v : t.consumed) {
        if (v < 0 || v >= n) throw ValidationError("consumed vertex id out of range");
        consumed[v] = true;
    }
    std::vector<bool> alive(n, true);
    int remaining = static_cast<int>(t.consumed.size());

    while (remaining > 0) {
        int pick = -1;
        for (int v : priority)
            if (alive[v] && consumed[v] && q(v, v) == -1) {
                pick = v;
                break;
            }
        if (pick < 0)
            throw InternalTypingError("a consumed vertex never reaches framing -1");
        for (int i = 0; i < n; ++i) {
            if (!alive[i] || i == pick) continue;
            const int64_t qi = q(i, pick);
            if (qi == 0) continue;
            for (int j = i; j < n; ++j) {
                if (!alive[j] || j == pick) continue;
                const int64_t qj = q(j, pick);
                if (qj == 0) continue;
                q.set(i, j, checked_add(q(i, j), checked_mul(qi, qj)));
            }
        }
        alive[pick] = false;
        --remaining;
    }

    std::vector<bool> torus_root(n, false);
    if (t.gamma_type == TwistingData::Type::TwoLegs) {
        for (int leg = 0; leg < static_cast<int>(g.legs.size()); ++leg) {
            if (leg == t.leg_i || leg == t.leg_j) continue;
            torus_root[g.leg_start(leg)] = true;
        }
    }

    std::vector<int> ids;
    for (int v = 0; v < n; ++v)
        if (alive[v]) ids.push_back(v);

    SurgeryPresentation p;
    const int m = static_cast<int>(ids.size());
    p.q = SymIntMatrix(m);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) p.q.set(i, j, q(ids[i], ids[j]));

    p.components.reserve(m);
    for (int i = 0; i < m; ++i) {
        Component c;
        c.vertex = ids[i];
        c.framing = p.q(i, i);
        if (torus_root[ids[i]]) {
            c.knot = Component::Knot::Torus;
            c.d1 = t.d1;
            c.d2 = t.d2;
            c.tb_max = t.d1 * t.d2 - t.d1 - t.d2;
        } else {
            c.knot = Component::Knot::Unknot;
            c.tb_max = -1;
        }
        c.budget = c.tb_max - 1 - c.framing;
        if (c.budget < 0)
            throw UnsupportedPresentation("component at vertex " + std::to_string(c.vertex) +
                                          " has budget " + std::to_string(c.budget) +
                                          "; presentation is outside the rotation-number model");
        p.components.push_back(c);
    }
    return p;
}

int64_t fillable_count(const SurgeryPresentation& p) {
    int64_t count = 1;
    for (const Component& c : p.components) count = checked_mul(count, c.budget + 1);
    return count;
}

std::vector<RotationVector> enumerate_rotation_vectors(const SurgeryPresentation& p) {
    const int m = p.rank();
    std::vector<RotationVector> out;
    out.reserve(static_cast<size_t>(fillable_count(p)));
    RotationVector cur;
    cur.v.resize(m);
    for (int i = 0; i < m; ++i) cur.v[i] = -p.components[i].budget;
    while (true) {
        out.push_back(cur);
        int i = m - 1;
        while (i >= 0 && cur.v[i] >= p.components[i].budget) {
            cur.v[i] = -p.components[i].budget;
            --i;
        }
        if (i < 0) break;
        cur.v[i] += 2;
    }
    return out;
}

D3Evaluator::D3Evaluator(const SurgeryPresentation& p) : p_(p), qinv_(exact_inverse(p.q)) {
    integral_ = is_integral(qinv_);
    if (integral_) {
        const int m = p.rank();
        qinv_int_.assign(m, std::vector<int64_t>(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                const Int& num = qinv_.at(i, j).get_num();
                if (!num.fits_slong_p()) {
                    integral_ = false;
                    qinv_int_.clear();
                    return;
                }
                qinv_int_[i][j] = num.get_si();
            }
    }
}

Rational D3Evaluator::operator()(const RotationVector& v) const {
    const int m = p_.rank();
    if (static_cast<int>(v.v.size()) != m) throw ValidationError("rotation vector has wrong length");
    for (int i = 0; i < m; ++i) {
        const int64_t s = p_.components[i].budget;
        if (v.v[i] > s || v.v[i] < -s) throw ValidationError("rotation number exceeds stabilization budget");
        if (((v.v[i] - s) % 2) != 0) throw ValidationError("rotation number has wrong parity");
    }
    if (integral_) {
        try {
            int64_t acc = 0;
            for (int i = 0; i < m; ++i) {
                if (v.v[i] == 0) continue;
                int64_t row = 0;
                for (int j = 0; j < m; ++j)
                    if (v.v[j] != 0) row = checked_add(row, checked_mul(qinv_int_[i][j], v.v[j]));
                acc = checked_add(acc, checked_mul(v.v[i], row));
            }
            return make_rational(Int(acc) + m, Int(4));
        } catch (const UnsupportedError&) {
            // fall through to the exact rational path
        }
    }
    Rational acc(0);
    for (int i = 0; i < m; ++i) {
        if (v.v[i] == 0) continue;
        Rational row(0);
        for (int j = 0; j < m; ++j)
            if (v.v[j] != 0) row += qinv_.at(i, j) * Rational(static_cast<long>(v.v[j]));
        acc += Rational(static_cast<long>(v.v[i])) * row;
    }
    return (acc + m) / 4;
}

Rational d3(const SurgeryPresentation& p, const RotationVector& v) { return D3Evaluator(p)(v); }

RotationVector canonical_rotation_vector(const SurgeryPresentation& p) {
    RotationVector w;
    w.v.reserve(p.components.size());
    for (const Component& c : p.components) w.v.push_back(c.budget);
    return w;
}

Rational d3_canonical(const SurgeryPresentation& p) { return d3(p, canonical_rotation_vector(p)); }

std::string to_json(const SurgeryPresentation& p) {
    nlohmann::json j;
    j["rank"] = p.rank();
    j["det"] = determinant(p.q).get_str();
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < p.rank(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int k = 0; k < p.rank(); ++k) row.push_back(p.q(i, k));
        rows.push_back(row);
    }
    j["q"] = rows;
    nlohmann::json comps = nlohmann::json::array();
    for (const Component& c : p.components) {
        nlohmann::json e;
        e["vertex"] = c.vertex;
        e["knot"] = (c.knot == Component::Knot::Unknot) ? "unknot" : "torus";
        if (c.knot == Component::Knot::Torus) {
            e["d1"] = c.d1;
            e["d2"] = c.d2;
        }
        e["framing"] = c.framing;
        e["tb_max"] = c.tb_max;
        e["budget"] = c.budget;
        comps.push_back(e);
    }
    j["components"] = comps;
    return j.dump(2);
}

} // namespace sfs
