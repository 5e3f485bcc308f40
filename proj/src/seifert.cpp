#include "sfs/seifert.hpp"

#include <algorithm>

#include "sfs/errors.hpp"

namespace sfs {

BrieskornData::BrieskornData(std::vector<Int> coefficients) : a_(std::move(coefficients)) {
    if (a_.size() < 3) throw ValidationError("Brieskorn data needs at least three coefficients");
    std::sort(a_.begin(), a_.end());
    if (a_.front() < 2) throw ValidationError("Brieskorn coefficients must be >= 2");
    for (size_t i = 0; i < a_.size(); ++i)
        for (size_t j = i + 1; j < a_.size(); ++j) {
            Int g;
            mpz_gcd(g.get_mpz_t(), a_[i].get_mpz_t(), a_[j].get_mpz_t());
            if (g != 1)
                throw ValidationError("Brieskorn coefficients must be pairwise coprime: gcd(" +
                                      a_[i].get_str() + ", " + a_[j].get_str() + ") = " + g.get_str());
        }
}

BrieskornData::BrieskornData(std::initializer_list<long> coefficients)
    : BrieskornData(std::vector<Int>(coefficients.begin(), coefficients.end())) {}

Int BrieskornData::product() const {
    Int p = 1;
    for (const Int& ai : a_) p *= ai;
    return p;
}

std::string BrieskornData::to_string() const {
    std::string out = "Sigma(";
    for (size_t i = 0; i < a_.size(); ++i) {
        if (i) out += ",";
        out += a_[i].get_str();
    }
    return out + ")";
}

SeifertData::SeifertData(int64_t e0, std::vector<Rational> multipliers) : e0_(e0), rs_(std::move(multipliers)) {
    if (rs_.size() < 2) throw ValidationError("Seifert data needs at least two multipliers");
    for (const Rational& r : rs_)
        if (r <= 0 || r >= 1)
            throw ValidationError("Seifert multiplier " + sfs::to_string(r) + " outside (0,1)");
}

std::string SeifertData::to_string() const {
    std::string out = "M(" + std::to_string(e0_) + ";";
    for (size_t i = 0; i < rs_.size(); ++i) {
        if (i) out += ",";
        out += sfs::to_string(rs_[i]);
    }
    return out + ")";
}

std::string FamilyTag::to_string() const {
    switch (kind) {
        case Kind::ExtremalCentralFraming:
            return "extremal_central_framing(n=" + std::to_string(n) + ",a=" + a.get_str() + ")";
        case Kind::PseudoconvexReverse:
            return "pseudoconvex_reverse(a=" + a.get_str() + ")";
        case Kind::TwoFillableSigma345:
            return "two_fillable_exception(sigma(3,4,5))";
        case Kind::TwoFillableSigma257:
            return "two_fillable_exception(sigma(2,5,7))";
        case Kind::TwoFillableSigma23k:
            return "two_fillable_exception(sigma(2,3,6k+1),k=" + k.get_str() + ")";
    }
    return "?";
}

SeifertData brieskorn_to_seifert(const BrieskornData& b) {
    const Int a = b.product();
    const auto& as = b.coefficients();
    std::vector<Rational> rs;
    rs.reserve(as.size());
    Int weighted_sum = 0; // sum of b_i * (a / a_i)
    for (const Int& ai : as) {
        const Int cof = a / ai;
        Int inv;
        if (mpz_invert(inv.get_mpz_t(), cof.get_mpz_t(), ai.get_mpz_t()) == 0)
            throw ValidationError("no modular inverse; coefficients not coprime");
        // b_i = -(a/a_i)^{-1} mod a_i, normalized into (0, a_i)
        Int bi = (ai - inv) % ai;
        if (bi == 0) bi = ai; // cannot happen for ai >= 2, kept for clarity
        rs.push_back(make_rational(bi, ai));
        weighted_sum += bi * cof;
    }
    Int num = -1 - weighted_sum;
    Int e0, rem;
    mpz_tdiv_qr(e0.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), a.get_mpz_t());
    if (rem != 0) throw std::logic_error("central framing is not an integer");
    if (!e0.fits_slong_p()) throw UnsupportedError("central framing out of range");
    return SeifertData(e0.get_si(), std::move(rs));
}

Rational euler_number(const SeifertData& s) {
    Rational e(s.e0());
    for (const Rational& r : s.multipliers()) e += r;
    return e;
}

SeifertData reverse_orientation(const SeifertData& s) {
    std::vector<Rational> rs;
    rs.reserve(s.multipliers().size());
    for (const Rational& r : s.multipliers()) rs.push_back(Rational(1) - r);
    return SeifertData(-s.e0() - s.n(), std::move(rs));
}

std::optional<BrieskornData> recognize_brieskorn(const SeifertData& s) {
    if (s.n() < 3) return std::nullopt;
    std::vector<Int> dens;
    Int prod = 1;
    for (const Rational& r : s.multipliers()) {
        dens.push_back(r.get_den());
        prod *= r.get_den();
    }
    for (size_t i = 0; i < dens.size(); ++i)
        for (size_t j = i + 1; j < dens.size(); ++j) {
            Int g;
            mpz_gcd(g.get_mpz_t(), dens[i].get_mpz_t(), dens[j].get_mpz_t());
            if (g != 1) return std::nullopt;
        }
    if (euler_number(s) != make_rational(Int(-1), prod)) return std::nullopt;
    return BrieskornData(dens);
}

std::vector<FamilyTag> family_membership(const SeifertData& s) {
    std::vector<FamilyTag> tags;
    const int n = s.n();

    // Extremal family: n odd, e0 = -(n+1)/2, multipliers a multiset of
    // (n+1)/2 copies of 1-1/a and (n-1)/2 copies of 1/a.
    if (n >= 3 && n % 2 == 1 && s.e0() == -(static_cast<int64_t>(n) + 1) / 2) {
        const Int a = s.multipliers().front().get_den();
        if (a >= 2) {
            bool same_den = true;
            for (const Rational& r : s.multipliers())
                if (r.get_den() != a) same_den = false;
            if (same_den) {
                std::vector<Rational> got = s.multipliers();
                std::vector<Rational> want((n + 1) / 2, make_rational(a - 1, a));
                want.resize(n, make_rational(Int(1), a));
                std::sort(got.begin(), got.end());
                std::sort(want.begin(), want.end());
                if (got == want) {
                    tags.push_back({FamilyTag::Kind::ExtremalCentralFraming, n, a, 0});
                    if (n == 3) tags.push_back({FamilyTag::Kind::PseudoconvexReverse, 3, a, 0});
                }
            }
        }
    }

    if (auto b = recognize_brieskorn(s)) {
        const auto& a = b->coefficients();
        if (a.size() == 3) {
            if (a[0] == 3 && a[1] == 4 && a[2] == 5)
                tags.push_back({FamilyTag::Kind::TwoFillableSigma345, 3, 0, 0});
            else if (a[0] == 2 && a[1] == 5 && a[2] == 7)
                tags.push_back({FamilyTag::Kind::TwoFillableSigma257, 3, 0, 0});
            else if (a[0] == 2 && a[1] == 3 && (a[2] - 1) % 6 == 0)
                tags.push_back({FamilyTag::Kind::TwoFillableSigma23k, 3, 0, (a[2] - 1) / 6});
        }
    }
    return tags;
}

} // namespace sfs
