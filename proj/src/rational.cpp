#include "sfs/rational.hpp"

#include "sfs/errors.hpp"

namespace sfs {

Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw ValidationError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(long num, long den) {
    return make_rational(Int(num), Int(den));
}

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            Int n(std::string(text), 10);
            return Rational(n);
        }
        Int n(std::string(text.substr(0, slash)), 10);
        Int d(std::string(text.substr(slash + 1)), 10);
        return make_rational(n, d);
    } catch (const std::invalid_argument&) {
        throw ValidationError("malformed rational '" + std::string(text) + "' (expected p/q or integer)");
    }
}

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const Int& value) { return value.get_str(); }

Int ceil_div(const Int& num, const Int& den) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

std::vector<Int> neg_cont_frac(const Rational& x) {
    if (x <= 1) throw ValidationError("neg_cont_frac requires x > 1, got " + to_string(x));
    std::vector<Int> digits;
    Int p = x.get_num(), q = x.get_den();
    // Invariant: p/q > 1 in lowest terms.  c = ceil(p/q) >= 2, and the
    // remainder q/(c*q - p) is again > 1 with a strictly smaller denominator.
    while (true) {
        Int c = ceil_div(p, q);
        digits.push_back(c);
        Int r = c * q - p;
        if (r == 0) break; // exact integer, expansion ends
        p = q;
        q = r;
    }
    return digits;
}

Rational eval_neg_cont_frac(const std::vector<Int>& digits) {
    if (digits.empty()) throw ValidationError("empty continued fraction");
    Rational value(digits.back());
    for (auto it = digits.rbegin() + 1; it != digits.rend(); ++it) {
        if (value == 0) throw ValidationError("continued fraction hits a zero tail");
        value = Rational(*it) - 1 / value;
    }
    return value;
}

} // namespace sfs
