#ifndef SFS_RATIONAL_HPP
#define SFS_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace sfs {

// Exact arithmetic backbone. GMP keeps rationals in canonical form
// (positive denominator, coprime) as long as they are built through
// make_rational; raw mpq_class(a, b) does not canonicalize.
using Int = mpz_class;
using Rational = mpq_class;

// den > 0 after canonicalization; throws ValidationError on den == 0.
Rational make_rational(const Int& num, const Int& den);
Rational make_rational(long num, long den);

// Accepts "p/q" or a bare integer, with optional leading '-'.
Rational parse_rational(std::string_view text);

// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Int& value);

// Round toward +infinity; exact.
Int ceil_div(const Int& num, const Int& den);

// Negative (ceiling-type) continued fraction of x > 1:
//   x = c1 - 1/(c2 - 1/(... - 1/cl)),  all cj >= 2.
// The expansion with every entry >= 2 is unique.  Plumbing legs for a
// multiplier r use the negated digits of neg_cont_frac(1/r); x <= 1 is
// rejected because leg framings must stay <= -2.
std::vector<Int> neg_cont_frac(const Rational& x);

// Evaluates [c1,...,cl] back to c1 - 1/(c2 - ...); inverse of the above.
Rational eval_neg_cont_frac(const std::vector<Int>& digits);

} // namespace sfs

#endif
