#ifndef DELIGNE_RATIONAL_HPP
#define DELIGNE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace deligne {

// Exact arbitrary-precision scalars. mpq_class is kept canonical by GMP
// (denominator positive, gcd(num, den) = 1), which is exactly the invariant
// the rest of the library relies on.
using Int = mpz_class;
using Rat = mpq_class;

// num/den, canonicalized. Throws DomainError if den == 0.
Rat make_rat(const Int& num, const Int& den);

bool is_integer(const Rat& a);

// Throws NotIntegerValued if a has a nontrivial denominator.
Int to_int(const Rat& a);

Rat rat_pow(const Rat& a, unsigned long e);

Int factorial(unsigned long n);

// binom(n, k) for integer n (possibly negative) and k >= 0.
Int binomial(const Int& n, unsigned long k);

// (2m - 1)!! = 1*3*5*...*(2m-1); the number of perfect matchings on 2m points.
Int double_factorial_odd(unsigned long m);

// Accepts "p" or "p/q" with optional sign. Throws DomainError on bad input.
Rat parse_rat(std::string_view s);

std::string rat_str(const Rat& a);
std::string int_str(const Int& a);

} // namespace deligne

#endif
