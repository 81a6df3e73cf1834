#include "deligne/rational.hpp"

#include <stdexcept>

#include "deligne/errors.hpp"

namespace deligne {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

bool is_integer(const Rat& a) {
    return a.get_den() == 1;
}

Int to_int(const Rat& a) {
    if (!is_integer(a)) throw NotIntegerValued("expected an integer, got " + rat_str(a));
    return a.get_num();
}

Rat rat_pow(const Rat& a, unsigned long e) {
    Rat r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(a.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(a.get_mpq_t()), e);
    return r; // powers of a canonical fraction are canonical
}

Int factorial(unsigned long n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Int binomial(const Int& n, unsigned long k) {
    Int b;
    mpz_bin_ui(b.get_mpz_t(), n.get_mpz_t(), k);
    return b;
}

Int double_factorial_odd(unsigned long m) {
    Int f = 1;
    for (unsigned long j = 3; j < 2 * m; j += 2) f *= j;
    return f;
}

Rat parse_rat(std::string_view s) {
    if (s.empty()) throw DomainError("empty rational literal");
    std::string str(s);
    auto slash = str.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(Int(str));
        }
        Int num(str.substr(0, slash));
        Int den(str.substr(slash + 1));
        return make_rat(num, den);
    } catch (const std::invalid_argument&) {
        throw DomainError("bad rational literal: " + str);
    }
}

std::string rat_str(const Rat& a) {
    return a.get_str();
}

std::string int_str(const Int& a) {
    return a.get_str();
}

} // namespace deligne
