#ifndef DELIGNE_SERIES_HPP
#define DELIGNE_SERIES_HPP

#include <string>
#include <vector>

#include "deligne/ratfunc.hpp"

namespace deligne {

// Power series in q truncated at order N (coefficients of q^0 .. q^N are
// stored; everything is computed mod q^{N+1}). Coefficients live in Q(t).
class Series {
  public:
    explicit Series(unsigned trunc) : coeffs_(trunc + 1) {}

    static Series one(unsigned trunc);
    static Series monomial(unsigned trunc, unsigned k, RatFunc coeff = RatFunc(1));

    unsigned trunc() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
    const RatFunc& coeff(unsigned k) const;
    void set_coeff(unsigned k, RatFunc v);

    Series operator-() const;
    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(const Series& a, const Series& b);
    Series& operator*=(const Series& o);
    Series& operator*=(const RatFunc& c);
    friend Series operator*(Series a, const RatFunc& c) { return a *= c; }
    friend Series operator*(const RatFunc& c, Series a) { return a *= c; }

    // Two-sided inverse mod q^{N+1}; throws NonInvertible if coeff(0) == 0.
    Series inverse() const;
    Series pow(long e) const; // negative exponents via inverse

    // Multiplication by q^k (high coefficients fall off the truncation).
    Series shifted(unsigned k) const;
    // Restriction to a lower truncation order.
    Series prefix(unsigned new_trunc) const;

    bool operator==(const Series& o) const { return coeffs_ == o.coeffs_; }

    // True when every stored coefficient is a polynomial in t.
    bool is_polynomial() const;
    Poly coeff_poly(unsigned k) const { return coeff(k).to_poly(); }

    std::string str(const char* var = "q", const char* tvar = "t") const;

  private:
    std::vector<RatFunc> coeffs_;
};

// One factor (1 - scale*q^expo)^power of a product expansion.
struct GeomTerm {
    unsigned expo;
    long power;
    RatFunc scale = RatFunc(1);
};

// Truncated product of geometric factors. Factors with expo > trunc are
// dropped (they are 1 mod q^{trunc+1}); expo == 0 is rejected.
Series geom_product(const std::vector<GeomTerm>& terms, unsigned trunc);

} // namespace deligne

#endif
