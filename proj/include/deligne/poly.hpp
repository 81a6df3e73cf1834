#ifndef DELIGNE_POLY_HPP
#define DELIGNE_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "deligne/rational.hpp"

namespace deligne {

// Dense univariate polynomial in the rank parameter t over Q.
// Invariant: coefficient vector is empty (the zero polynomial) or its last
// entry is nonzero.
class Poly {
  public:
    Poly() = default;
    Poly(const Rat& constant);
    Poly(long constant);
    explicit Poly(std::vector<Rat> coeffs); // normalizes

    static Poly variable(); // t

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rat coeff(std::size_t k) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    const Rat& leading() const;

    bool is_constant() const { return coeffs_.size() <= 1; }
    Rat constant_value() const { return coeff(0); }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Rat& c);
    friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
    friend Poly operator*(const Rat& c, Poly a) { return a *= c; }

    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }

    Poly pow(unsigned long e) const;
    Rat eval(const Rat& x) const;

    // Quotient and remainder; divisor must be nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    // Exact division; throws InternalDenominator if the remainder is nonzero.
    Poly divexact(const Poly& b) const;
    // Monic gcd; gcd(0, 0) = 0.
    static Poly gcd(const Poly& a, const Poly& b);
    Poly monic() const;

    std::string str(const char* var = "t") const;

  private:
    void normalize();
    std::vector<Rat> coeffs_;
};

// prod_{j=0}^{k-1} (p - j) / k!, the generalized binomial coefficient
// binom(p, k) with polynomial top.
Poly binom_poly(const Poly& p, unsigned long k);

// Unique polynomial of degree <= degree_bound through the samples
// (node, value). Requires degree_bound + 1 distinct nodes; any extra samples
// are consistency-checked (throws InconsistentSamples on failure).
Poly interpolate(const std::vector<std::pair<Int, Rat>>& samples,
                 unsigned degree_bound);

// Rational roots with multiplicities, found by candidate testing against the
// divisors of the trailing/leading integer coefficients and repeated exact
// deflation. `cofactor` is what remains after removing all rational roots;
// the input polynomial splits over Q iff cofactor is constant.
struct RootReport {
    std::vector<std::pair<Rat, unsigned>> roots; // sorted ascending
    Poly cofactor;
    bool splits_over_integers() const;
};
RootReport rational_roots(const Poly& p);

} // namespace deligne

#endif
