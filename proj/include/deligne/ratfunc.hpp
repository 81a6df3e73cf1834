#ifndef DELIGNE_RATFUNC_HPP
#define DELIGNE_RATFUNC_HPP

#include <string>

#include "deligne/poly.hpp"

namespace deligne {

// Rational function in t over Q.
// Invariants: den is monic and nonzero, gcd(num, den) = 1; zero is 0/1.
class RatFunc {
  public:
    RatFunc() : den_(1) {}
    RatFunc(const Poly& num) : num_(num), den_(1) {}
    RatFunc(const Rat& c) : num_(c), den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}
    RatFunc(Poly num, Poly den); // reduces

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.degree() == 0; }
    // Throws InternalDenominator when a denominator survived where a
    // polynomial was required.
    Poly to_poly() const;

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

    RatFunc inverse() const;

    bool operator==(const RatFunc& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

    // Throws DomainError at a pole.
    Rat eval(const Rat& x) const;

    std::string str(const char* var = "t") const;

  private:
    void reduce();
    Poly num_, den_;
};

} // namespace deligne

#endif
