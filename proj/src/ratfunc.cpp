#include "deligne/ratfunc.hpp"

#include "deligne/errors.hpp"

namespace deligne {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divexact(g);
        den_ = den_.divexact(g);
    }
    Rat lead = den_.leading();
    if (lead != 1) {
        Rat inv = Rat(1) / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

Poly RatFunc::to_poly() const {
    if (!is_poly())
        throw InternalDenominator("denominator survived: " + str());
    return num_;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    reduce();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    return *this *= o.inverse();
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DomainError("inverse of the zero rational function");
    return RatFunc(den_, num_);
}

Rat RatFunc::eval(const Rat& x) const {
    Rat d = den_.eval(x);
    if (d == 0) throw DomainError("evaluation at a pole: " + str());
    return num_.eval(x) / d;
}

std::string RatFunc::str(const char* var) const {
    if (is_poly()) return num_.str(var);
    std::string n = num_.str(var), d = den_.str(var);
    std::string ns = num_.degree() > 0 ? "(" + n + ")" : n;
    return ns + "/(" + d + ")";
}

} // namespace deligne
