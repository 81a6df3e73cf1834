#include "deligne/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "deligne/errors.hpp"

namespace deligne {

Poly::Poly(const Rat& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

Poly::Poly(long constant) : Poly(Rat(constant)) {}

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

Poly Poly::variable() {
    return Poly(std::vector<Rat>{Rat(0), Rat(1)});
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat Poly::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rat(0);
}

const Rat& Poly::leading() const {
    if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    normalize();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(c));
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly& Poly::operator*=(const Rat& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Poly Poly::pow(unsigned long e) const {
    Poly r(1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

Rat Poly::eval(const Rat& x) const {
    Rat r(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    Poly rem = a;
    if (a.degree() < b.degree()) return {Poly(), rem};
    std::vector<Rat> q(a.degree() - b.degree() + 1, Rat(0));
    const Rat& lead = b.leading();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        Rat factor = rem.leading() / lead;
        q[shift] = factor;
        // rem -= factor * t^shift * b
        std::vector<Rat> sub(shift + b.coeffs_.size(), Rat(0));
        for (std::size_t k = 0; k < b.coeffs_.size(); ++k) sub[shift + k] = factor * b.coeffs_[k];
        rem -= Poly(std::move(sub));
    }
    return {Poly(std::move(q)), rem};
}

Poly Poly::divexact(const Poly& b) const {
    auto [q, r] = divmod(*this, b);
    if (!r.is_zero()) throw InternalDenominator("inexact polynomial division");
    return q;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.is_zero() ? x : x.monic();
}

Poly Poly::monic() const {
    if (is_zero()) throw DomainError("monic of the zero polynomial");
    Poly r = *this;
    Rat inv = Rat(1) / leading();
    for (auto& c : r.coeffs_) c *= inv;
    return r;
}

std::string Poly::str(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Rat c = coeffs_[k];
        if (c == 0) continue;
        bool neg = c < 0;
        Rat mag = neg ? Rat(-c) : c;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        if (k == 0) {
            out << rat_str(mag);
        } else {
            if (mag != 1) out << rat_str(mag) << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

Poly binom_poly(const Poly& p, unsigned long k) {
    Poly r(1);
    for (unsigned long j = 0; j < k; ++j) r *= p - Poly(Rat(Int(j)));
    return r * make_rat(1, factorial(k));
}

Poly interpolate(const std::vector<std::pair<Int, Rat>>& samples,
                 unsigned degree_bound) {
    if (samples.size() < degree_bound + 1)
        throw DomainError("interpolate: need at least degree_bound + 1 samples");
    // Newton divided differences on the first degree_bound + 1 nodes.
    std::size_t m = degree_bound + 1;
    std::vector<Rat> nodes(m), dd(m);
    for (std::size_t i = 0; i < m; ++i) {
        nodes[i] = Rat(samples[i].first);
        dd[i] = samples[i].second;
    }
    for (std::size_t level = 1; level < m; ++level)
        for (std::size_t i = m - 1; i >= level; --i) {
            Rat dx = nodes[i] - nodes[i - level];
            if (dx == 0) throw DomainError("interpolate: repeated node");
            dd[i] = (dd[i] - dd[i - 1]) / dx;
        }
    Poly result;
    Poly basis(1);
    Poly t = Poly::variable();
    for (std::size_t i = 0; i < m; ++i) {
        result += dd[i] * basis;
        basis *= t - Poly(nodes[i]);
    }
    for (std::size_t i = m; i < samples.size(); ++i)
        if (result.eval(Rat(samples[i].first)) != samples[i].second)
            throw InconsistentSamples("interpolate: extra sample off the fitted polynomial");
    return result;
}

bool RootReport::splits_over_integers() const {
    if (cofactor.degree() > 0) return false;
    return std::all_of(roots.begin(), roots.end(),
                       [](const auto& r) { return is_integer(r.first); });
}

namespace {

std::vector<Int> positive_divisors(Int n) {
    n = abs(n);
    std::vector<Int> divs;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            divs.push_back(d);
            Int q = n / d;
            if (q != d) divs.push_back(q);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

} // namespace

RootReport rational_roots(const Poly& p) {
    RootReport rep;
    rep.cofactor = p;
    if (p.is_zero()) return rep;

    std::map<Rat, unsigned> mult;

    // Factor out t^k.
    unsigned zero_mult = 0;
    while (!rep.cofactor.is_zero() && rep.cofactor.coeff(0) == 0) {
        std::vector<Rat> shifted(rep.cofactor.coeffs().begin() + 1, rep.cofactor.coeffs().end());
        rep.cofactor = Poly(std::move(shifted));
        ++zero_mult;
    }
    if (zero_mult > 0) mult[Rat(0)] = zero_mult;

    while (rep.cofactor.degree() >= 1) {
        // Clear denominators and content to get a primitive integer polynomial.
        Int den_lcm = 1;
        for (const Rat& c : rep.cofactor.coeffs()) {
            Int d = c.get_den();
            den_lcm = den_lcm / ::gcd(den_lcm, d) * d;
        }
        std::vector<Int> ic;
        for (const Rat& c : rep.cofactor.coeffs())
            ic.push_back(Int(c.get_num() * (den_lcm / c.get_den())));
        Int a0 = ic.front(), lead = ic.back();

        bool found = false;
        for (const Int& pnum : positive_divisors(a0)) {
            for (const Int& qden : positive_divisors(lead)) {
                for (int sign : {1, -1}) {
                    Rat cand = make_rat(sign * pnum, qden);
                    if (rep.cofactor.eval(cand) == 0) {
                        // Deflate by (t - cand).
                        Poly lin(std::vector<Rat>{-cand, Rat(1)});
                        rep.cofactor = rep.cofactor.divexact(lin);
                        ++mult[cand];
                        found = true;
                    }
                    if (found) break;
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;
    }

    rep.roots.assign(mult.begin(), mult.end());
    return rep;
}

} // namespace deligne
