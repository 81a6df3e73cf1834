#include "deligne/series.hpp"

#include <sstream>

#include "deligne/errors.hpp"

namespace deligne {

namespace {

void check_same_trunc(const Series& a, const Series& b) {
    if (a.trunc() != b.trunc())
        throw TruncationMismatch("series truncation orders differ");
}

} // namespace

Series Series::one(unsigned trunc) {
    Series s(trunc);
    s.set_coeff(0, RatFunc(1));
    return s;
}

Series Series::monomial(unsigned trunc, unsigned k, RatFunc coeff) {
    Series s(trunc);
    if (k <= trunc) s.set_coeff(k, std::move(coeff));
    return s;
}

const RatFunc& Series::coeff(unsigned k) const {
    if (k >= coeffs_.size()) throw DomainError("series coefficient beyond truncation");
    return coeffs_[k];
}

void Series::set_coeff(unsigned k, RatFunc v) {
    if (k >= coeffs_.size()) throw DomainError("series coefficient beyond truncation");
    coeffs_[k] = std::move(v);
}

Series Series::operator-() const {
    Series r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Series& Series::operator+=(const Series& o) {
    check_same_trunc(*this, o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

Series& Series::operator-=(const Series& o) {
    check_same_trunc(*this, o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
}

Series operator*(const Series& a, const Series& b) {
    check_same_trunc(a, b);
    Series r(a.trunc());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return r;
}

Series& Series::operator*=(const Series& o) {
    *this = *this * o;
    return *this;
}

Series& Series::operator*=(const RatFunc& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Series Series::inverse() const {
    if (coeffs_[0].is_zero())
        throw NonInvertible("series with zero constant term has no inverse");
    RatFunc c0inv = coeffs_[0].inverse();
    Series r(trunc());
    r.coeffs_[0] = c0inv;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        RatFunc acc;
        for (std::size_t i = 1; i <= k; ++i) {
            if (coeffs_[i].is_zero() || r.coeffs_[k - i].is_zero()) continue;
            acc += coeffs_[i] * r.coeffs_[k - i];
        }
        r.coeffs_[k] = -(c0inv * acc);
    }
    return r;
}

Series Series::pow(long e) const {
    Series base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Series r = Series::one(trunc());
    while (n > 0) {
        if (n & 1) r *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return r;
}

Series Series::shifted(unsigned k) const {
    Series r(trunc());
    for (std::size_t i = 0; i + k < coeffs_.size(); ++i) r.coeffs_[i + k] = coeffs_[i];
    return r;
}

Series Series::prefix(unsigned new_trunc) const {
    if (new_trunc > trunc()) throw TruncationMismatch("prefix beyond stored truncation");
    Series r(new_trunc);
    for (unsigned k = 0; k <= new_trunc; ++k) r.coeffs_[k] = coeffs_[k];
    return r;
}

bool Series::is_polynomial() const {
    for (const auto& c : coeffs_)
        if (!c.is_poly()) return false;
    return true;
}

std::string Series::str(const char* var, const char* tvar) const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const RatFunc& c = coeffs_[k];
        if (c.is_zero()) continue;
        std::string cs;
        bool is_scalar = c.is_poly() && c.num().is_constant();
        if (is_scalar) {
            Rat v = c.num().constant_value();
            bool neg = v < 0;
            Rat mag = neg ? Rat(-v) : v;
            if (first) {
                if (neg) out << "-";
            } else {
                out << (neg ? " - " : " + ");
            }
            if (k == 0 || mag != 1) {
                out << rat_str(mag);
                if (k > 0) out << "*";
            }
        } else {
            if (!first) out << " + ";
            out << "(" << c.str(tvar) << ")";
            if (k > 0) out << "*";
        }
        if (k >= 1) {
            out << var;
            if (k > 1) out << "^" << k;
        }
        first = false;
    }
    if (first) out << "0";
    out << " + O(" << var << "^" << coeffs_.size() << ")";
    return out.str();
}

Series geom_product(const std::vector<GeomTerm>& terms, unsigned trunc) {
    Series r = Series::one(trunc);
    for (const auto& term : terms) {
        if (term.expo == 0) throw DomainError("geom_product: factor with q^0");
        if (term.expo > trunc || term.power == 0) continue;
        Series base = Series::one(trunc);
        base.set_coeff(term.expo, -term.scale);
        r *= base.pow(term.power);
    }
    return r;
}

} // namespace deligne
