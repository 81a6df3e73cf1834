#include "deligne/binomial_form.hpp"

#include "deligne/errors.hpp"

namespace deligne {

BinomialForm to_binomial(const Poly& p) {
    BinomialForm out;
    if (p.is_zero()) return out;
    std::size_t n = static_cast<std::size_t>(p.degree()) + 1;
    std::vector<Rat> diff(n);
    for (std::size_t i = 0; i < n; ++i) diff[i] = p.eval(Rat(Int(i)));
    out.b.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (!is_integer(diff[0]))
            throw NotIntegerValued("polynomial " + p.str() + " is not integer-valued");
        out.b.push_back(diff[0].get_num());
        for (std::size_t i = 0; i + k + 1 < n; ++i) diff[i] = diff[i + 1] - diff[i];
    }
    return out;
}

Poly from_binomial(const BinomialForm& f) {
    Poly t = Poly::variable();
    Poly r;
    for (std::size_t k = 0; k < f.b.size(); ++k)
        r += Rat(f.b[k]) * binom_poly(t, k);
    return r;
}

} // namespace deligne
