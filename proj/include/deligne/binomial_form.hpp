#ifndef DELIGNE_BINOMIAL_FORM_HPP
#define DELIGNE_BINOMIAL_FORM_HPP

#include <vector>

#include "deligne/poly.hpp"
#include "deligne/rational.hpp"

namespace deligne {

// An integer-valued polynomial written as sum_k b_k * binom(t, k).
struct BinomialForm {
    std::vector<Int> b;

    bool operator==(const BinomialForm&) const = default;
};

// Finite-difference expansion b_k = (Delta^k p)(0). Succeeds iff p is
// integer-valued; throws NotIntegerValued otherwise.
BinomialForm to_binomial(const Poly& p);

Poly from_binomial(const BinomialForm& f);

} // namespace deligne

#endif
