#ifndef DELIGNE_CENTER_HPP
#define DELIGNE_CENTER_HPP

#include <utility>
#include <vector>

#include "deligne/partition.hpp"
#include "deligne/poly.hpp"

namespace deligne {

// Modified Bernoulli polynomial: the unique polynomial of degree <= i+1 with
// P_i(n) = sum_{k=1}^{n} ((n+1)/2 - k)^i for every positive integer n.
// Built by interpolation from n = 1..i+3; the spare node is a consistency check.
Poly modified_bernoulli(unsigned i);

// Values of the Duflo-normalized central generators on the (interpolated)
// representation with label (lambda, mu): values[i-1] = chi_{lambda,mu}(C_i).
struct CentralCharacter {
    std::vector<Poly> values;

    unsigned imax() const { return static_cast<unsigned>(values.size()); }
    bool operator==(const CentralCharacter&) const = default;
};

// The label entries may be arbitrary rationals, not just partitions.
CentralCharacter central_character(const std::vector<Rat>& lambda,
                                   const std::vector<Rat>& mu, unsigned imax);

CentralCharacter central_character(const Partition& lambda, const Partition& mu,
                                   unsigned imax);

// All partition pairs with |lambda|, |mu| <= bound whose central character
// matches chi entrywise. An empty result only means no witness within the
// bound, not a membership disproof.
std::vector<std::pair<Partition, Partition>> sigma_probe(const CentralCharacter& chi,
                                                         unsigned bound);

} // namespace deligne

#endif
