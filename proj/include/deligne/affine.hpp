#ifndef DELIGNE_AFFINE_HPP
#define DELIGNE_AFFINE_HPP

#include <vector>

#include "deligne/partition.hpp"
#include "deligne/ratfunc.hpp"
#include "deligne/series.hpp"

namespace deligne {

// Multiplicity series of the sl_n irreducible with highest weight `weight`
// in the basic representation at finite rank n = len(weight):
//   q^{w^2/2} prod_{i<j} (1 - q^{w_i - w_j + j - i}) / prod_{j>=1} (1-q^j)^{n-1}.
// Requires a dominant weight with integer entries summing to zero and even
// norm (automatic for padded weights with |lambda| = |mu|).
Series finite_rank_character(const std::vector<long>& weight, unsigned trunc);

// Stable limit of the finite-rank series as the rank grows; requires
// |lambda| = |mu|.
Series stable_character(const Partition& lambda, const Partition& mu, unsigned trunc);

// gl_t variant: the basic representation picks up a Fock-space tensor
// factor, multiplying the series by prod_{i>=1} (1 - q^i)^{-1}.
Series stable_character_fock(const Partition& lambda, const Partition& mu, unsigned trunc);

// Least rank n (within cap; default cap = 2*trunc + |lambda| + 4) at which
// the finite-rank series equals the stable limit mod q^{trunc+1}, verified
// again at n+1. Throws NoStabilization if the cap is hit.
unsigned stabilization_check(const Partition& lambda, const Partition& mu, unsigned trunc,
                             unsigned cap = 0);

// Interpolated classical Lie algebra families with their dimension
// polynomials and dual Coxeter numbers.
enum class LieFamily { sl, gl, o, sp };

Poly lie_dim(LieFamily family);      // t^2-1, t^2, t(t-1)/2, t(2t+1)
Poly dual_coxeter(LieFamily family); // t, t, t-2, 2t+2

// Sugawara constants at level k: the critical level -g and the Virasoro
// central charge k*dim/(k+g), reduced. gl is rejected for the central charge
// (the scalar formula applies to simple algebras only).
struct SugawaraConstants {
    Poly critical_level;
    RatFunc central_charge;
};
SugawaraConstants sugawara_constants(LieFamily family, const Rat& level);

} // namespace deligne

#endif
