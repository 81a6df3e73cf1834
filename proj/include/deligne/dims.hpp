#ifndef DELIGNE_DIMS_HPP
#define DELIGNE_DIMS_HPP

#include <vector>

#include "deligne/partition.hpp"
#include "deligne/poly.hpp"

namespace deligne {

// Dimension polynomial of the simple object X_{lambda,mu} of Rep(GL_t):
// the interpolated Weyl dimension of the padded weight. Evaluated in exact
// rational-function arithmetic; the result is checked to be a polynomial
// (InternalDenominator otherwise) and integer-valued (NotIntegerValued).
Poly dim_gl(const Partition& lambda, const Partition& mu);

// Dimension polynomial of X_lambda in Rep(O_t); same checks.
Poly dim_o(const Partition& lambda);

// Classical Weyl dimension for GL_n at a dominant integral weight:
// prod_{i<j} (w_i - w_j + j - i) / (j - i). Throws DomainError if the weight
// is not weakly decreasing.
Int weyl_dim_gl(const std::vector<long>& weight);

// dim X_{lambda,mu} = dim X_{mu,lambda} as polynomials (duality X* = X_{mu,lambda}).
bool verify_duality(const Partition& lambda, const Partition& mu);

// dim(X_{m,m} (x) V) = dim X_{m+1,m} + dim X_{(m,1),m}; at m = 0 the second
// summand is absent.
bool verify_tensor_V(unsigned m);

// binom(t+l-1, l)^2 = sum_{m=0}^{l} dim X_{m,m}: the composition series of
// S^l V (x) S^l V* refines to one X_{m,m} per m.
bool verify_Q_sequence(unsigned ell);

} // namespace deligne

#endif
