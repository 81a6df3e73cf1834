#ifndef DELIGNE_INVARIANTS_HPP
#define DELIGNE_INVARIANTS_HPP

#include <cstdint>

#include "deligne/partition.hpp"
#include "deligne/poly.hpp"
#include "deligne/series.hpp"
#include "deligne/symfunc.hpp"

namespace deligne {

// Generators of multi-matrix invariant rings are labeled by cyclic words
// (necklaces) in m letters. GL: necklaces up to rotation. OSp: necklaces up
// to rotation and reversal, excluding odd-length achiral classes (their
// traces vanish on (skew-)symmetric matrices).
enum class NecklaceVariant { GL, OSp };

// Number of degree-j generators. Exhaustive enumeration of canonical
// (lex-least) representatives; throws DomainError for j = 0.
std::uint64_t necklace_generators(NecklaceVariant variant, unsigned letters, unsigned length);

// Hilbert series of ((S g)^{(x) m})^g: the free commutative algebra on the
// necklace generators, prod_j (1 - q^j)^{-a_j}.
Series multi_invariant_hilbert(NecklaceVariant variant, unsigned letters, unsigned trunc);

// GL only: the enumerated Hilbert series equals prod_{j>=1} (1 - m q^j)^{-1}.
bool verify_hilser(unsigned letters, unsigned trunc);

// Hilbert series of Hom(X_{lambda,mu}, E), E the harmonic part of S g for
// g = gl_t: the principal specialization of the Kronecker product.
Series harmonic_hilbert(const Partition& lambda, const Partition& mu, unsigned trunc);

// Degree-d coefficient of the Hilbert series of a symmetric algebra on an
// object of dimension dim_g: binom(dim_g + d - 1, d), for d = 0..trunc.
std::vector<Poly> sym_alg_hilbert(const Poly& dim_g, unsigned trunc);

// The Kostant-type series identity
//   sum_{|lambda|=|mu|<=N} harmonic_hilbert(lambda,mu) dim X_{lambda,mu}
//     = Hilb(S gl_t) * prod_{j>=1} (1 - q^j)          (coefficient-wise in q,
// as exact polynomials in t). With paper_rhs the right-hand side is replaced
// by 1/(1-q t^2) * prod (1 - q^j), which fails at q^2; the report carries the
// first mismatching degree and both coefficients.
struct KostantCheck {
    bool ok = false;
    int first_bad_degree = -1;
    Poly lhs_coeff, rhs_coeff;
};
KostantCheck kostant_identity_check(unsigned trunc, bool paper_rhs = false);

} // namespace deligne

#endif
