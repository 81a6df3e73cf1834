#ifndef DELIGNE_SYMFUNC_HPP
#define DELIGNE_SYMFUNC_HPP

#include <map>

#include "deligne/partition.hpp"
#include "deligne/series.hpp"

namespace deligne {

// Homogeneous symmetric function of a fixed degree in the Schur basis.
class SchurExpr {
  public:
    explicit SchurExpr(unsigned degree) : degree_(degree) {}

    unsigned degree() const { return degree_; }
    const std::map<Partition, Rat>& terms() const { return terms_; }
    Rat coeff(const Partition& p) const;
    // Throws SizeMismatch unless |p| == degree; zero coefficients are pruned.
    void add_term(const Partition& p, const Rat& c);

    bool operator==(const SchurExpr&) const = default;

    std::string str() const; // "s[3] + s[2,1]"

  private:
    unsigned degree_;
    std::map<Partition, Rat> terms_;
};

// Irreducible S_n character chi^lambda at the class of cycle type rho,
// by the Murnaghan-Nakayama rule (memoized). Throws SizeMismatch unless
// |lambda| == |rho|.
long sn_character(const Partition& lambda, const Partition& rho);

// Size of the conjugacy class of cycle type rho in S_{|rho|}.
Int class_size(const Partition& rho);

// Kronecker product s_lambda * s_mu = sum_nu g_{lambda,mu,nu} s_nu, with
// g from the character inner product. Coefficients are checked to be
// nonnegative integers.
SchurExpr kronecker(const Partition& lambda, const Partition& mu);

// Principal specialization x_i = q^i. For a single Schur function this is
// the closed form q^{|lambda| + n(lambda)} / prod_cells (1 - q^hook);
// extended linearly to SchurExpr.
Series principal_spec(const Partition& lambda, unsigned trunc);
Series principal_spec(const SchurExpr& f, unsigned trunc);

} // namespace deligne

#endif
