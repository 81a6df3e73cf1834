#include "deligne/dims.hpp"

#include "deligne/binomial_form.hpp"
#include "deligne/errors.hpp"
#include "deligne/ratfunc.hpp"

namespace deligne {

namespace {

Poly linear(const Rat& shift) {
    // t + shift
    return Poly(std::vector<Rat>{shift, Rat(1)});
}

Poly checked(const RatFunc& f) {
    Poly p = f.to_poly();
    to_binomial(p); // integer-valuedness assertion
    return p;
}

} // namespace

Poly dim_gl(const Partition& lambda, const Partition& mu) {
    long r = static_cast<long>(lambda.length());
    long s = static_cast<long>(mu.length());
    RatFunc acc(d_lambda(lambda) * d_lambda(mu));
    for (long i = 1; i <= r; ++i) {
        long li = lambda.part(i - 1);
        acc *= RatFunc(binom_poly(linear(Rat(li - i - s)), li));
        acc /= RatFunc(Rat(binomial(Int(li + r - i), li)));
    }
    for (long j = 1; j <= s; ++j) {
        long mj = mu.part(j - 1);
        acc *= RatFunc(binom_poly(linear(Rat(mj - j - r)), mj));
        acc /= RatFunc(Rat(binomial(Int(mj + s - j), mj)));
    }
    for (long i = 1; i <= r; ++i)
        for (long j = 1; j <= s; ++j) {
            long li = lambda.part(i - 1), mj = mu.part(j - 1);
            acc *= RatFunc(linear(Rat(1 + li + mj - i - j)), linear(Rat(1 - i - j)));
        }
    return checked(acc);
}

Poly dim_o(const Partition& lambda) {
    long r = static_cast<long>(lambda.length());
    RatFunc acc(1);
    Rat half = make_rat(1, 2);
    for (long i = 1; i <= r; ++i) {
        long li = lambda.part(i - 1);
        // (t/2 + li - i) / (t/2 - i)
        Poly num_lin(std::vector<Rat>{Rat(li - i), half});
        Poly den_lin(std::vector<Rat>{Rat(-i), half});
        acc *= RatFunc(num_lin, den_lin);
        acc *= RatFunc(binom_poly(linear(Rat(li - r - i - 1)), li));
        acc /= RatFunc(Rat(binomial(Int(li + r - i), li)));
    }
    for (long i = 1; i <= r; ++i)
        for (long j = i + 1; j <= r; ++j) {
            long li = lambda.part(i - 1), lj = lambda.part(j - 1);
            acc *= RatFunc(Rat(li - lj + j - i));
            acc *= RatFunc(linear(Rat(li + lj - i - j)), linear(Rat(-i - j)));
            acc /= RatFunc(Rat(j - i));
        }
    return checked(acc);
}

Int weyl_dim_gl(const std::vector<long>& weight) {
    std::size_t n = weight.size();
    for (std::size_t i = 1; i < n; ++i)
        if (weight[i] > weight[i - 1])
            throw DomainError("weyl_dim_gl: weight is not dominant");
    Rat dim(1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            long gap = static_cast<long>(j - i);
            dim *= make_rat(Int(weight[i] - weight[j] + gap), Int(gap));
        }
    return to_int(dim);
}

bool verify_duality(const Partition& lambda, const Partition& mu) {
    return dim_gl(lambda, mu) == dim_gl(mu, lambda);
}

bool verify_tensor_V(unsigned m) {
    Poly t = Poly::variable();
    if (m == 0) return dim_gl({}, {}) * t == dim_gl({1}, {});
    Partition row{m};
    Poly lhs = dim_gl(row, row) * t;
    Poly rhs = dim_gl(Partition{m + 1}, row) + dim_gl(Partition{m, 1}, row);
    return lhs == rhs;
}

bool verify_Q_sequence(unsigned ell) {
    Poly t = Poly::variable();
    Poly box = binom_poly(t + Poly(Rat(static_cast<long>(ell) - 1)), ell);
    Poly lhs = box * box;
    Poly rhs;
    for (unsigned m = 0; m <= ell; ++m) {
        Partition row = m == 0 ? Partition{} : Partition{m};
        rhs += dim_gl(row, row);
    }
    return lhs == rhs;
}

} // namespace deligne
