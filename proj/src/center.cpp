#include "deligne/center.hpp"

namespace deligne {

Poly modified_bernoulli(unsigned i) {
    std::vector<std::pair<Int, Rat>> samples;
    for (unsigned n = 1; n <= i + 3; ++n) {
        Rat sum(0);
        for (unsigned k = 1; k <= n; ++k) {
            Rat term = make_rat(Int(n) + 1, 2) - Rat(Int(k));
            sum += rat_pow(term, i);
        }
        samples.emplace_back(Int(n), sum);
    }
    return interpolate(samples, i + 1);
}

namespace {

// ((t+1)/2 + shift)^i - ((t+1)/2 + base)^i contributions use powers of
// linear polynomials with rational coefficients.
Poly affine_half(const Rat& constant, const Rat& t_coeff) {
    return Poly(std::vector<Rat>{constant, t_coeff});
}

} // namespace

CentralCharacter central_character(const std::vector<Rat>& lambda,
                                   const std::vector<Rat>& mu, unsigned imax) {
    CentralCharacter chi;
    chi.values.reserve(imax);
    Rat half = make_rat(1, 2);
    for (unsigned i = 1; i <= imax; ++i) {
        Poly value = modified_bernoulli(i);
        for (std::size_t j = 1; j <= lambda.size(); ++j) {
            // (lambda_j + (t+1)/2 - j)^i - ((t+1)/2 - j)^i
            Rat base = half - Rat(Int(j));
            value += affine_half(lambda[j - 1] + base, half).pow(i);
            value -= affine_half(base, half).pow(i);
        }
        for (std::size_t j = 1; j <= mu.size(); ++j) {
            // (-mu_j - (t+1)/2 + j)^i - (-(t+1)/2 + j)^i
            Rat base = Rat(Int(j)) - half;
            value += affine_half(base - mu[j - 1], -half).pow(i);
            value -= affine_half(base, -half).pow(i);
        }
        chi.values.push_back(std::move(value));
    }
    return chi;
}

CentralCharacter central_character(const Partition& lambda, const Partition& mu,
                                   unsigned imax) {
    std::vector<Rat> l, m;
    for (unsigned p : lambda.parts()) l.emplace_back(static_cast<long>(p));
    for (unsigned p : mu.parts()) m.emplace_back(static_cast<long>(p));
    return central_character(l, m, imax);
}

std::vector<std::pair<Partition, Partition>> sigma_probe(const CentralCharacter& chi,
                                                         unsigned bound) {
    std::vector<std::pair<Partition, Partition>> hits;
    auto labels = partitions_up_to(bound);
    for (const auto& lambda : labels)
        for (const auto& mu : labels)
            if (central_character(lambda, mu, chi.imax()) == chi)
                hits.emplace_back(lambda, mu);
    return hits;
}

} // namespace deligne
