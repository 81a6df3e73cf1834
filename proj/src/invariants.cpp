#include "deligne/invariants.hpp"

#include <algorithm>

#include "deligne/dims.hpp"
#include "deligne/errors.hpp"

namespace deligne {

namespace {

// Lexicographically least rotation (Booth's algorithm).
std::vector<unsigned> least_rotation(const std::vector<unsigned>& w) {
    std::size_t n = w.size();
    std::vector<unsigned> s(w);
    s.insert(s.end(), w.begin(), w.end());
    std::vector<long> f(2 * n, -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
        long i = f[j - k - 1];
        while (i != -1 && s[j] != s[k + i + 1]) {
            if (s[j] < s[k + i + 1]) k = j - i - 1;
            i = f[i];
        }
        if (i == -1 && s[j] != s[k]) {
            if (s[j] < s[k]) k = j;
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    return std::vector<unsigned>(s.begin() + k, s.begin() + k + n);
}

// FKM necklace generation: visits the canonical (lex-least) representative of
// every necklace of the given length exactly once.
template <class Visit>
void fkm_necklaces(unsigned letters, unsigned length, Visit&& visit) {
    std::vector<unsigned> a(length + 1, 0);
    // Iterative stack of (t, p) mirrors the classic recursion.
    struct Frame {
        unsigned t, p, v;
    };
    std::vector<Frame> stack;
    stack.push_back({1, 1, 0});
    while (!stack.empty()) {
        Frame fr = stack.back();
        stack.pop_back();
        if (fr.v != 0) {
            // resume: place value fr.v at position fr.t
            a[fr.t] = fr.v;
            if (fr.v + 1 < letters) stack.push_back({fr.t, fr.p, fr.v + 1});
            stack.push_back({fr.t + 1, fr.t, 0});
            continue;
        }
        if (fr.t > length) {
            if (length % fr.p == 0)
                visit(std::vector<unsigned>(a.begin() + 1, a.begin() + length + 1));
            continue;
        }
        a[fr.t] = a[fr.t - fr.p];
        if (a[fr.t] + 1 < letters) stack.push_back({fr.t, fr.p, a[fr.t] + 1});
        stack.push_back({fr.t + 1, fr.p, 0});
    }
}

bool is_achiral(const std::vector<unsigned>& canonical) {
    std::vector<unsigned> rev(canonical.rbegin(), canonical.rend());
    return least_rotation(rev) == canonical;
}

} // namespace

std::uint64_t necklace_generators(NecklaceVariant variant, unsigned letters, unsigned length) {
    if (length == 0) throw DomainError("necklace_generators: length must be >= 1");
    if (letters == 0) return 0;
    std::uint64_t total = 0, achiral = 0;
    fkm_necklaces(letters, length, [&](const std::vector<unsigned>& w) {
        ++total;
        if (variant == NecklaceVariant::OSp && is_achiral(w)) ++achiral;
    });
    if (variant == NecklaceVariant::GL) return total;
    // Dihedral classes: achiral necklaces are fixed by reversal, the rest pair
    // up. Odd-length achiral classes carry a vanishing trace and are dropped.
    std::uint64_t chiral_pairs = (total - achiral) / 2;
    return length % 2 == 0 ? chiral_pairs + achiral : chiral_pairs;
}

Series multi_invariant_hilbert(NecklaceVariant variant, unsigned letters, unsigned trunc) {
    std::vector<GeomTerm> terms;
    for (unsigned j = 1; j <= trunc; ++j) {
        std::uint64_t a = necklace_generators(variant, letters, j);
        if (a > 0) terms.push_back({j, -static_cast<long>(a)});
    }
    return geom_product(terms, trunc);
}

bool verify_hilser(unsigned letters, unsigned trunc) {
    std::vector<GeomTerm> closed;
    for (unsigned j = 1; j <= trunc; ++j)
        closed.push_back({j, -1, RatFunc(Rat(static_cast<long>(letters)))});
    return multi_invariant_hilbert(NecklaceVariant::GL, letters, trunc) ==
           geom_product(closed, trunc);
}

Series harmonic_hilbert(const Partition& lambda, const Partition& mu, unsigned trunc) {
    if (lambda.size() != mu.size())
        throw SizeMismatch("harmonic_hilbert: |lambda| != |mu|");
    return principal_spec(kronecker(lambda, mu), trunc);
}

std::vector<Poly> sym_alg_hilbert(const Poly& dim_g, unsigned trunc) {
    std::vector<Poly> coeffs;
    coeffs.reserve(trunc + 1);
    for (unsigned d = 0; d <= trunc; ++d)
        coeffs.push_back(binom_poly(dim_g + Poly(Rat(static_cast<long>(d) - 1)), d));
    return coeffs;
}

KostantCheck kostant_identity_check(unsigned trunc, bool paper_rhs) {
    // LHS: sum over |lambda| = |mu| = n <= trunc. Pairs of size n contribute
    // nothing below q^n, so the sum is complete mod q^{trunc+1}.
    Series lhs(trunc);
    for (unsigned n = 0; n <= trunc; ++n) {
        auto parts = partitions_of(n);
        for (const auto& lambda : parts)
            for (const auto& mu : parts)
                lhs += harmonic_hilbert(lambda, mu, trunc) * RatFunc(dim_gl(lambda, mu));
    }

    std::vector<GeomTerm> euler;
    for (unsigned j = 1; j <= trunc; ++j) euler.push_back({j, 1});
    Series euler_series = geom_product(euler, trunc);

    Series rhs(trunc);
    if (paper_rhs) {
        Poly t = Poly::variable();
        rhs = geom_product({{1, -1, RatFunc(t * t)}}, trunc) * euler_series;
    } else {
        Series hilb(trunc);
        Poly t = Poly::variable();
        auto sym = sym_alg_hilbert(t * t, trunc);
        for (unsigned d = 0; d <= trunc; ++d) hilb.set_coeff(d, RatFunc(sym[d]));
        rhs = hilb * euler_series;
    }

    KostantCheck result;
    for (unsigned d = 0; d <= trunc; ++d) {
        Poly l = lhs.coeff_poly(d);
        Poly r = rhs.coeff_poly(d);
        if (!(l == r)) {
            result.ok = false;
            result.first_bad_degree = static_cast<int>(d);
            result.lhs_coeff = l;
            result.rhs_coeff = r;
            return result;
        }
    }
    result.ok = true;
    return result;
}

} // namespace deligne
