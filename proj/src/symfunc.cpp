#include "deligne/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "deligne/errors.hpp"

namespace deligne {

Rat SchurExpr::coeff(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Rat(0) : it->second;
}

void SchurExpr::add_term(const Partition& p, const Rat& c) {
    if (p.size() != degree_)
        throw SizeMismatch("SchurExpr term of degree " + std::to_string(p.size()) +
                           " in an expression of degree " + std::to_string(degree_));
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(p, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::string SchurExpr::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        bool neg = c < 0;
        Rat mag = neg ? Rat(-c) : c;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        if (mag != 1) out << rat_str(mag) << "*";
        out << "s[" << (p.empty() ? "" : p.str()) << "]";
    }
    return out.str();
}

namespace {

// Border-strip removal on first-column hook lengths (beta numbers):
// beta_i = lambda_i + L - i for i = 1..L. Removing a strip of size r replaces
// some beta by beta - r (if absent from the set); the strip height is the
// number of beta values jumped over, which fixes the sign.
long mn_recurse(const std::vector<unsigned>& lambda, const std::vector<unsigned>& rho,
                std::size_t rho_pos);

std::map<std::pair<std::vector<unsigned>, std::vector<unsigned>>, long> mn_memo;
std::mutex mn_memo_mutex;

long mn_eval(const std::vector<unsigned>& lambda, const std::vector<unsigned>& rho,
             std::size_t rho_pos) {
    if (lambda.empty()) return 1;
    std::vector<unsigned> rho_rest(rho.begin() + rho_pos, rho.end());
    auto key = std::make_pair(lambda, rho_rest);
    {
        std::lock_guard<std::mutex> lock(mn_memo_mutex);
        auto it = mn_memo.find(key);
        if (it != mn_memo.end()) return it->second;
    }
    long value = mn_recurse(lambda, rho, rho_pos);
    std::lock_guard<std::mutex> lock(mn_memo_mutex);
    mn_memo.emplace(std::move(key), value);
    return value;
}

long mn_recurse(const std::vector<unsigned>& lambda, const std::vector<unsigned>& rho,
                std::size_t rho_pos) {
    unsigned r = rho[rho_pos];
    std::size_t len = lambda.size();
    std::vector<long> beta(len);
    for (std::size_t i = 0; i < len; ++i)
        beta[i] = static_cast<long>(lambda[i]) + static_cast<long>(len - 1 - i);

    long total = 0;
    for (std::size_t i = 0; i < len; ++i) {
        long target = beta[i] - static_cast<long>(r);
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;

        int height = 0;
        for (long b : beta)
            if (b > target && b < beta[i]) ++height;

        std::vector<long> nb = beta;
        nb[i] = target;
        std::sort(nb.begin(), nb.end(), std::greater<>());
        std::vector<unsigned> next;
        next.reserve(len);
        for (std::size_t k = 0; k < len; ++k) {
            long part = nb[k] - static_cast<long>(len - 1 - k);
            if (part > 0) next.push_back(static_cast<unsigned>(part));
        }
        long sub = mn_eval(next, rho, rho_pos + 1);
        total += (height % 2 == 0) ? sub : -sub;
    }
    return total;
}

} // namespace

long sn_character(const Partition& lambda, const Partition& rho) {
    if (lambda.size() != rho.size())
        throw SizeMismatch("sn_character: |lambda| = " + std::to_string(lambda.size()) +
                           " but |rho| = " + std::to_string(rho.size()));
    return mn_eval(lambda.parts(), rho.parts(), 0);
}

Int class_size(const Partition& rho) {
    unsigned n = rho.size();
    Int denom = 1;
    unsigned run = 0;
    unsigned prev = 0;
    for (unsigned p : rho.parts()) {
        if (p == prev) {
            ++run;
        } else {
            prev = p;
            run = 1;
        }
        denom *= Int(p) * Int(run);
    }
    return factorial(n) / denom;
}

SchurExpr kronecker(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw SizeMismatch("kronecker: partition sizes differ");
    unsigned n = lambda.size();
    SchurExpr result(n);
    auto nus = partitions_of(n);
    auto rhos = partitions_of(n);
    Int nfact = factorial(n);
    for (const auto& nu : nus) {
        Int acc = 0;
        for (const auto& rho : rhos)
            acc += class_size(rho) * Int(sn_character(lambda, rho)) *
                   Int(sn_character(mu, rho)) * Int(sn_character(nu, rho));
        if (acc % nfact != 0)
            throw InternalDenominator("Kronecker coefficient is not an integer");
        Int g = acc / nfact;
        if (g < 0)
            throw InternalDenominator("negative Kronecker coefficient");
        if (g != 0) result.add_term(nu, Rat(g));
    }
    return result;
}

Series principal_spec(const Partition& lambda, unsigned trunc) {
    unsigned lead = lambda.size() + lambda.n_stat();
    if (lambda.empty()) return Series::one(trunc);
    if (lead > trunc) return Series(trunc);
    std::vector<GeomTerm> denom;
    for (unsigned h : lambda.hooks()) denom.push_back({h, -1});
    return geom_product(denom, trunc).shifted(lead);
}

Series principal_spec(const SchurExpr& f, unsigned trunc) {
    Series r(trunc);
    for (const auto& [p, c] : f.terms())
        r += principal_spec(p, trunc) * RatFunc(c);
    return r;
}

} // namespace deligne
