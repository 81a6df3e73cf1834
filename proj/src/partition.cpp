#include "deligne/partition.hpp"

#include <numeric>
#include <sstream>

#include "deligne/errors.hpp"

namespace deligne {

namespace {

void validate_and_strip(std::vector<unsigned>& parts) {
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1])
            throw DomainError("partition parts must be weakly decreasing");
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
}

} // namespace

Partition::Partition(std::initializer_list<unsigned> parts) : parts_(parts) {
    validate_and_strip(parts_);
}

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    validate_and_strip(parts_);
}

unsigned Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0u);
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<unsigned> conj(parts_[0], 0);
    for (unsigned p : parts_)
        for (unsigned j = 0; j < p; ++j) ++conj[j];
    return Partition(std::move(conj));
}

std::vector<unsigned> Partition::hooks() const {
    Partition conj = conjugate();
    std::vector<unsigned> h;
    h.reserve(size());
    for (std::size_t i = 0; i < parts_.size(); ++i)
        for (unsigned j = 0; j < parts_[i]; ++j)
            h.push_back(parts_[i] - j + conj.part(j) - i - 1);
    return h;
}

unsigned Partition::n_stat() const {
    unsigned n = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) n += static_cast<unsigned>(i) * parts_[i];
    return n;
}

std::string Partition::str() const {
    if (parts_.empty()) return "-";
    std::ostringstream out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ",";
        out << parts_[i];
    }
    return out.str();
}

Partition Partition::parse(std::string_view s) {
    if (s == "-" || s.empty()) return {};
    std::vector<unsigned> parts;
    std::string token;
    std::istringstream in{std::string(s)};
    while (std::getline(in, token, ',')) {
        try {
            std::size_t pos = 0;
            long v = std::stol(token, &pos);
            if (pos != token.size() || v < 0) throw DomainError("");
            parts.push_back(static_cast<unsigned>(v));
        } catch (...) {
            throw DomainError("bad partition part: '" + token + "'");
        }
    }
    return Partition(std::move(parts));
}

Rat d_lambda(const Partition& lambda) {
    std::size_t r = lambda.length();
    Rat d(1);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            long diff = static_cast<long>(lambda.part(i)) - static_cast<long>(lambda.part(j));
            d *= make_rat(Int(diff + static_cast<long>(j - i)), Int(static_cast<long>(j - i)));
        }
    return d;
}

std::vector<long> padded_weight(const Partition& lambda, const Partition& mu, unsigned n) {
    if (n < lambda.length() + mu.length())
        throw DomainError("padded_weight: rank smaller than len(lambda) + len(mu)");
    std::vector<long> w(n, 0);
    for (std::size_t i = 0; i < lambda.length(); ++i) w[i] = lambda.part(i);
    for (std::size_t j = 0; j < mu.length(); ++j) w[n - 1 - j] = -static_cast<long>(mu.part(j));
    return w;
}

namespace {

void enumerate_partitions(unsigned remaining, unsigned max_part,
                          std::vector<unsigned>& stack, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(stack));
        return;
    }
    for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
        stack.push_back(p);
        enumerate_partitions(remaining - p, p, stack, out);
        stack.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(unsigned n) {
    std::vector<Partition> out;
    std::vector<unsigned> stack;
    enumerate_partitions(n, n == 0 ? 1 : n, stack, out);
    return out;
}

std::vector<Partition> partitions_up_to(unsigned max_size) {
    std::vector<Partition> out;
    for (unsigned n = 0; n <= max_size; ++n) {
        auto pn = partitions_of(n);
        out.insert(out.end(), pn.begin(), pn.end());
    }
    return out;
}

} // namespace deligne
