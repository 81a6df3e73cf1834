#ifndef DELIGNE_PARTITION_HPP
#define DELIGNE_PARTITION_HPP

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "deligne/rational.hpp"

namespace deligne {

// Integer partition: weakly decreasing positive parts. Trailing zeros are
// stripped on construction, so equality and ordering are structural.
class Partition {
  public:
    Partition() = default;
    Partition(std::initializer_list<unsigned> parts);
    explicit Partition(std::vector<unsigned> parts); // throws DomainError if increasing

    std::size_t length() const { return parts_.size(); }
    unsigned size() const; // sum of parts
    bool empty() const { return parts_.empty(); }
    unsigned part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    const std::vector<unsigned>& parts() const { return parts_; }

    Partition conjugate() const;
    // Hook lengths of all cells, row by row.
    std::vector<unsigned> hooks() const;
    // n(lambda) = sum_i (i-1) * lambda_i.
    unsigned n_stat() const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

    // "3,1,1"; the empty partition prints as "-".
    std::string str() const;
    static Partition parse(std::string_view s);

  private:
    std::vector<unsigned> parts_;
};

// Weyl dimension product over the rows of lambda:
// prod_{1<=i<j<=r} (lambda_i - lambda_j + j - i) / (j - i), r = len(lambda).
Rat d_lambda(const Partition& lambda);

// The weight (lambda_1,...,lambda_r, 0,...,0, -mu_s,...,-mu_1) of length n.
// Requires n >= len(lambda) + len(mu).
std::vector<long> padded_weight(const Partition& lambda, const Partition& mu, unsigned n);

// All partitions of n, in lexicographic-descending order: (n) first, 1^n last.
std::vector<Partition> partitions_of(unsigned n);

// All partitions of sizes 0..max_size, sizes ascending.
std::vector<Partition> partitions_up_to(unsigned max_size);

} // namespace deligne

#endif
