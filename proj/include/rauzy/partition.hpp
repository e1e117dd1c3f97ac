#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace rauzy {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Integer partition stored as a weakly decreasing sequence of positive
/// parts. Zero parts are dropped on construction; negative parts are
/// rejected. Two partitions compare equal iff their canonical sequences do.
class IntegerPartition {
public:
    IntegerPartition() = default;
    explicit IntegerPartition(std::vector<int> parts);

    /// Parses "4,3,2,1" (parts in any order) or "-" for the empty partition.
    static IntegerPartition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int sum() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    bool contains(int m) const;
    int multiplicity(int m) const;
    bool all_odd() const;

    /// s(p) + l(p) even, the existence condition for a surface profile.
    bool valid_profile_parity() const { return (sum() + length()) % 2 == 0; }

    /// Distinct part values, decreasing.
    std::vector<int> distinct_parts() const;

    /// Canonical text: "4,3,2,1"; the empty partition prints as "-".
    std::string str() const;

    auto operator<=>(const IntegerPartition&) const = default;

private:
    std::vector<int> parts_;
};

struct Genus {
    int g = 0;
};

/// Multiset union.
IntegerPartition disjoint_union(const IntegerPartition& p, const IntegerPartition& q);

/// p with one copy of m removed. Throws std::domain_error if m is not a part.
IntegerPartition remove_part(const IntegerPartition& p, int m);

/// Splitting p_{m|a}: one copy of m replaced by parts a and m-a-1, zero
/// parts dropped. Requires m in p and 0 <= a <= m-1.
IntegerPartition split(const IntegerPartition& p, int m, int a);

/// Collapsing p_{ml (.) mr}: one copy each of ml and mr replaced by
/// ml+mr-1. Requires the pair as a sub-multiset.
IntegerPartition collapse(const IntegerPartition& p, int ml, int mr);

/// Centralizer order z_p = prod_i e_i! * i^e_i; z of the empty partition is 1.
BigInt centralizer_order(const IntegerPartition& p);

/// All 2^l(p) sub-multisets obtained by keeping/dropping each part
/// occurrence independently; duplicates appear with multiplicity.
std::vector<IntegerPartition> subpartitions_with_multiplicity(const IntegerPartition& p);

/// Distinct sub-multisets of p (each once), together with the complement.
std::vector<std::pair<IntegerPartition, IntegerPartition>>
distinct_splits(const IntegerPartition& p);

/// g with 2g - 2 = s(p) - l(p). Throws std::domain_error when s+l is odd.
Genus genus_of(const IntegerPartition& p);

BigInt factorial(int n);
/// C(n, k); zero for k < 0 or k > n (n >= 0).
BigInt binomial(int n, int k);

} // namespace rauzy
