#include "rauzy/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rauzy {

IntegerPartition::IntegerPartition(std::vector<int> parts) {
    for (int x : parts) {
        if (x < 0)
            throw std::domain_error("partition parts must be nonnegative");
        if (x > 0)
            parts_.push_back(x);
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

IntegerPartition IntegerPartition::parse(std::string_view text) {
    std::string s(text);
    // trim
    auto issp = [](char c) { return c == ' ' || c == '\t'; };
    while (!s.empty() && issp(s.front())) s.erase(s.begin());
    while (!s.empty() && issp(s.back())) s.pop_back();
    if (s.empty() || s == "-")
        return IntegerPartition{};
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        int v;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::domain_error("bad partition text: '" + std::string(text) + "'");
        }
        while (pos < tok.size() && issp(tok[pos])) ++pos;
        if (pos != tok.size() || v <= 0)
            throw std::domain_error("bad partition text: '" + std::string(text) + "'");
        parts.push_back(v);
    }
    if (parts.empty())
        throw std::domain_error("bad partition text: '" + std::string(text) + "'");
    return IntegerPartition(std::move(parts));
}

int IntegerPartition::sum() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool IntegerPartition::contains(int m) const {
    return std::find(parts_.begin(), parts_.end(), m) != parts_.end();
}

int IntegerPartition::multiplicity(int m) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), m));
}

bool IntegerPartition::all_odd() const {
    return std::all_of(parts_.begin(), parts_.end(), [](int x) { return x % 2 == 1; });
}

std::vector<int> IntegerPartition::distinct_parts() const {
    std::vector<int> out;
    for (int x : parts_)
        if (out.empty() || out.back() != x)
            out.push_back(x);
    return out;
}

std::string IntegerPartition::str() const {
    if (parts_.empty())
        return "-";
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

IntegerPartition disjoint_union(const IntegerPartition& p, const IntegerPartition& q) {
    std::vector<int> parts = p.parts();
    parts.insert(parts.end(), q.parts().begin(), q.parts().end());
    return IntegerPartition(std::move(parts));
}

IntegerPartition remove_part(const IntegerPartition& p, int m) {
    std::vector<int> parts = p.parts();
    auto it = std::find(parts.begin(), parts.end(), m);
    if (it == parts.end())
        throw std::domain_error("part " + std::to_string(m) + " not in partition " + p.str());
    parts.erase(it);
    return IntegerPartition(std::move(parts));
}

IntegerPartition split(const IntegerPartition& p, int m, int a) {
    if (a < 0 || a > m - 1)
        throw std::domain_error("split angle out of range");
    IntegerPartition rest = remove_part(p, m);
    std::vector<int> parts = rest.parts();
    parts.push_back(a);
    parts.push_back(m - a - 1);
    return IntegerPartition(std::move(parts)); // zero parts dropped by ctor
}

IntegerPartition collapse(const IntegerPartition& p, int ml, int mr) {
    IntegerPartition rest = remove_part(remove_part(p, ml), mr);
    std::vector<int> parts = rest.parts();
    parts.push_back(ml + mr - 1);
    return IntegerPartition(std::move(parts));
}

BigInt centralizer_order(const IntegerPartition& p) {
    BigInt z = 1;
    const auto& parts = p.parts();
    size_t i = 0;
    while (i < parts.size()) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        long e = static_cast<long>(j - i);
        z *= factorial(static_cast<int>(e));
        BigInt pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(parts[i]),
                      static_cast<unsigned long>(e));
        z *= pw;
        i = j;
    }
    return z;
}

std::vector<IntegerPartition> subpartitions_with_multiplicity(const IntegerPartition& p) {
    const auto& parts = p.parts();
    size_t l = parts.size();
    std::vector<IntegerPartition> out;
    out.reserve(size_t{1} << l);
    for (size_t mask = 0; mask < (size_t{1} << l); ++mask) {
        std::vector<int> q;
        for (size_t i = 0; i < l; ++i)
            if (mask & (size_t{1} << i))
                q.push_back(parts[i]);
        out.emplace_back(std::move(q));
    }
    return out;
}

std::vector<std::pair<IntegerPartition, IntegerPartition>>
distinct_splits(const IntegerPartition& p) {
    std::vector<int> values = p.distinct_parts();
    std::vector<int> mult;
    mult.reserve(values.size());
    for (int v : values)
        mult.push_back(p.multiplicity(v));

    std::vector<std::pair<IntegerPartition, IntegerPartition>> out;
    std::vector<int> take(values.size(), 0);
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == values.size()) {
            std::vector<int> a, b;
            for (size_t j = 0; j < values.size(); ++j) {
                for (int t = 0; t < take[j]; ++t) a.push_back(values[j]);
                for (int t = take[j]; t < mult[j]; ++t) b.push_back(values[j]);
            }
            out.emplace_back(IntegerPartition(std::move(a)), IntegerPartition(std::move(b)));
            return;
        }
        for (take[i] = 0; take[i] <= mult[i]; ++take[i])
            rec(i + 1);
        take[i] = 0;
    };
    rec(0);
    return out;
}

Genus genus_of(const IntegerPartition& p) {
    if (!p.valid_profile_parity())
        throw std::domain_error("not a valid surface profile: " + p.str());
    return Genus{(p.sum() - p.length()) / 2 + 1};
}

BigInt factorial(int n) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
    return f;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

} // namespace rauzy
