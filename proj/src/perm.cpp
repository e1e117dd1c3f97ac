#include "rauzy/perm.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace rauzy {

ReducedPermutation::ReducedPermutation(std::vector<int> bottom) : bottom_(std::move(bottom)) {
    int n = static_cast<int>(bottom_.size());
    if (n == 0)
        throw std::invalid_argument("empty permutation");
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : bottom_) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("not a permutation of 1..n");
        seen[static_cast<size_t>(v)] = 1;
    }
}

ReducedPermutation ReducedPermutation::parse(std::string_view text) {
    std::stringstream ss{std::string(text)};
    std::vector<int> vals;
    int v;
    while (ss >> v)
        vals.push_back(v);
    std::string rest;
    ss.clear();
    if (ss >> rest && !rest.empty())
        throw std::invalid_argument("bad permutation text: '" + std::string(text) + "'");
    if (vals.empty())
        throw std::invalid_argument("bad permutation text: '" + std::string(text) + "'");
    return ReducedPermutation(std::move(vals));
}

int ReducedPermutation::position_of(int letter) const {
    for (int j = 1; j <= size(); ++j)
        if (at(j) == letter)
            return j;
    throw std::invalid_argument("letter out of range");
}

bool ReducedPermutation::is_irreducible() const {
    int n = size();
    int mx = 0;
    for (int j = 1; j < n; ++j) {
        mx = std::max(mx, at(j));
        if (mx == j)
            return false;
    }
    return true;
}

bool ReducedPermutation::is_standard() const {
    return at(1) == size() && at(size()) == 1;
}

uint64_t ReducedPermutation::packed() const {
    if (size() > 16)
        throw std::domain_error("packed form requires n <= 16");
    uint64_t key = 0;
    for (int j = size(); j >= 1; --j)
        key = (key << 4) | static_cast<uint64_t>(at(j) - 1);
    return key;
}

ReducedPermutation ReducedPermutation::from_packed(uint64_t key, int n) {
    std::vector<int> bottom(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        bottom[static_cast<size_t>(j)] = static_cast<int>((key >> (4 * j)) & 0xF) + 1;
    }
    return ReducedPermutation(std::move(bottom));
}

std::string ReducedPermutation::str() const {
    std::string out;
    for (int j = 1; j <= size(); ++j) {
        if (j > 1) out += ' ';
        out += std::to_string(at(j));
    }
    return out;
}

LabeledPermutation::LabeledPermutation(std::vector<std::string> top, std::vector<std::string> bottom)
    : top_(std::move(top)), bottom_(std::move(bottom)) {
    if (top_.empty() || top_.size() != bottom_.size())
        throw std::invalid_argument("rows must be nonempty and of equal length");
    auto sorted = [](std::vector<std::string> v) { std::sort(v.begin(), v.end()); return v; };
    auto st = sorted(top_);
    if (std::adjacent_find(st.begin(), st.end()) != st.end())
        throw std::invalid_argument("repeated label in top row");
    if (st != sorted(bottom_))
        throw std::invalid_argument("rows must enumerate the same alphabet");
}

LabeledPermutation LabeledPermutation::parse(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    if (slash == std::string::npos)
        throw std::invalid_argument("two-row form needs a '/'");
    auto words = [](const std::string& part) {
        std::stringstream ss(part);
        std::vector<std::string> w;
        std::string tok;
        while (ss >> tok)
            w.push_back(tok);
        return w;
    };
    return LabeledPermutation(words(s.substr(0, slash)), words(s.substr(slash + 1)));
}

LabeledPermutation LabeledPermutation::section(const ReducedPermutation& pi) {
    std::vector<std::string> top, bottom;
    for (int j = 1; j <= pi.size(); ++j) {
        top.push_back(std::to_string(j));
        bottom.push_back(std::to_string(pi.at(j)));
    }
    return LabeledPermutation(std::move(top), std::move(bottom));
}

ReducedPermutation LabeledPermutation::reduce() const {
    std::map<std::string, int> top_pos;
    for (int j = 0; j < size(); ++j)
        top_pos[top_[static_cast<size_t>(j)]] = j + 1;
    std::vector<int> word;
    word.reserve(static_cast<size_t>(size()));
    for (const auto& label : bottom_)
        word.push_back(top_pos.at(label));
    return ReducedPermutation(std::move(word));
}

ReducedPermutation rauzy_move(const ReducedPermutation& pi, MoveKind kind) {
    if (kind == MoveKind::Invert)
        return invert_sides(pi);
    if (!pi.is_irreducible())
        throw std::domain_error("Rauzy move on reducible permutation");
    int n = pi.size();
    if (kind == MoveKind::Top) {
        // move the last bottom letter just after the position of letter n
        int m = pi.position_of(n);
        std::vector<int> w;
        w.reserve(static_cast<size_t>(n));
        for (int j = 1; j <= m; ++j) w.push_back(pi.at(j));
        w.push_back(pi.at(n));
        for (int j = m + 1; j <= n - 1; ++j) w.push_back(pi.at(j));
        return ReducedPermutation(std::move(w));
    }
    // Bottom: move letter n of the top row just after the last bottom letter,
    // then relabel by the new top order.
    int m = pi.at(n);
    std::vector<int> w;
    w.reserve(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j) {
        int v = pi.at(j);
        if (v == n)
            w.push_back(m + 1);
        else if (v <= m)
            w.push_back(v);
        else
            w.push_back(v + 1);
    }
    return ReducedPermutation(std::move(w));
}

ReducedPermutation invert_sides(const ReducedPermutation& pi) {
    int n = pi.size();
    std::vector<int> pos(static_cast<size_t>(n) + 1);
    for (int j = 1; j <= n; ++j)
        pos[static_cast<size_t>(pi.at(j))] = j;
    std::vector<int> w(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j)
        w[static_cast<size_t>(j - 1)] = n + 1 - pos[static_cast<size_t>(n + 1 - j)];
    return ReducedPermutation(std::move(w));
}

ReducedPermutation concatenate(const ReducedPermutation& a, const ReducedPermutation& b) {
    std::vector<int> w = a.bottom();
    for (int v : b.bottom())
        w.push_back(v + a.size());
    return ReducedPermutation(std::move(w));
}

ReducedPermutation concatenate(const std::vector<ReducedPermutation>& factors) {
    if (factors.empty())
        throw std::invalid_argument("empty concatenation");
    ReducedPermutation out = factors.front();
    for (size_t i = 1; i < factors.size(); ++i)
        out = concatenate(out, factors[i]);
    return out;
}

std::vector<ReducedPermutation> decompose(const ReducedPermutation& pi) {
    std::vector<ReducedPermutation> blocks;
    int n = pi.size();
    int start = 1, mx = 0;
    for (int j = 1; j <= n; ++j) {
        mx = std::max(mx, pi.at(j));
        if (mx == j) {
            std::vector<int> w;
            w.reserve(static_cast<size_t>(j - start + 1));
            for (int k = start; k <= j; ++k)
                w.push_back(pi.at(k) - (start - 1));
            blocks.emplace_back(std::move(w));
            start = j + 1;
        }
    }
    return blocks;
}

ReducedPermutation degenerate(const ReducedPermutation& pi) {
    if (!pi.is_standard())
        throw std::domain_error("degenerate needs a standard permutation");
    if (pi.size() < 3)
        throw std::domain_error("degenerate needs length >= 3");
    std::vector<int> w;
    w.reserve(static_cast<size_t>(pi.size() - 2));
    for (int j = 2; j <= pi.size() - 1; ++j)
        w.push_back(pi.at(j) - 1);
    return ReducedPermutation(std::move(w));
}

ReducedPermutation co_degenerate(const ReducedPermutation& pi) {
    int n = pi.size();
    std::vector<int> w;
    w.reserve(static_cast<size_t>(n + 2));
    w.push_back(n + 2);
    for (int j = 1; j <= n; ++j)
        w.push_back(pi.at(j) + 1);
    w.push_back(1);
    return ReducedPermutation(std::move(w));
}

ReducedPermutation symmetric(int n) {
    if (n < 1)
        throw std::domain_error("symmetric(n) needs n >= 1");
    std::vector<int> w(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j)
        w[static_cast<size_t>(j - 1)] = n + 1 - j;
    return ReducedPermutation(std::move(w));
}

ReducedPermutation rotation(int n) {
    if (n < 1)
        throw std::domain_error("rotation(n) needs n >= 1");
    if (n == 1)
        return ReducedPermutation({1});
    std::vector<int> w(static_cast<size_t>(n));
    w.front() = n;
    for (int j = 2; j <= n - 1; ++j)
        w[static_cast<size_t>(j - 1)] = j;
    w.back() = 1;
    return ReducedPermutation(std::move(w));
}

ReducedPermutation triple_perm(int a, int b, int c) {
    if (a < 1 || c < 1 || b < 0)
        throw std::domain_error("triple_perm needs a,c >= 1 and b >= 0");
    std::vector<int> w;
    w.reserve(static_cast<size_t>(a + b + c));
    for (int j = 1; j <= c; ++j) w.push_back(a + b + j);
    for (int j = 1; j <= b; ++j) w.push_back(a + j);
    for (int j = 1; j <= a; ++j) w.push_back(j);
    return ReducedPermutation(std::move(w));
}

ReducedPermutation insert_marked_point(const ReducedPermutation& pi, int letter) {
    if (letter < 1 || letter > pi.size())
        throw std::domain_error("letter out of range");
    std::vector<int> w;
    w.reserve(static_cast<size_t>(pi.size() + 1));
    for (int j = 1; j <= pi.size(); ++j) {
        int v = pi.at(j);
        int mapped = v <= letter ? v : v + 1;
        w.push_back(mapped);
        if (v == letter)
            w.push_back(letter + 1);
    }
    return ReducedPermutation(std::move(w));
}

std::vector<int> Constellation::product() const {
    size_t n = tau_t.size();
    std::vector<int> inv_b(n), prod(n);
    for (size_t i = 0; i < n; ++i)
        inv_b[static_cast<size_t>(tau_b[i])] = static_cast<int>(i);
    for (size_t i = 0; i < n; ++i)
        prod[i] = tau_t[static_cast<size_t>(inv_b[i])];
    return prod;
}

Constellation standard_to_constellation(const LabeledPermutation& pi) {
    if (!pi.reduce().is_standard())
        throw std::domain_error("constellation needs a standard permutation");
    int n = pi.size();
    if (n < 2)
        throw std::domain_error("constellation needs length >= 2");
    const std::string& rt = pi.top().front();   // = bottom back
    const std::string& rb = pi.bottom().front(); // = top back

    Constellation c;
    c.alphabet.push_back("(" + rb + "," + rt + ")");
    std::map<std::string, int> index;
    index[rt] = 0;
    index[rb] = 0;
    for (int j = 0; j < n; ++j) {
        const std::string& label = pi.top()[static_cast<size_t>(j)];
        if (label == rt || label == rb)
            continue;
        index[label] = static_cast<int>(c.alphabet.size());
        c.alphabet.push_back(label);
    }

    auto row_cycle = [&](const std::vector<std::string>& row) {
        // cycle (merged, row[1], ..., row[n-2]); row[0] and row[n-1] are the ends
        std::vector<int> tau(c.alphabet.size());
        std::vector<int> order;
        order.push_back(0);
        for (int j = 1; j <= n - 2; ++j)
            order.push_back(index.at(row[static_cast<size_t>(j)]));
        for (size_t i = 0; i < order.size(); ++i)
            tau[static_cast<size_t>(order[i])] = order[(i + 1) % order.size()];
        return tau;
    };
    c.tau_t = row_cycle(pi.top());
    c.tau_b = row_cycle(pi.bottom());
    return c;
}

} // namespace rauzy
