#include "rauzy/explore.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace rauzy {

namespace {

/// Open-addressing set of packed keys (n <= 16 fast path).
class PackedSet {
public:
    explicit PackedSet(size_t expected) {
        size_t cap = 16;
        while (cap < expected * 2)
            cap <<= 1;
        slots_.assign(cap, kEmpty);
    }
    bool insert(uint64_t key) { // true if newly inserted
        size_t mask = slots_.size() - 1;
        size_t i = hash(key) & mask;
        while (true) {
            uint64_t cur = slots_[i];
            if (cur == key)
                return false;
            if (cur == kEmpty) {
                slots_[i] = key;
                ++count_;
                if (count_ * 2 > slots_.size())
                    grow();
                return true;
            }
            i = (i + 1) & mask;
        }
    }
    bool contains(uint64_t key) const {
        size_t mask = slots_.size() - 1;
        size_t i = hash(key) & mask;
        while (true) {
            uint64_t cur = slots_[i];
            if (cur == key)
                return true;
            if (cur == kEmpty)
                return false;
            i = (i + 1) & mask;
        }
    }

private:
    // packed keys never use the all-ones pattern (letters are < 16)
    static constexpr uint64_t kEmpty = ~uint64_t{0};
    static size_t hash(uint64_t k) {
        k ^= k >> 33;
        k *= 0xff51afd7ed558ccdULL;
        k ^= k >> 33;
        k *= 0xc4ceb9fe1a85ec53ULL;
        k ^= k >> 33;
        return static_cast<size_t>(k);
    }
    void grow() {
        std::vector<uint64_t> old = std::move(slots_);
        slots_.assign(old.size() * 2, kEmpty);
        size_t mask = slots_.size() - 1;
        for (uint64_t key : old) {
            if (key == kEmpty)
                continue;
            size_t i = hash(key) & mask;
            while (slots_[i] != kEmpty)
                i = (i + 1) & mask;
            slots_[i] = key;
        }
    }
    std::vector<uint64_t> slots_;
    size_t count_ = 0;
};

ReducedPermutation apply_move(const ReducedPermutation& v, MoveKind kind) {
    return kind == MoveKind::Invert ? invert_sides(v) : rauzy_move(v, kind);
}

std::vector<MoveKind> move_set(bool extended) {
    std::vector<MoveKind> moves{MoveKind::Top, MoveKind::Bottom};
    if (extended)
        moves.push_back(MoveKind::Invert);
    return moves;
}

RauzyDiagram build_packed(const ReducedPermutation& seed, const BuildOptions& opts) {
    const int n = seed.size();
    const auto moves = move_set(opts.extended);
    RauzyDiagram diag;
    diag.n = n;
    diag.extended = opts.extended;
    diag.seed = seed;

    PackedSet visited(1024);
    visited.insert(seed.packed());
    std::vector<uint64_t> order{seed.packed()};
    std::vector<uint64_t> frontier{seed.packed()};

    int threads = std::max(1, opts.threads);
    while (!frontier.empty()) {
        std::vector<uint64_t> next;
        auto expand = [&](size_t lo, size_t hi, std::vector<uint64_t>& out) {
            for (size_t i = lo; i < hi; ++i) {
                ReducedPermutation v = ReducedPermutation::from_packed(frontier[i], n);
                for (MoveKind mk : moves) {
                    uint64_t key = apply_move(v, mk).packed();
                    if (!visited.contains(key))
                        out.push_back(key);
                }
            }
        };
        if (threads == 1 || frontier.size() < 1024) {
            expand(0, frontier.size(), next);
        } else {
            std::vector<std::vector<uint64_t>> parts(static_cast<size_t>(threads));
            std::vector<std::thread> pool;
            size_t chunk = (frontier.size() + static_cast<size_t>(threads) - 1) /
                           static_cast<size_t>(threads);
            for (int t = 0; t < threads; ++t) {
                size_t lo = static_cast<size_t>(t) * chunk;
                size_t hi = std::min(frontier.size(), lo + chunk);
                if (lo >= hi)
                    break;
                pool.emplace_back(expand, lo, hi, std::ref(parts[static_cast<size_t>(t)]));
            }
            for (auto& th : pool)
                th.join();
            for (auto& part : parts)
                next.insert(next.end(), part.begin(), part.end());
        }
        // deterministic level order regardless of thread count
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        std::vector<uint64_t> fresh;
        for (uint64_t key : next)
            if (visited.insert(key))
                fresh.push_back(key);
        order.insert(order.end(), fresh.begin(), fresh.end());
        frontier = std::move(fresh);
    }

    std::unordered_map<uint64_t, uint32_t> index;
    index.reserve(order.size() * 2);
    diag.vertices.reserve(order.size());
    for (size_t i = 0; i < order.size(); ++i) {
        index.emplace(order[i], static_cast<uint32_t>(i));
        diag.vertices.push_back(ReducedPermutation::from_packed(order[i], n));
    }
    diag.edges.assign(order.size(), {0, 0, 0});
    for (size_t i = 0; i < order.size(); ++i) {
        for (size_t mi = 0; mi < moves.size(); ++mi) {
            uint64_t key = apply_move(diag.vertices[i], moves[mi]).packed();
            diag.edges[i][mi] = index.at(key);
        }
    }
    return diag;
}

RauzyDiagram build_general(const ReducedPermutation& seed, const BuildOptions& opts) {
    const auto moves = move_set(opts.extended);
    RauzyDiagram diag;
    diag.n = seed.size();
    diag.extended = opts.extended;
    diag.seed = seed;

    std::map<std::vector<int>, uint32_t> index;
    std::vector<ReducedPermutation> order{seed};
    index.emplace(seed.bottom(), 0);
    std::vector<ReducedPermutation> frontier{seed};
    while (!frontier.empty()) {
        std::vector<ReducedPermutation> next;
        for (const auto& v : frontier)
            for (MoveKind mk : moves) {
                ReducedPermutation w = apply_move(v, mk);
                if (!index.count(w.bottom()))
                    next.push_back(std::move(w));
            }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        for (auto& w : next) {
            if (index.emplace(w.bottom(), static_cast<uint32_t>(order.size())).second)
                order.push_back(w);
        }
        frontier = std::move(next);
    }
    diag.vertices = std::move(order);
    diag.edges.assign(diag.vertices.size(), {0, 0, 0});
    for (size_t i = 0; i < diag.vertices.size(); ++i)
        for (size_t mi = 0; mi < moves.size(); ++mi)
            diag.edges[i][mi] = index.at(apply_move(diag.vertices[i], moves[mi]).bottom());
    return diag;
}

} // namespace

int RauzyDiagram::index_of(const ReducedPermutation& v) const {
    // vertices after the seed are level-sorted; fall back to a scan
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == v)
            return static_cast<int>(i);
    return -1;
}

RauzyDiagram build_class(const ReducedPermutation& seed, const BuildOptions& opts) {
    if (!seed.is_irreducible())
        throw std::domain_error("class seed must be irreducible");
    RauzyDiagram diag =
        seed.size() <= 16 ? build_packed(seed, opts) : build_general(seed, opts);
    // every Rauzy class contains a standard permutation
    bool has_standard = false;
    for (const auto& v : diag.vertices)
        if (v.is_standard()) {
            has_standard = true;
            break;
        }
    if (!has_standard)
        throw std::logic_error("built class without a standard permutation");
    return diag;
}

ClassStats stats(const RauzyDiagram& diag) {
    ClassStats st;
    st.size = diag.size();
    st.spin = spin_parity(diag.seed);
    st.profile = profile(diag.seed);
    st.left_degree = diag.extended ? 0 : left_degree(diag.seed);
    for (const auto& v : diag.vertices) {
        if (v.is_standard())
            ++st.standard_count;
        ++st.marking_tally[marked_profile(v).marking.str()];
    }
    return st;
}

Census census(int n) {
    if (n < 1 || n > 10)
        throw std::domain_error("census supported for 1 <= n <= 10");
    Census out;
    std::vector<int> word(static_cast<size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    do {
        ReducedPermutation pi{std::vector<int>(word)};
        MarkedProfile mp = marked_profile(pi);
        SpinParity sp = spin_parity(pi);
        CensusCell& cell = out[mp.str()];
        auto bump = [&](uint64_t& total, uint64_t& odd, uint64_t& even) {
            ++total;
            if (sp == SpinParity::Odd) ++odd;
            if (sp == SpinParity::Even) ++even;
        };
        bump(cell.all, cell.all_odd, cell.all_even);
        if (pi.is_irreducible())
            bump(cell.irr, cell.irr_odd, cell.irr_even);
        if (pi.is_standard())
            bump(cell.std_count, cell.std_odd, cell.std_even);
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

std::vector<ClassOfSn> partition_into_classes(int n) {
    std::vector<ClassOfSn> classes;
    PackedSet assigned(1024);
    std::vector<int> word(static_cast<size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    do {
        ReducedPermutation pi{std::vector<int>(word)};
        if (!pi.is_irreducible())
            continue;
        if (assigned.contains(pi.packed()))
            continue;
        RauzyDiagram diag = build_class(pi);
        for (const auto& v : diag.vertices)
            assigned.insert(v.packed());
        ClassOfSn c;
        c.seed = pi;
        c.size = diag.size();
        c.profile = profile(pi);
        c.left_degree = left_degree(pi);
        c.spin = spin_parity(pi);
        classes.push_back(std::move(c));
    } while (std::next_permutation(word.begin(), word.end()));
    return classes;
}

RotationModel rotation_model(int n) {
    if (n < 2)
        throw std::domain_error("rotation model needs n >= 2");
    RotationModel g;
    std::map<std::array<int, 3>, int> index;
    for (int a = 1; a <= n - 1; ++a)
        for (int b = 0; b <= n - 1 - a; ++b) {
            int c = n - a - b;
            if (c < 1)
                continue;
            index[{a, b, c}] = static_cast<int>(g.vertices.size());
            g.vertices.push_back({a, b, c});
        }
    for (const auto& v : g.vertices) {
        auto [a, b, c] = v;
        std::array<int, 3> lt = b == 0 ? std::array<int, 3>{1, a - 1, c}
                                       : std::array<int, 3>{a + 1, b - 1, c};
        std::array<int, 3> rt = b == 0 ? std::array<int, 3>{a, c - 1, 1}
                                       : std::array<int, 3>{a, b - 1, c + 1};
        g.left_target.push_back(index.at(lt));
        g.right_target.push_back(index.at(rt));
    }
    return g;
}

bool check_rotation_isomorphism(int n) {
    RotationModel g = rotation_model(n);
    RauzyDiagram diag = build_class(rotation(n));
    if (g.vertices.size() != diag.size())
        return false;
    std::unordered_map<uint64_t, int> diag_index;
    for (size_t i = 0; i < diag.vertices.size(); ++i)
        diag_index.emplace(diag.vertices[i].packed(), static_cast<int>(i));
    std::vector<int> to_diag(g.vertices.size());
    for (size_t i = 0; i < g.vertices.size(); ++i) {
        auto [a, b, c] = g.vertices[i];
        auto it = diag_index.find(triple_perm(a, b, c).packed());
        if (it == diag_index.end())
            return false;
        to_diag[i] = it->second;
    }
    for (size_t i = 0; i < g.vertices.size(); ++i) {
        int di = to_diag[i];
        // left edges match top moves and right edges bottom moves, with the
        // model arrows running against the moves: a left edge v -> w means
        // the top move sends pi(w) to pi(v)
        int lt = to_diag[static_cast<size_t>(g.left_target[i])];
        int rt = to_diag[static_cast<size_t>(g.right_target[i])];
        if (diag.edges[static_cast<size_t>(lt)][0] != static_cast<uint32_t>(di))
            return false;
        if (diag.edges[static_cast<size_t>(rt)][1] != static_cast<uint32_t>(di))
            return false;
    }
    return true;
}

void export_dot(const RauzyDiagram& diag, std::ostream& os) {
    os << "digraph rauzy {\n";
    os << "  rankdir=LR;\n";
    for (const auto& v : diag.vertices) {
        os << "  \"" << v.str() << "\"";
        if (v.is_standard())
            os << " [shape=box]";
        os << ";\n";
    }
    const char* labels[3] = {"t", "b", "s"};
    size_t nmoves = diag.extended ? 3 : 2;
    for (size_t i = 0; i < diag.vertices.size(); ++i)
        for (size_t mi = 0; mi < nmoves; ++mi)
            os << "  \"" << diag.vertices[i].str() << "\" -> \""
               << diag.vertices[diag.edges[i][mi]].str() << "\" [label=\"" << labels[mi]
               << "\"];\n";
    os << "}\n";
}

ClassSummary survey_class(const ReducedPermutation& seed, bool extended, int threads) {
    if (!seed.is_irreducible())
        throw std::domain_error("class seed must be irreducible");
    if (seed.size() > 16)
        throw std::domain_error("survey_class needs n <= 16");
    const int n = seed.size();
    const auto moves = move_set(extended);
    threads = std::max(1, threads);

    ClassSummary summary;
    PackedSet visited(1 << 16);
    visited.insert(seed.packed());
    std::vector<uint64_t> frontier{seed.packed()};
    auto account = [&](uint64_t key) {
        ReducedPermutation v = ReducedPermutation::from_packed(key, n);
        ++summary.size;
        if (v.is_standard())
            ++summary.standard_count;
        ++summary.degree_tally[left_degree(v)];
    };
    account(seed.packed());
    while (!frontier.empty()) {
        std::vector<uint64_t> next;
        auto expand = [&](size_t lo, size_t hi, std::vector<uint64_t>& out) {
            for (size_t i = lo; i < hi; ++i) {
                ReducedPermutation v = ReducedPermutation::from_packed(frontier[i], n);
                for (MoveKind mk : moves) {
                    uint64_t key = apply_move(v, mk).packed();
                    if (!visited.contains(key))
                        out.push_back(key);
                }
            }
        };
        if (threads == 1 || frontier.size() < 4096) {
            expand(0, frontier.size(), next);
        } else {
            std::vector<std::vector<uint64_t>> parts(static_cast<size_t>(threads));
            std::vector<std::thread> pool;
            size_t chunk =
                (frontier.size() + static_cast<size_t>(threads) - 1) / static_cast<size_t>(threads);
            for (int t = 0; t < threads; ++t) {
                size_t lo = static_cast<size_t>(t) * chunk;
                size_t hi = std::min(frontier.size(), lo + chunk);
                if (lo >= hi)
                    break;
                pool.emplace_back(expand, lo, hi, std::ref(parts[static_cast<size_t>(t)]));
            }
            for (auto& th : pool)
                th.join();
            for (auto& part : parts)
                next.insert(next.end(), part.begin(), part.end());
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        std::vector<uint64_t> fresh;
        for (uint64_t key : next)
            if (visited.insert(key)) {
                fresh.push_back(key);
                account(key);
            }
        frontier = std::move(fresh);
    }
    return summary;
}

const RauzyDiagram& hyperelliptic_class(int d, int k) {
    static std::map<std::pair<int, int>, RauzyDiagram> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find({d, k});
    if (it != cache.end())
        return it->second;
    ReducedPermutation seed = symmetric(d);
    for (int i = 0; i < k; ++i)
        seed = insert_marked_point(seed, 1);
    BuildOptions opts;
    opts.extended = true;
    auto [pos, inserted] = cache.emplace(std::make_pair(d, k), build_class(seed, opts));
    (void)inserted;
    return pos->second;
}

bool is_hyperelliptic_class(const ReducedPermutation& pi) {
    if (!pi.is_irreducible())
        return false;
    IntegerPartition p = profile(pi);
    std::vector<int> big;
    int ones = 0;
    for (int v : p.parts()) {
        if (v == 1)
            ++ones;
        else
            big.push_back(v);
    }
    int d; // letters before adding marked points
    if (big.size() == 1 && big[0] >= 3 && big[0] % 2 == 1)
        d = big[0] + 1; // profile (2g-1): symmetric on 2g letters
    else if (big.size() == 2 && big[0] == big[1] && big[0] >= 2)
        d = 2 * big[0] + 1; // profile (g,g): symmetric on 2g+1 letters
    else if (big.empty() && ones >= 1)
        d = 2; // torus family: profile (1^k) comes from symmetric(2)
    else
        return false;
    int k = pi.size() - d;
    if (k < 0)
        return false;
    if (big.empty())
        k = ones - 1; // same thing, spelled via the profile
    return hyperelliptic_class(d, k).contains(pi);
}

} // namespace rauzy
