#include "rauzy/count.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <mutex>
#include <stdexcept>

#include "rauzy/explore.hpp"

namespace rauzy {

namespace {

struct Memo {
    std::mutex mtx;
    std::map<std::string, BigInt> c, d, girr, dirr;
};

Memo& memo() {
    static Memo m;
    return m;
}

bool lookup(std::map<std::string, BigInt>& table, const std::string& key, BigInt& out) {
    std::lock_guard<std::mutex> lock(memo().mtx);
    auto it = table.find(key);
    if (it == table.end())
        return false;
    out = it->second;
    return true;
}

void store(std::map<std::string, BigInt>& table, const std::string& key, const BigInt& value) {
    std::lock_guard<std::mutex> lock(memo().mtx);
    table.emplace(key, value);
}

BigInt exact_div(const BigInt& num, const BigInt& den, const char* what) {
    if (den == 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw std::logic_error(std::string("non-integral quotient in ") + what);
    BigInt q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

BigInt rat_to_int(const BigRat& r, const char* what) {
    BigRat c = r;
    c.canonicalize();
    if (c.get_den() != 1)
        throw std::logic_error(std::string("non-integral value in ") + what);
    return c.get_num();
}

bool parity_ok(const IntegerPartition& p) {
    return p.valid_profile_parity();
}

// ---- c and d --------------------------------------------------------------

BigInt c_closed_impl(const IntegerPartition& p) {
    int n = p.sum();
    const auto& parts = p.parts();
    // sum over sub-multisets of p minus the designated (largest) part,
    // with multiplicity
    size_t l = parts.size() - 1; // parts[1..] remain
    BigRat acc = 0;
    for (size_t mask = 0; mask < (size_t{1} << l); ++mask) {
        int s = 0, len = 0;
        for (size_t i = 0; i < l; ++i)
            if (mask & (size_t{1} << i)) {
                s += parts[i + 1];
                ++len;
            }
        BigRat term(((s + len) % 2 == 0) ? 1 : -1, 1);
        term /= BigRat(binomial(n, s));
        acc += term;
    }
    BigRat front(2 * factorial(n - 1));
    front /= n + 1;
    return rat_to_int(front * acc, "c_closed");
}

BigInt c_impl(const IntegerPartition& p); // memoized recurrence

BigInt c_recurrence(const IntegerPartition& p) {
    if (p.sum() == 1)
        return 1; // p == (1)
    int n1 = p.parts().front();
    IntegerPartition rest = remove_part(p, n1);
    BigInt total = 0;
    for (int v : rest.distinct_parts()) {
        BigInt sub = c_impl(collapse(p, n1, v));
        total += BigInt(rest.multiplicity(v)) * BigInt(v) * sub;
    }
    for (int a = 1; a <= n1 - 2; ++a)
        total += c_impl(split(p, n1, a));
    return total;
}

BigInt c_impl(const IntegerPartition& p) {
    if (p.empty() || !parity_ok(p))
        return 0;
    std::string key = p.str();
    BigInt v;
    if (lookup(memo().c, key, v))
        return v;
    v = c_recurrence(p);
    store(memo().c, key, v);
    return v;
}

BigInt d_closed_impl(const IntegerPartition& p) {
    int g = (p.sum() - p.length()) / 2;
    BigInt pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), 2, static_cast<unsigned long>(g));
    return exact_div(factorial(p.sum() - 1), pw, "d_closed");
}

BigInt d_impl(const IntegerPartition& p) {
    if (p.empty() || !p.all_odd())
        return 0;
    if (p.sum() == 1)
        return 1;
    std::string key = p.str();
    BigInt v;
    if (lookup(memo().d, key, v))
        return v;
    int n1 = p.parts().front();
    IntegerPartition rest = remove_part(p, n1);
    v = 0;
    for (int w : rest.distinct_parts())
        v += BigInt(rest.multiplicity(w)) * BigInt(w) * d_impl(collapse(p, n1, w));
    for (int a = 1; a <= n1 - 2; a += 2)
        v += d_impl(split(p, n1, a));
    store(memo().d, key, v);
    return v;
}

// ---- standard-permutation counts ------------------------------------------

bool is_length_one_profile(const MarkedProfile& mp) {
    return mp.marking.type == Marking::Type::Two && mp.marking.ml == 0 &&
           mp.marking.mr == 0 && mp.residual.empty();
}

bool is_length_two_std_profile(const MarkedProfile& mp) {
    return mp.marking.type == Marking::Type::One && mp.marking.m == 1 &&
           mp.marking.a == 0 && mp.residual.empty();
}

BigInt gamma_std_impl(const MarkedProfile& mp) {
    if (is_length_one_profile(mp))
        return 1; // (1)
    if (is_length_two_std_profile(mp))
        return 1; // (2 1)
    if (!mp.genuine())
        return 0;
    IntegerPartition full = mp.full_profile();
    if (!parity_ok(full))
        return 0;
    BigInt z = centralizer_order(mp.residual);
    if (mp.marking.type == Marking::Type::One) {
        if (mp.marking.a < 1 || mp.marking.a > mp.marking.m - 2)
            return 0;
        return exact_div(c_impl(split(full, mp.marking.m, mp.marking.a)), z, "gamma_std");
    }
    if (full.multiplicity(mp.marking.ml) < (mp.marking.ml == mp.marking.mr ? 2 : 1) ||
        !full.contains(mp.marking.mr))
        return 0;
    return exact_div(c_impl(collapse(full, mp.marking.ml, mp.marking.mr)), z, "gamma_std");
}

BigInt delta_std_impl(const MarkedProfile& mp) {
    if (is_length_one_profile(mp))
        return 0; // spin of (1) is undefined
    if (is_length_two_std_profile(mp))
        return 1; // (2 1) has odd spin
    if (!mp.genuine())
        return 0;
    IntegerPartition full = mp.full_profile();
    if (!full.all_odd() || !parity_ok(full))
        return 0;
    BigInt z = centralizer_order(mp.residual);
    if (mp.marking.type == Marking::Type::One) {
        const int m = mp.marking.m, a = mp.marking.a;
        if (a < 1 || a > m - 2 || a % 2 == 0)
            return 0;
        return exact_div(d_impl(split(full, m, a)), z, "delta_std");
    }
    return exact_div(d_impl(collapse(full, mp.marking.ml, mp.marking.mr)), z, "delta_std");
}

// ---- counts over all permutations (ends-removal bijection) ----------------

MarkedProfile std_lift(const MarkedProfile& mp) {
    if (mp.marking.type == Marking::Type::One)
        return MarkedProfile{Marking::one(mp.marking.m + 2, mp.marking.m - mp.marking.a),
                             mp.residual};
    return MarkedProfile{Marking::two(mp.marking.ml + 1, mp.marking.mr + 1), mp.residual};
}

BigInt gamma_all_impl(const MarkedProfile& mp) {
    if (mp.marking.type == Marking::Type::One && mp.marking.m < 1)
        return 0;
    return gamma_std_impl(std_lift(mp));
}

BigInt delta_all_impl(const MarkedProfile& mp) {
    if (mp.marking.type == Marking::Type::One && mp.marking.m < 1)
        return 0;
    // Removing the two end letters shifts the Arf invariant by a_std + 1,
    // which is even exactly when the lifted count is nonzero.
    return delta_std_impl(std_lift(mp));
}

// ---- irreducible counts via first-block exclusion --------------------------

BigInt girr_impl(const MarkedProfile& mp);
BigInt dirr_impl(const MarkedProfile& mp);

// Enumerates the (first irreducible block, remainder) marked-profile pairs
// whose concatenation has marked profile mp, and calls
// visit(block_mp, rest_mp).
void for_each_factorization(const MarkedProfile& mp,
                            const std::function<void(const MarkedProfile&,
                                                     const MarkedProfile&)>& visit) {
    auto splits = distinct_splits(mp.residual);
    if (mp.marking.type == Marking::Type::One) {
        const int m = mp.marking.m, a = mp.marking.a;
        for (const auto& [p1, p2] : splits)
            for (int m1 = 1; m1 <= m - 2; ++m1) {
                int m2 = m - 1 - m1;
                for (int a1 = 0; a1 <= std::min(m1 - 1, a - 1); ++a1) {
                    int a2 = a - 1 - a1;
                    if (a2 < 0 || a2 > m2 - 1)
                        continue;
                    visit(MarkedProfile{Marking::one(m1, a1), p1},
                          MarkedProfile{Marking::one(m2, a2), p2});
                }
            }
        return;
    }
    const int ml = mp.marking.ml, mr = mp.marking.mr;
    for (const auto& [p1, p2] : splits) {
        // type-1 block followed by a type-2 remainder
        for (int k = 1; k <= ml - 1; ++k) {
            int nl = ml - 1 - k;
            for (int a1 = 0; a1 <= k - 1; ++a1)
                visit(MarkedProfile{Marking::one(k, a1), p1},
                      MarkedProfile{Marking::two(nl, mr), p2});
        }
        // type-2 block followed by a type-1 remainder
        for (int k = 0; k <= mr - 2; ++k) {
            int nb = mr - 1 - k;
            for (int b = 0; b <= nb - 1; ++b)
                visit(MarkedProfile{Marking::two(ml, k), p1},
                      MarkedProfile{Marking::one(nb, b), p2});
        }
    }
    // type-2 block followed by a type-2 remainder; the glued cycle is a part
    // of the residual
    for (int u : mp.residual.distinct_parts()) {
        IntegerPartition without = remove_part(mp.residual, u);
        for (const auto& [p1, p2] : distinct_splits(without))
            for (int k1 = 0; k1 <= u - 1; ++k1) {
                int nl = u - 1 - k1;
                visit(MarkedProfile{Marking::two(ml, k1), p1},
                      MarkedProfile{Marking::two(nl, mr), p2});
            }
    }
}

BigInt girr_impl(const MarkedProfile& mp) {
    if (!mp.genuine())
        return is_length_one_profile(mp) ? BigInt(1) : BigInt(0);
    if (!parity_ok(mp.full_profile()))
        return 0;
    std::string key = mp.str();
    BigInt v;
    if (lookup(memo().girr, key, v))
        return v;
    v = gamma_all_impl(mp);
    for_each_factorization(mp, [&](const MarkedProfile& block, const MarkedProfile& rest) {
        BigInt b = girr_impl(block);
        if (b == 0)
            return;
        v -= b * gamma_all_impl(rest);
    });
    if (v < 0)
        throw std::logic_error("negative gamma_irr for " + mp.str());
    store(memo().girr, key, v);
    return v;
}

BigInt dirr_impl(const MarkedProfile& mp) {
    if (!mp.genuine())
        return 0; // the length-1 permutation has no spin
    if (!mp.full_profile().all_odd() || !parity_ok(mp.full_profile()))
        return 0;
    std::string key = mp.str();
    BigInt v;
    if (lookup(memo().dirr, key, v))
        return v;
    // delta is minus-multiplicative across concatenation, so the excluded
    // terms enter with a plus sign
    v = delta_all_impl(mp);
    for_each_factorization(mp, [&](const MarkedProfile& block, const MarkedProfile& rest) {
        BigInt b = dirr_impl(block);
        if (b == 0)
            return;
        v += b * delta_all_impl(rest);
    });
    store(memo().dirr, key, v);
    return v;
}

void require_valid_profile(const IntegerPartition& p, const char* what) {
    if (p.empty() || !parity_ok(p))
        throw std::domain_error(std::string(what) + ": invalid profile " + p.str());
}

} // namespace

// ---- public surface ---------------------------------------------------------

BigInt c_closed(const IntegerPartition& p) {
    require_valid_profile(p, "c_closed");
    return c_closed_impl(p);
}

BigInt c_recursive(const IntegerPartition& p) {
    require_valid_profile(p, "c_recursive");
    return c_impl(p);
}

BigInt c_goupil_schaeffer(const IntegerPartition& p) {
    require_valid_profile(p, "c_goupil_schaeffer");
    const auto& parts = p.parts();
    int n = p.sum(), k = p.length(), g = (n - k) / 2;

    auto S = [&](int gg) -> BigRat {
        // symmetric polynomial over weak compositions of gg into k parts
        BigRat total = 0;
        std::vector<int> comp(static_cast<size_t>(k), 0);
        std::function<void(int, int)> rec = [&](int idx, int left) {
            if (idx == k - 1) {
                comp[static_cast<size_t>(idx)] = left;
                BigRat prod = 1;
                for (int i = 0; i < k; ++i) {
                    int pi = comp[static_cast<size_t>(i)];
                    prod *= BigRat(binomial(parts[static_cast<size_t>(i)] - 1, 2 * pi));
                    prod /= 2 * pi + 1;
                }
                total += prod;
                return;
            }
            for (int take = 0; take <= left; ++take) {
                comp[static_cast<size_t>(idx)] = take;
                rec(idx + 1, left - take);
            }
        };
        if (k == 0)
            return BigRat(gg == 0 ? 1 : 0);
        rec(0, gg);
        return BigRat(factorial(k + 2 * gg - 1)) * total;
    };

    BigRat sum = 0;
    for (int g1 = 0; g1 <= g; ++g1) {
        BigRat term(factorial(2 * g1));
        term /= 2 * g1 + 1;
        term *= BigRat(binomial(n - 1, 2 * g1));
        term *= S(g - g1);
        sum += term;
    }
    // prefactor prod_i i^{e_i} / 4^g; the centralizer order with the e_i!
    // factors removed is what matches the recurrence and the census
    BigRat front = 1;
    for (int v : p.parts())
        front *= v;
    BigInt pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), 4, static_cast<unsigned long>(g));
    front /= BigRat(pw);
    return rat_to_int(front * sum, "c_goupil_schaeffer");
}

BigInt d_closed(const IntegerPartition& p) {
    if (p.empty() || !p.all_odd())
        throw std::domain_error("d_closed: needs a nonempty all-odd partition");
    return d_closed_impl(p);
}

BigInt d_recursive(const IntegerPartition& p) {
    if (p.empty() || !p.all_odd())
        throw std::domain_error("d_recursive: needs a nonempty all-odd partition");
    return d_impl(p);
}

BigInt gamma_std(const MarkedProfile& mp) {
    if (mp.genuine() && !parity_ok(mp.full_profile()))
        throw std::domain_error("gamma_std: parity violation for " + mp.str());
    return gamma_std_impl(mp);
}

BigInt delta_std(const MarkedProfile& mp) {
    if (mp.genuine() && !mp.full_profile().all_odd())
        throw std::domain_error("delta_std: profile has an even part: " + mp.str());
    return delta_std_impl(mp);
}

BigInt gamma_all(const MarkedProfile& mp) {
    return gamma_all_impl(mp);
}

BigInt delta_all(const MarkedProfile& mp) {
    return delta_all_impl(mp);
}

BigInt gamma_irr(const MarkedProfile& mp) {
    if (mp.genuine() && !parity_ok(mp.full_profile()))
        throw std::domain_error("gamma_irr: parity violation for " + mp.str());
    return girr_impl(mp);
}

BigInt delta_irr(const MarkedProfile& mp) {
    if (mp.genuine() && !mp.full_profile().all_odd())
        throw std::domain_error("delta_irr: profile has an even part: " + mp.str());
    return dirr_impl(mp);
}

BigInt irreducible_count(int n) {
    if (n < 1)
        throw std::domain_error("irreducible_count: n >= 1");
    static std::mutex mtx;
    static std::vector<BigInt> f{BigInt(0)}; // f[0] unused
    std::lock_guard<std::mutex> lock(mtx);
    for (int m = static_cast<int>(f.size()); m <= n; ++m) {
        BigInt v = factorial(m);
        for (int i = 1; i < m; ++i)
            v -= f[static_cast<size_t>(i)] * factorial(m - i);
        f.push_back(v);
    }
    return f[static_cast<size_t>(n)];
}

std::vector<MarkedProfile> markings_of_profile(const IntegerPartition& p) {
    std::vector<MarkedProfile> out;
    for (int m : p.distinct_parts()) {
        IntegerPartition rest = remove_part(p, m);
        for (int a = 0; a <= m - 1; ++a)
            out.push_back(MarkedProfile{Marking::one(m, a), rest});
        for (int v : rest.distinct_parts())
            out.push_back(MarkedProfile{Marking::two(m, v), remove_part(rest, v)});
    }
    return out;
}

BigInt gamma_irr_degree(const IntegerPartition& p, int degree) {
    BigInt total = 0;
    for (const auto& mp : markings_of_profile(p))
        if (mp.marking.left_degree() == degree)
            total += girr_impl(mp);
    return total;
}

BigInt delta_irr_degree(const IntegerPartition& p, int degree) {
    BigInt total = 0;
    for (const auto& mp : markings_of_profile(p))
        if (mp.marking.left_degree() == degree)
            total += dirr_impl(mp);
    return total;
}

std::string component_kind_str(ComponentKind k) {
    switch (k) {
    case ComponentKind::Connected: return "connected";
    case ComponentKind::Hyperelliptic: return "hyperelliptic";
    case ComponentKind::OddSpin: return "odd";
    case ComponentKind::EvenSpin: return "even";
    case ComponentKind::NonHyperelliptic: return "nonhyperelliptic";
    }
    return "?";
}

namespace {

struct StratumShape {
    IntegerPartition base; // profile with the 1s stripped
    int marked = 0;        // number of stripped 1s
    int genus = 0;
    bool fam_single = false; // base == (2g-1)
    bool fam_double = false; // base == (g,g)
};

StratumShape stratum_shape(const IntegerPartition& p) {
    StratumShape s;
    std::vector<int> big;
    for (int v : p.parts()) {
        if (v == 1)
            ++s.marked;
        else
            big.push_back(v);
    }
    s.base = IntegerPartition(std::move(big));
    s.genus = genus_of(p).g;
    s.fam_single = s.base.length() == 1 && s.base.parts()[0] == 2 * s.genus - 1;
    s.fam_double = s.base.length() == 2 && s.base.parts()[0] == s.base.parts()[1];
    return s;
}

} // namespace

std::vector<ComponentDescriptor> stratum_components(const IntegerPartition& p) {
    require_valid_profile(p, "stratum_components");
    StratumShape s = stratum_shape(p);
    auto mk = [&](std::initializer_list<ComponentKind> kinds) {
        std::vector<ComponentDescriptor> out;
        for (ComponentKind k : kinds)
            out.push_back(ComponentDescriptor{k, p});
        return out;
    };
    if (s.base.empty())
        return mk({ComponentKind::Connected}); // torus
    if (s.genus <= 2)
        return mk({ComponentKind::Connected});
    if (s.genus == 3) {
        if (s.fam_single || s.fam_double) // (5) and (3,3): even part empty
            return mk({ComponentKind::Hyperelliptic, ComponentKind::OddSpin});
        return mk({ComponentKind::Connected});
    }
    bool all_odd = s.base.all_odd();
    if (s.fam_single || (s.fam_double && all_odd))
        return mk({ComponentKind::Hyperelliptic, ComponentKind::OddSpin,
                   ComponentKind::EvenSpin});
    if (s.fam_double) // g even
        return mk({ComponentKind::Hyperelliptic, ComponentKind::NonHyperelliptic});
    if (all_odd)
        return mk({ComponentKind::OddSpin, ComponentKind::EvenSpin});
    return mk({ComponentKind::Connected});
}

namespace {

/// Per-degree sizes of the hyperelliptic class inside the stratum of p,
/// from the closed marked-point formulas.
std::map<int, BigInt> hyp_degree_sizes(const StratumShape& s) {
    int d = s.fam_single ? 2 * s.genus : 2 * s.genus + 1;
    int k = s.marked;
    BigInt base = (BigInt(1) << (d - 1)) - 1;
    std::map<int, BigInt> out;
    int main_degree = s.fam_single ? 2 * s.genus - 1 : s.genus;
    out[main_degree] = binomial(d + k, k) * base;
    if (k >= 1)
        out[1] = binomial(d + k, k - 1) * (base + d);
    return out;
}

} // namespace

std::vector<ClassCardinality> class_cardinalities(const IntegerPartition& p) {
    require_valid_profile(p, "class_cardinalities");
    StratumShape s = stratum_shape(p);
    auto kinds = stratum_components(p);

    std::map<int, BigInt> gdeg, ddeg;
    bool all_odd = p.all_odd();
    for (int m : p.distinct_parts()) {
        gdeg[m] = gamma_irr_degree(p, m);
        if (all_odd)
            ddeg[m] = delta_irr_degree(p, m);
    }
    std::map<int, BigInt> hyp;
    bool has_hyp = false;
    for (const auto& c : kinds)
        has_hyp |= c.kind == ComponentKind::Hyperelliptic;
    if (has_hyp)
        hyp = hyp_degree_sizes(s);
    bool hyp_on_odd_side = s.genus % 4 == 1 || s.genus % 4 == 2;

    std::vector<ClassCardinality> out;
    for (const auto& comp : kinds) {
        for (int m : p.distinct_parts()) {
            BigInt value;
            switch (comp.kind) {
            case ComponentKind::Connected:
                value = gdeg.at(m);
                break;
            case ComponentKind::Hyperelliptic:
                value = hyp.count(m) ? hyp.at(m) : BigInt(0);
                break;
            case ComponentKind::OddSpin:
                value = exact_div(gdeg.at(m) + ddeg.at(m), 2, "class_cardinalities");
                if (has_hyp && hyp_on_odd_side)
                    value -= hyp.count(m) ? hyp.at(m) : BigInt(0);
                break;
            case ComponentKind::EvenSpin:
                value = exact_div(gdeg.at(m) - ddeg.at(m), 2, "class_cardinalities");
                if (has_hyp && !hyp_on_odd_side)
                    value -= hyp.count(m) ? hyp.at(m) : BigInt(0);
                break;
            case ComponentKind::NonHyperelliptic:
                value = gdeg.at(m) - (hyp.count(m) ? hyp.at(m) : BigInt(0));
                break;
            }
            if (value < 0)
                throw std::logic_error("negative class cardinality for " + p.str());
            out.push_back(ClassCardinality{comp.kind, m, value});
        }
    }
    // genus-3 exception: the even-spin side must be exactly the
    // hyperelliptic class
    if (s.genus == 3 && (s.fam_single || s.fam_double)) {
        for (int m : p.distinct_parts()) {
            BigInt even = exact_div(gdeg.at(m) - ddeg.at(m), 2, "class_cardinalities");
            BigInt h = hyp.count(m) ? hyp.at(m) : BigInt(0);
            if (even != h)
                throw std::logic_error("empty even component mismatch for " + p.str());
        }
    }
    return out;
}

BigInt extended_class_total(const IntegerPartition& p) {
    require_valid_profile(p, "extended_class_total");
    BigInt total = 0;
    for (const auto& mp : markings_of_profile(p))
        total += girr_impl(mp);
    return total;
}

HypCounts hyp_counts(int n, int k) {
    if (n < 2 || n > 22)
        throw std::domain_error("hyp_counts: letters out of range");
    if (k < 0)
        throw std::domain_error("hyp_counts: negative marked points");
    HypCounts out;
    out.n = n;
    out.k = k;

    const RauzyDiagram& base_diag = hyperelliptic_class(n, 0);
    ClassStats base = stats(base_diag);
    if (k == 0) {
        for (const auto& [mk, cnt] : base.marking_tally)
            out.marking_tally[mk] = BigInt(static_cast<long>(cnt));
        out.total = BigInt(static_cast<long>(base.size));
    } else {
        LiftInput in;
        in.d = n;
        in.total = BigInt(static_cast<long>(base.size));
        in.standard_count = BigInt(static_cast<long>(base.standard_count));
        for (const auto& [mk, cnt] : base.marking_tally) {
            in.marking_tally[mk] = BigInt(static_cast<long>(cnt));
            in.degree_tally[Marking::parse(mk).left_degree()] +=
                BigInt(static_cast<long>(cnt));
        }
        LiftResult lifted = marked_point_lift(in, k);
        out.marking_tally = lifted.marking_tally;
        out.total = lifted.total;
    }

    // closed binomial candidates for the k = 0 tallies
    if (n % 2 == 0) {
        int m = n - 1;
        for (int a = 0; a <= m - 1; ++a) {
            int arm = std::min(a, m - 1 - a);
            out.closed_candidates[Marking::one(m, a).str()] = binomial(m, 2 * arm + 1);
        }
    } else {
        int g = (n - 1) / 2;
        for (int a = 0; a <= g - 1; ++a) {
            int arm = std::min(a, g - 1 - a);
            out.closed_candidates[Marking::one(g, a).str()] =
                binomial(2 * g - 1, 2 * arm + 1);
        }
        out.closed_candidates[Marking::two(g, g).str()] = (BigInt(1) << (2 * g - 1)) - 1;
    }

    StratumShape s;
    s.genus = n % 2 == 0 ? n / 2 : (n - 1) / 2;
    s.fam_single = n % 2 == 0;
    s.fam_double = !s.fam_single;
    s.marked = k;
    out.per_degree = hyp_degree_sizes(s);
    BigInt sum = 0;
    for (const auto& [deg, v] : out.per_degree)
        sum += v;
    BigInt expected = binomial(n + k + 1, k) * ((BigInt(1) << (n - 1)) - 1) +
                      binomial(n + k, k - 1) * n;
    if (sum != expected)
        throw std::logic_error("hyp_counts: degree totals disagree with the closed form");
    return out;
}

LiftResult marked_point_lift(const LiftInput& base, int k) {
    for (const auto& [mk, cnt] : base.marking_tally) {
        Marking m = Marking::parse(mk);
        for (int v : m.profile_parts())
            if (v == 1)
                throw std::domain_error("marked_point_lift: base profile contains a part 1");
        (void)cnt;
    }
    const int d = base.d;
    LiftResult out;
    out.total = binomial(d + k + 1, k) * base.total +
                binomial(d + k, k - 1) * d * base.standard_count;

    auto put = [](std::map<std::string, BigInt>& tally, const std::string& key, BigInt v) {
        if (v != 0)
            tally[key] = std::move(v);
    };
    for (const auto& [mk, cnt] : base.marking_tally)
        put(out.marking_tally, mk, binomial(d + k - 1, k) * cnt);
    for (const auto& [deg, cnt] : base.degree_tally) {
        put(out.marking_tally, Marking::two(deg, 1).str(), binomial(d + k - 1, k - 1) * cnt);
        put(out.marking_tally, Marking::two(1, deg).str(), binomial(d + k - 1, k - 1) * cnt);
    }
    put(out.marking_tally, Marking::two(1, 1).str(),
        binomial(d + k - 1, k - 2) * (base.total + d * base.standard_count));
    put(out.marking_tally, Marking::one(1, 0).str(),
        binomial(d + k - 1, k - 1) * d * base.standard_count);

    for (const auto& [deg, cnt] : base.degree_tally)
        out.degree_tally[deg] = binomial(d + k, k) * cnt;
    if (k >= 1)
        out.degree_tally[1] =
            binomial(d + k, k - 1) * (base.total + d * base.standard_count);
    return out;
}

std::pair<BigInt, BigInt> minimal_stratum_counts(int n) {
    if (n < 3 || n % 2 == 0)
        throw std::domain_error("minimal_stratum_counts: n must be odd and >= 3");
    const int K = (n + 1) / 2;
    // weights per half-part c: all permutations whose profile is the single
    // part 2c-1, summed over markings
    std::vector<BigInt> gw(static_cast<size_t>(K) + 1), dw(static_cast<size_t>(K) + 1);
    for (int c = 1; c <= K; ++c) {
        gw[static_cast<size_t>(c)] =
            exact_div(factorial(2 * c), BigInt(c + 1), "minimal_stratum_counts");
        dw[static_cast<size_t>(c)] = factorial(2 * c);
    }
    BigInt gtotal = 0, dtotal = 0;
    std::vector<int> comp;
    std::function<void(int, BigInt, BigInt)> rec = [&](int left, BigInt gprod, BigInt dprod) {
        if (left == 0) {
            int kfac = static_cast<int>(comp.size());
            gtotal += (kfac % 2 == 1 ? gprod : -gprod);
            // for the spin difference the exclusion sign cancels against the
            // sign picked up per concatenation, leaving plus throughout
            dtotal += dprod;
            return;
        }
        for (int c = 1; c <= left; ++c) {
            comp.push_back(c);
            rec(left - c, gprod * gw[static_cast<size_t>(c)],
                dprod * dw[static_cast<size_t>(c)]);
            comp.pop_back();
        }
    };
    rec(K, 1, 1);
    BigInt pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), 2, static_cast<unsigned long>(K));
    return {gtotal, exact_div(dtotal, pw, "minimal_stratum_counts")};
}

namespace count_tables {

bool load(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        return false;
    std::string table, key, value;
    std::lock_guard<std::mutex> lock(memo().mtx);
    while (in >> table >> key >> value) {
        std::map<std::string, BigInt>* dest = nullptr;
        if (table == "c") dest = &memo().c;
        else if (table == "d") dest = &memo().d;
        else if (table == "gamma_irr") dest = &memo().girr;
        else if (table == "delta_irr") dest = &memo().dirr;
        if (!dest)
            continue;
        try {
            dest->emplace(key, BigInt(value));
        } catch (const std::exception&) {
            // advisory cache: ignore damaged lines
        }
    }
    return true;
}

bool save(const std::string& path) {
    std::ofstream out(path);
    if (!out)
        return false;
    std::lock_guard<std::mutex> lock(memo().mtx);
    auto dump = [&](const char* name, const std::map<std::string, BigInt>& table) {
        for (const auto& [key, value] : table)
            out << name << ' ' << key << ' ' << value.get_str() << '\n';
    };
    dump("c", memo().c);
    dump("d", memo().d);
    dump("gamma_irr", memo().girr);
    dump("delta_irr", memo().dirr);
    return static_cast<bool>(out);
}

void clear() {
    std::lock_guard<std::mutex> lock(memo().mtx);
    memo().c.clear();
    memo().d.clear();
    memo().girr.clear();
    memo().dirr.clear();
}

} // namespace count_tables

} // namespace rauzy
