#include "rauzy/invariant.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace rauzy {

std::vector<std::vector<int>> IntervalDiagram::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(elements.size(), 0);
    for (size_t start = 0; start < elements.size(); ++start) {
        if (seen[start])
            continue;
        std::vector<int> cyc;
        int e = static_cast<int>(start);
        while (!seen[static_cast<size_t>(e)]) {
            seen[static_cast<size_t>(e)] = 1;
            cyc.push_back(e);
            e = sigma[static_cast<size_t>(e)];
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

std::vector<int> IntervalDiagram::out_square() const {
    std::vector<int> sq(elements.size(), -1);
    for (size_t e = 0; e < elements.size(); ++e)
        if (elements[e].outgoing)
            sq[e] = sigma[static_cast<size_t>(sigma[e])];
    return sq;
}

IntegerPartition IntervalDiagram::cycle_profile() const {
    std::vector<int> parts;
    for (const auto& cyc : cycles()) {
        int outs = 0;
        for (int e : cyc)
            outs += elements[static_cast<size_t>(e)].outgoing ? 1 : 0;
        parts.push_back(outs);
    }
    return IntegerPartition(std::move(parts));
}

std::string IntervalDiagram::str() const {
    std::string out;
    for (const auto& cyc : cycles()) {
        out += '(';
        for (size_t i = 0; i < cyc.size(); ++i) {
            if (i) out += ' ';
            out += elements[static_cast<size_t>(cyc[i])].name;
        }
        out += ')';
    }
    return out;
}

namespace {

IntervalDiagram build_diagram(const ReducedPermutation& pi) {
    int n = pi.size();
    // raw sigma-tilde on 2n slots: out(letter k) -> k-1, in(letter k) -> n+k-1
    std::vector<int> raw(static_cast<size_t>(2 * n));
    std::vector<int> pos(static_cast<size_t>(n) + 1);
    for (int j = 1; j <= n; ++j)
        pos[static_cast<size_t>(pi.at(j))] = j;
    auto out_slot = [&](int letter) { return letter - 1; };
    auto in_slot = [&](int letter) { return n + letter - 1; };
    for (int a = 1; a <= n; ++a) {
        int pb = pos[static_cast<size_t>(a)];
        raw[static_cast<size_t>(out_slot(a))] =
            (pb == 1) ? out_slot(1) : in_slot(pi.at(pb - 1));
        int pt = a; // top position of a letter equals its value
        raw[static_cast<size_t>(in_slot(a))] =
            (pt != n) ? out_slot(a + 1) : in_slot(pi.at(n));
    }

    // merges: out(bottom[1]) with out(1); in(n) with in(bottom[n])
    int left_b = pi.at(1), left_t = 1;
    int right_t = n, right_b = pi.at(n);

    std::vector<int> rep(static_cast<size_t>(2 * n));
    for (int s = 0; s < 2 * n; ++s)
        rep[static_cast<size_t>(s)] = s;
    rep[static_cast<size_t>(out_slot(std::max(left_b, left_t)))] =
        out_slot(std::min(left_b, left_t));
    rep[static_cast<size_t>(in_slot(std::max(right_t, right_b)))] =
        in_slot(std::min(right_t, right_b));

    IntervalDiagram d;
    std::vector<int> id_of(static_cast<size_t>(2 * n), -1);
    for (int s = 0; s < 2 * n; ++s) {
        if (rep[static_cast<size_t>(s)] != s)
            continue;
        id_of[static_cast<size_t>(s)] = static_cast<int>(d.elements.size());
        IntervalDiagram::Element el;
        el.outgoing = s < n;
        if (s == out_slot(std::min(left_b, left_t)))
            el.name = "out(" + std::to_string(left_b) + "," + std::to_string(left_t) + ")";
        else if (s == in_slot(std::min(right_t, right_b)))
            el.name = "in(" + std::to_string(right_t) + "," + std::to_string(right_b) + ")";
        else
            el.name = (s < n ? "out(" : "in(") + std::to_string(s < n ? s + 1 : s - n + 1) + ")";
        d.elements.push_back(std::move(el));
    }
    auto id = [&](int slot) { return id_of[static_cast<size_t>(rep[static_cast<size_t>(slot)])]; };

    d.left_out = id(out_slot(left_t));
    d.right_in = id(in_slot(right_t));
    d.sigma.assign(d.elements.size(), -1);
    for (int s = 0; s < 2 * n; ++s) {
        if (rep[static_cast<size_t>(s)] != s)
            continue;
        int src;
        if (s == out_slot(std::min(left_b, left_t)))
            src = out_slot(left_t); // sigma-tilde applied to out(top-left letter)
        else if (s == in_slot(std::min(right_t, right_b)))
            src = in_slot(right_b); // sigma-tilde applied to in(bottom-right letter)
        else
            src = s;
        d.sigma[static_cast<size_t>(id(s))] = id(raw[static_cast<size_t>(src)]);
    }
    return d;
}

Marking marking_from_diagram(const IntervalDiagram& d, AngleOrientation orientation,
                             IntegerPartition* residual_out) {
    auto cycles = d.cycles();
    int cl = -1, cr = -1;
    for (size_t i = 0; i < cycles.size(); ++i) {
        for (int e : cycles[i]) {
            if (e == d.left_out) cl = static_cast<int>(i);
            if (e == d.right_in) cr = static_cast<int>(i);
        }
    }
    std::vector<int> residual_parts;
    Marking mk;
    if (cl == cr) {
        int m = static_cast<int>(cycles[static_cast<size_t>(cl)].size()) / 2;
        // steps from the left out-element to the right in-element along sigma
        int steps = 0, e = d.left_out;
        while (e != d.right_in) {
            e = d.sigma[static_cast<size_t>(e)];
            ++steps;
            if (steps > 2 * m)
                throw std::logic_error("marking walk did not close");
        }
        int a = (steps - 1) / 2;
        if (orientation == AngleOrientation::Backward)
            a = m - 1 - a;
        mk = Marking::one(m, a);
    } else {
        int ml = static_cast<int>(cycles[static_cast<size_t>(cl)].size()) / 2;
        int mr = static_cast<int>(cycles[static_cast<size_t>(cr)].size()) / 2;
        mk = Marking::two(ml, mr);
    }
    for (size_t i = 0; i < cycles.size(); ++i) {
        if (static_cast<int>(i) == cl || static_cast<int>(i) == cr)
            continue;
        residual_parts.push_back(static_cast<int>(cycles[i].size()) / 2);
    }
    if (residual_out)
        *residual_out = IntegerPartition(std::move(residual_parts));
    return mk;
}

} // namespace

IntervalDiagram interval_diagram(const ReducedPermutation& pi) {
    if (!pi.is_irreducible())
        throw std::domain_error("interval diagram needs an irreducible permutation");
    if (pi.size() < 2)
        throw std::domain_error("interval diagram needs length >= 2");
    return build_diagram(pi);
}

IntervalDiagram interval_diagram_unchecked_for_tests(const ReducedPermutation& pi) {
    if (pi.size() < 2)
        throw std::domain_error("interval diagram needs length >= 2");
    return build_diagram(pi);
}

std::vector<int> Marking::profile_parts() const {
    std::vector<int> parts;
    if (type == Type::One) {
        if (m > 0) parts.push_back(m);
    } else {
        if (ml > 0) parts.push_back(ml);
        if (mr > 0) parts.push_back(mr);
    }
    return parts;
}

std::string Marking::str() const {
    if (type == Type::One)
        return std::to_string(m) + "|" + std::to_string(a);
    return std::to_string(ml) + "o" + std::to_string(mr);
}

Marking Marking::parse(std::string_view text) {
    std::string s(text);
    auto bar = s.find('|');
    auto dot = s.find('o');
    try {
        if (bar != std::string::npos)
            return Marking::one(std::stoi(s.substr(0, bar)), std::stoi(s.substr(bar + 1)));
        if (dot != std::string::npos)
            return Marking::two(std::stoi(s.substr(0, dot)), std::stoi(s.substr(dot + 1)));
    } catch (const std::exception&) {
    }
    throw std::domain_error("bad marking text: '" + s + "'");
}

IntegerPartition MarkedProfile::full_profile() const {
    std::vector<int> parts = residual.parts();
    for (int v : marking.profile_parts())
        parts.push_back(v);
    return IntegerPartition(std::move(parts));
}

int MarkedProfile::letters() const {
    int s = residual.sum();
    if (marking.type == Marking::Type::One)
        s += marking.m;
    else
        s += marking.ml + marking.mr;
    return s + 1;
}

bool MarkedProfile::genuine() const {
    if (marking.type == Marking::Type::One)
        return marking.m >= 1;
    return marking.ml >= 1 && marking.mr >= 1;
}

bool MarkedProfile::valid() const {
    return genuine() && full_profile().valid_profile_parity();
}

std::string MarkedProfile::str() const {
    return marking.str() + ";" + residual.str();
}

MarkedProfile MarkedProfile::parse(std::string_view text) {
    std::string s(text);
    auto semi = s.find(';');
    if (semi == std::string::npos)
        throw std::domain_error("bad marked profile text: '" + s + "'");
    return MarkedProfile{Marking::parse(s.substr(0, semi)),
                         IntegerPartition::parse(s.substr(semi + 1))};
}

MarkedProfile concat_marked_profile(const MarkedProfile& left, const MarkedProfile& right) {
    IntegerPartition res = disjoint_union(left.residual, right.residual);
    const Marking& l = left.marking;
    const Marking& r = right.marking;
    using T = Marking::Type;
    if (l.type == T::One && r.type == T::One)
        return MarkedProfile{Marking::one(l.m + r.m + 1, l.a + r.a + 1), res};
    if (l.type == T::One && r.type == T::Two)
        return MarkedProfile{Marking::two(l.m + r.ml + 1, r.mr), res};
    if (l.type == T::Two && r.type == T::One)
        return MarkedProfile{Marking::two(l.ml, l.mr + r.m + 1), res};
    std::vector<int> parts = res.parts();
    parts.push_back(l.mr + r.ml + 1);
    return MarkedProfile{Marking::two(l.ml, r.mr), IntegerPartition(std::move(parts))};
}

MarkedProfile marked_profile(const ReducedPermutation& pi, AngleOrientation orientation) {
    auto block_profile = [&](const ReducedPermutation& block) {
        if (block.size() == 1)
            return MarkedProfile{Marking::two(0, 0), IntegerPartition{}};
        IntervalDiagram d = build_diagram(block);
        IntegerPartition residual;
        Marking mk = marking_from_diagram(d, orientation, &residual);
        return MarkedProfile{mk, residual};
    };
    if (pi.is_irreducible())
        return block_profile(pi);
    auto blocks = decompose(pi);
    MarkedProfile acc = block_profile(blocks.front());
    for (size_t i = 1; i < blocks.size(); ++i)
        acc = concat_marked_profile(acc, block_profile(blocks[i]));
    return acc;
}

IntegerPartition profile(const ReducedPermutation& pi) {
    return marked_profile(pi).full_profile();
}

int left_degree(const ReducedPermutation& pi) {
    return marked_profile(pi).marking.left_degree();
}

int QuadraticForm::evaluate(uint64_t x) const {
    int v = std::popcount(qdiag & x) & 1;
    for (int i = 0; i < n; ++i) {
        if (!(x & (uint64_t{1} << i)))
            continue;
        uint64_t higher = x & ~((uint64_t{2} << i) - 1);
        v ^= std::popcount(omega[static_cast<size_t>(i)] & higher) & 1;
    }
    return v;
}

int QuadraticForm::bilinear(uint64_t x, uint64_t y) const {
    int v = 0;
    for (int i = 0; i < n; ++i)
        if (x & (uint64_t{1} << i))
            v ^= std::popcount(omega[static_cast<size_t>(i)] & y) & 1;
    return v;
}

int arf(const QuadraticForm& q) {
    std::vector<uint64_t> basis;
    for (int i = 0; i < q.n; ++i)
        basis.push_back(uint64_t{1} << i);
    int acc = 0;
    while (!basis.empty()) {
        uint64_t u = basis.front();
        size_t vi = 0;
        for (size_t j = 1; j < basis.size(); ++j) {
            if (q.bilinear(u, basis[j])) {
                vi = j;
                break;
            }
        }
        if (vi == 0) {
            // u is in the kernel of the restricted form
            if (q.evaluate(u))
                throw std::domain_error("no spin structure");
            basis.erase(basis.begin());
            continue;
        }
        uint64_t v = basis[vi];
        acc ^= q.evaluate(u) & q.evaluate(v);
        basis.erase(basis.begin() + static_cast<long>(vi));
        basis.erase(basis.begin());
        for (uint64_t& w : basis) {
            if (q.bilinear(w, v)) w ^= u;
            if (q.bilinear(w, u)) w ^= v;
        }
    }
    return acc;
}

std::vector<uint64_t> intersection_matrix(const ReducedPermutation& pi) {
    int n = pi.size();
    if (n > 64)
        throw std::domain_error("intersection matrix limited to 64 letters");
    std::vector<int> pos(static_cast<size_t>(n) + 1);
    for (int j = 1; j <= n; ++j)
        pos[static_cast<size_t>(pi.at(j))] = j;
    std::vector<uint64_t> rows(static_cast<size_t>(n), 0);
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (pos[static_cast<size_t>(a)] > pos[static_cast<size_t>(b)]) {
                rows[static_cast<size_t>(a - 1)] |= uint64_t{1} << (b - 1);
                rows[static_cast<size_t>(b - 1)] |= uint64_t{1} << (a - 1);
            }
    return rows;
}

SpinParity spin_parity(const ReducedPermutation& pi) {
    if (!profile(pi).all_odd())
        return SpinParity::Undefined;
    QuadraticForm q;
    q.n = pi.size();
    q.omega = intersection_matrix(pi);
    q.qdiag = q.n == 64 ? ~uint64_t{0} : (uint64_t{1} << q.n) - 1;
    try {
        return arf(q) ? SpinParity::Odd : SpinParity::Even;
    } catch (const std::domain_error&) {
        return SpinParity::Undefined;
    }
}

std::string spin_str(SpinParity s) {
    switch (s) {
    case SpinParity::Even: return "0";
    case SpinParity::Odd: return "1";
    default: return "undefined";
    }
}

} // namespace rauzy
