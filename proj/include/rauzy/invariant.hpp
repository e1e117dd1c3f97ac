#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rauzy/partition.hpp"
#include "rauzy/perm.hpp"

namespace rauzy {

/// The interval diagram: a permutation of tagged half-edges, two per merged
/// letter (an out-element and an in-element). Cycles alternate out/in, so a
/// cycle of length 2m corresponds to a singularity of angle 2*pi*m.
struct IntervalDiagram {
    struct Element {
        bool outgoing = false;
        std::string name; // "out(4,1)", "in(3)", ...
    };
    std::vector<Element> elements;
    std::vector<int> sigma;   // image of each element, 0-based
    int left_out = -1;        // merged out-element (left endpoint)
    int right_in = -1;        // merged in-element (right endpoint)

    std::vector<std::vector<int>> cycles() const;
    /// sigma^2 restricted to out-elements (image per element; -1 on in-elements).
    std::vector<int> out_square() const;
    /// Multiset of out-cycle lengths.
    IntegerPartition cycle_profile() const;
    std::string str() const; // disjoint-cycle form
};

/// Builds sigma_pi for an irreducible permutation of length >= 2.
IntervalDiagram interval_diagram(const ReducedPermutation& pi);

/// Same construction without the irreducibility check; only meaningful for
/// empirical comparisons against the block fold.
IntervalDiagram interval_diagram_unchecked_for_tests(const ReducedPermutation& pi);

/// Marking of the interval endpoints: type 1 `m|a` when both ends see the
/// same singularity, type 2 `ml o mr` otherwise. Zeros occur only in the
/// degenerate length-1 block convention 0o0.
struct Marking {
    enum class Type { One, Two };
    Type type = Type::One;
    int m = 0, a = 0;   // Type::One
    int ml = 0, mr = 0; // Type::Two

    static Marking one(int m, int a) { return Marking{Type::One, m, a, 0, 0}; }
    static Marking two(int ml, int mr) { return Marking{Type::Two, 0, 0, ml, mr}; }

    int left_degree() const { return type == Type::One ? m : ml; }
    /// Marking parts that belong to the profile (zeros dropped).
    std::vector<int> profile_parts() const;
    std::string str() const; // "3|1" or "1o3"
    static Marking parse(std::string_view text);

    auto operator<=>(const Marking&) const = default;
};

struct MarkedProfile {
    Marking marking;
    IntegerPartition residual;

    /// residual together with the nonzero marking parts.
    IntegerPartition full_profile() const;
    /// Length of the permutations carrying this marked profile
    /// (marking parts, zeros included, plus residual sum plus one).
    int letters() const;
    /// No zero marking parts.
    bool genuine() const;
    /// genuine and s+l of the full profile even.
    bool valid() const;

    std::string str() const; // "3|1;1,1", "1o1;-"
    static MarkedProfile parse(std::string_view text);

    auto operator<=>(const MarkedProfile&) const = default;
};

/// Which way the angle of a type-1 marking is counted along the cycle.
/// Forward is the convention pinned by the unit tests.
enum class AngleOrientation { Forward, Backward };

/// Marked profile of any permutation: direct from the interval diagram when
/// irreducible, folded over the irreducible blocks otherwise. Length-1
/// blocks carry the degenerate marking 0o0 with empty residual.
MarkedProfile marked_profile(const ReducedPermutation& pi,
                             AngleOrientation orientation = AngleOrientation::Forward);

/// Combines marked profiles across a concatenation.
MarkedProfile concat_marked_profile(const MarkedProfile& left, const MarkedProfile& right);

/// Profile (zeros dropped). Works for reducible input via the block fold.
IntegerPartition profile(const ReducedPermutation& pi);

/// Length of the singularity cycle at the left endpoint.
int left_degree(const ReducedPermutation& pi);

/// Quadratic form over F2 given by values on a basis plus the associated
/// bilinear form; q(x+y) = q(x) + q(y) + B(x,y).
struct QuadraticForm {
    int n = 0;                   // dimension, <= 64
    std::vector<uint64_t> omega; // row bitmasks of the bilinear form
    uint64_t qdiag = 0;          // q on basis vectors

    int evaluate(uint64_t x) const;
    int bilinear(uint64_t x, uint64_t y) const;
};

/// Arf invariant by symplectic reduction. Throws std::domain_error
/// ("no spin structure") when q does not vanish on ker(B).
int arf(const QuadraticForm& q);

/// Crossing matrix: entry (alpha,beta) is 1 iff the two letters appear in
/// opposite order on the two rows. Returned as row bitmasks.
std::vector<uint64_t> intersection_matrix(const ReducedPermutation& pi);

enum class SpinParity { Even = 0, Odd = 1, Undefined = 2 };

/// Arf invariant of the canonical form with q = 1 on every basis letter.
/// Undefined when the profile has an even part or a zero-angle end
/// (permutations with length-1 blocks).
SpinParity spin_parity(const ReducedPermutation& pi);

std::string spin_str(SpinParity s);

/// Membership in the (extended) Rauzy class of the symmetric permutation
/// with the matching number of marked points. Profiles outside the families
/// (2g-1) + 1^k and (g,g) + 1^k return false.
bool is_hyperelliptic_class(const ReducedPermutation& pi);

} // namespace rauzy
