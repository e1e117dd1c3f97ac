#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rauzy/invariant.hpp"
#include "rauzy/partition.hpp"

namespace rauzy {

/// Count of pairs of n-cycles with fixed product of cycle type p
/// (equivalently, labeled standard permutations with profile p).
/// Requires p nonempty with s(p)+l(p) even.
BigInt c_closed(const IntegerPartition& p);
BigInt c_recursive(const IntegerPartition& p);
BigInt c_goupil_schaeffer(const IntegerPartition& p);

/// Spin-weighted analogue; requires all parts odd.
BigInt d_closed(const IntegerPartition& p);
BigInt d_recursive(const IntegerPartition& p);

/// Number of standard permutations with the given marked profile, and the
/// odd-minus-even spin difference. gamma_std throws on parity violations;
/// out-of-range type-1 angles yield 0.
BigInt gamma_std(const MarkedProfile& mp);
BigInt delta_std(const MarkedProfile& mp);

/// Same counts over all permutations (via the ends-removal bijection onto
/// standard permutations two letters longer).
BigInt gamma_all(const MarkedProfile& mp);
BigInt delta_all(const MarkedProfile& mp);

/// Same counts over irreducible permutations, by inclusion-exclusion over
/// the first irreducible block of a concatenation. Memoized.
BigInt gamma_irr(const MarkedProfile& mp);
BigInt delta_irr(const MarkedProfile& mp);

/// Number of irreducible permutations of length n.
BigInt irreducible_count(int n);

/// All genuine marked profiles whose full profile is p.
std::vector<MarkedProfile> markings_of_profile(const IntegerPartition& p);

/// gamma_irr / delta_irr aggregated over the markings with a given left
/// degree.
BigInt gamma_irr_degree(const IntegerPartition& p, int degree);
BigInt delta_irr_degree(const IntegerPartition& p, int degree);

enum class ComponentKind { Connected, Hyperelliptic, OddSpin, EvenSpin, NonHyperelliptic };

std::string component_kind_str(ComponentKind k);

struct ComponentDescriptor {
    ComponentKind kind;
    IntegerPartition profile;
};

/// Connected components of the stratum with the given profile, including
/// the small-genus exceptions. Parts equal to 1 are marked points and do
/// not change the component list.
std::vector<ComponentDescriptor> stratum_components(const IntegerPartition& p);

struct ClassCardinality {
    ComponentKind kind;
    int degree;
    BigInt cardinality;
};

/// Size of every Rauzy class with the given profile, keyed by component and
/// left degree. Computed from the counting recurrences, no graph search.
std::vector<ClassCardinality> class_cardinalities(const IntegerPartition& p);

/// Extended-class total for the same profile.
BigInt extended_class_total(const IntegerPartition& p);

/// Per-marking and per-degree sizes of the hyperelliptic class on n letters
/// with k marked points. The k = 0 marking tallies come from breadth-first
/// search (normative); closed binomial candidates are reported alongside.
struct HypCounts {
    int n = 0, k = 0;
    std::map<std::string, BigInt> marking_tally;     // search-backed (k=0), lifted (k>0)
    std::map<std::string, BigInt> closed_candidates; // binomial formulas, for comparison
    std::map<int, BigInt> per_degree;
    BigInt total;
};
HypCounts hyp_counts(int n, int k);

/// Inputs for lifting class sizes across added marked points: the base
/// class has d letters, no part 1 in its profile, `total` elements,
/// `standard_count` standard elements, and per-marking / per-degree tallies.
struct LiftInput {
    int d = 0;
    BigInt total;
    BigInt standard_count;
    std::map<std::string, BigInt> marking_tally;
    std::map<int, BigInt> degree_tally;
};
struct LiftResult {
    BigInt total;
    std::map<std::string, BigInt> marking_tally;
    std::map<int, BigInt> degree_tally;
};
LiftResult marked_point_lift(const LiftInput& base, int k);

/// gamma_irr((n)) and delta_irr((n)) for the single-part profile, by the
/// alternating sums over compositions. n odd >= 3.
std::pair<BigInt, BigInt> minimal_stratum_counts(int n);

/// Memo tables behind the recursive counters, persistable as plain text.
/// Loading is advisory: unknown lines are skipped, missing files ignored.
namespace count_tables {
bool load(const std::string& path);
bool save(const std::string& path);
void clear();
} // namespace count_tables

} // namespace rauzy
