#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "rauzy/invariant.hpp"
#include "rauzy/partition.hpp"
#include "rauzy/perm.hpp"

namespace rauzy {

/// A Rauzy diagram: the closure of a seed under the top/bottom moves (plus
/// the inversion when extended). Vertices are stored in a deterministic
/// order independent of thread count: level by level, each level sorted.
struct RauzyDiagram {
    int n = 0;
    bool extended = false;
    ReducedPermutation seed{std::vector<int>{1}};
    std::vector<ReducedPermutation> vertices;
    /// Per vertex: target index under Top, Bottom (and Invert if extended).
    std::vector<std::array<uint32_t, 3>> edges;

    size_t size() const { return vertices.size(); }
    int index_of(const ReducedPermutation& v) const; // -1 if absent
    bool contains(const ReducedPermutation& v) const { return index_of(v) >= 0; }
};

struct BuildOptions {
    bool extended = false;
    int threads = 1;
};

RauzyDiagram build_class(const ReducedPermutation& seed, const BuildOptions& opts = {});

struct ClassStats {
    uint64_t size = 0;
    uint64_t standard_count = 0;
    int left_degree = 0; // 0 for extended classes (mixed degrees)
    std::map<std::string, uint64_t> marking_tally; // key: Marking::str()
    SpinParity spin = SpinParity::Undefined;
    IntegerPartition profile;
};

ClassStats stats(const RauzyDiagram& diag);

/// Exhaustive tallies over all permutations of length n, keyed by the
/// canonical marked-profile string.
struct CensusCell {
    uint64_t all = 0, all_odd = 0, all_even = 0;
    uint64_t irr = 0, irr_odd = 0, irr_even = 0;
    uint64_t std_count = 0, std_odd = 0, std_even = 0;
};

using Census = std::map<std::string, CensusCell>;

/// Iterates all n! permutations; n is capped at a documented cost wall.
Census census(int n);

/// Sizes of all Rauzy classes on irreducible permutations of length n,
/// with one representative seed each.
struct ClassOfSn {
    ReducedPermutation seed{std::vector<int>{1}};
    uint64_t size = 0;
    IntegerPartition profile;
    int left_degree = 0;
    SpinParity spin = SpinParity::Undefined;
};
std::vector<ClassOfSn> partition_into_classes(int n);

/// The model graph on triples (a,b,c), a,c >= 1, b >= 0, a+b+c = n.
struct RotationModel {
    std::vector<std::array<int, 3>> vertices;
    std::vector<int> left_target, right_target; // indices into `vertices`
};
RotationModel rotation_model(int n);

/// Checks that (a,b,c) -> triple_perm(a,b,c) is an edge-label-preserving
/// isomorphism onto the Rauzy diagram of rotation(n), left -> Top,
/// right -> Bottom.
bool check_rotation_isomorphism(int n);

/// Deterministic DOT rendering; byte-stable for a fixed seed.
void export_dot(const RauzyDiagram& diag, std::ostream& os);

/// Size, per-degree tally and standard count of a class without storing the
/// vertex list; for large classes (packed keys only, n <= 16).
struct ClassSummary {
    uint64_t size = 0;
    uint64_t standard_count = 0;
    std::map<int, uint64_t> degree_tally;
};
ClassSummary survey_class(const ReducedPermutation& seed, bool extended, int threads = 1);

/// Cached (extended) class of the symmetric permutation on d letters with
/// k marked points inserted; the membership oracle behind
/// is_hyperelliptic_class.
const RauzyDiagram& hyperelliptic_class(int d, int k);

} // namespace rauzy
