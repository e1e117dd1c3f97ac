#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rauzy {

enum class MoveKind { Top, Bottom, Invert };

/// A permutation in one-line notation: bottom[j] is the letter at position
/// j+1 of the bottom row when the top row is 1..n. Positions and letters are
/// 1-based in the public interface.
class ReducedPermutation {
public:
    explicit ReducedPermutation(std::vector<int> bottom);

    /// Parses a space-separated bottom row, e.g. "4 2 3 1".
    static ReducedPermutation parse(std::string_view text);

    int size() const { return static_cast<int>(bottom_.size()); }
    /// Letter at bottom position pos (1-based).
    int at(int pos) const { return bottom_[static_cast<size_t>(pos - 1)]; }
    /// Bottom position of a letter (1-based).
    int position_of(int letter) const;
    const std::vector<int>& bottom() const { return bottom_; }

    bool is_irreducible() const;
    bool is_standard() const;

    /// 4 bits per entry, entry i-1 in nibble i-1; requires size() <= 16.
    uint64_t packed() const;
    static ReducedPermutation from_packed(uint64_t key, int n);

    std::string str() const;

    auto operator<=>(const ReducedPermutation&) const = default;

private:
    std::vector<int> bottom_;
};

/// A two-row table of labels; rows are orderings of a common alphabet.
class LabeledPermutation {
public:
    LabeledPermutation(std::vector<std::string> top, std::vector<std::string> bottom);

    /// Parses the two-row form "a b c / b c a".
    static LabeledPermutation parse(std::string_view text);

    /// The section (id, pi) with labels "1".."n".
    static LabeledPermutation section(const ReducedPermutation& pi);

    int size() const { return static_cast<int>(top_.size()); }
    const std::vector<std::string>& top() const { return top_; }
    const std::vector<std::string>& bottom() const { return bottom_; }

    ReducedPermutation reduce() const;

private:
    std::vector<std::string> top_, bottom_;
};

/// Rauzy moves R_t / R_b. The input must be irreducible; the result is again
/// irreducible. MoveKind::Invert is routed to invert_sides.
ReducedPermutation rauzy_move(const ReducedPermutation& pi, MoveKind kind);

/// The inversion s: flip the table top<->bottom and left<->right. Involution.
ReducedPermutation invert_sides(const ReducedPermutation& pi);

/// Block-diagonal juxtaposition.
ReducedPermutation concatenate(const ReducedPermutation& a, const ReducedPermutation& b);
ReducedPermutation concatenate(const std::vector<ReducedPermutation>& factors);

/// The unique maximal factorization into irreducible blocks.
std::vector<ReducedPermutation> decompose(const ReducedPermutation& pi);

/// Removes the ends of a standard permutation: length n+2 -> n.
ReducedPermutation degenerate(const ReducedPermutation& pi);
/// Inverse of degenerate: any permutation -> standard permutation.
ReducedPermutation co_degenerate(const ReducedPermutation& pi);

/// pi(k) = n-k+1, one-line (n n-1 ... 1).
ReducedPermutation symmetric(int n);
/// pi(1) = n, pi(n) = 1, pi(k) = k otherwise; one-line (n 2 3 ... n-1 1).
ReducedPermutation rotation(int n);
/// Three-block permutation on a+b+c letters with the outer blocks swapped.
ReducedPermutation triple_perm(int a, int b, int c);

/// Splits interval `letter` in two, i.e. adds one marked point inside it.
ReducedPermutation insert_marked_point(const ReducedPermutation& pi, int letter);

/// The two (n-1)-cycles read off the rows of a standard permutation on n
/// letters, acting on the quotient alphabet in which the two end letters are
/// merged. tau_t * tau_b^{-1} equals the outgoing interval-diagram
/// permutation.
struct Constellation {
    std::vector<std::string> alphabet; // quotient letters; index 0 is the merged pair
    std::vector<int> tau_t, tau_b;     // images, 0-based over `alphabet`
    std::vector<int> product() const;  // tau_t o tau_b^{-1}
};

Constellation standard_to_constellation(const LabeledPermutation& pi);

} // namespace rauzy
