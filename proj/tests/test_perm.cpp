#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "rauzy/invariant.hpp"
#include "rauzy/perm.hpp"

using namespace rauzy;

namespace {
ReducedPermutation W(const char* text) { return ReducedPermutation::parse(text); }
} // namespace

TEST_CASE("irreducibility and standardness") {
    CHECK(W("2 1").is_irreducible());
    CHECK(W("1").is_irreducible());
    CHECK_FALSE(W("1 2").is_irreducible());
    CHECK_FALSE(W("2 3 1 4").is_irreducible());
    CHECK(W("4 3 2 1").is_standard());
    CHECK(W("4 2 3 1").is_standard());
    CHECK_FALSE(W("2 1 3").is_standard());
}

TEST_CASE("Rauzy moves") {
    CHECK(rauzy_move(W("4 3 2 1"), MoveKind::Top) == W("4 1 3 2"));
    CHECK(rauzy_move(W("4 3 2 1"), MoveKind::Bottom) == W("2 4 3 1"));
    CHECK_THROWS_AS(rauzy_move(W("1 2"), MoveKind::Top), std::domain_error);
}

TEST_CASE("inversion") {
    CHECK(invert_sides(W("4 3 2 1")) == W("4 3 2 1"));
    CHECK(invert_sides(W("4 2 3 1")) == W("4 2 3 1"));
    CHECK(invert_sides(invert_sides(W("3 5 4 2 1"))) == W("3 5 4 2 1"));
}

TEST_CASE("concatenation and factorization") {
    CHECK(concatenate(W("2 1"), W("2 1")) == W("2 1 4 3"));
    CHECK(concatenate(W("1"), W("3 1 2")) == W("1 4 2 3"));
    CHECK(concatenate({W("1"), W("1"), W("1"), W("1")}) == W("1 2 3 4"));
    auto blocks = decompose(W("2 1 4 3"));
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0] == W("2 1"));
    CHECK(blocks[1] == W("2 1"));
    blocks = decompose(W("3 2 1 4"));
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0] == W("3 2 1"));
    CHECK(blocks[1] == W("1"));
    CHECK(decompose(W("2 1")).size() == 1);
}

TEST_CASE("ends removal") {
    CHECK(degenerate(W("4 3 2 1")) == W("2 1"));
    CHECK(degenerate(W("4 2 3 1")) == W("1 2"));
    CHECK(co_degenerate(W("2 1 4 3")) == W("6 3 2 5 4 1"));
    CHECK_THROWS_AS(degenerate(W("2 1 3")), std::domain_error);
}

TEST_CASE("named constructions") {
    CHECK(symmetric(4) == W("4 3 2 1"));
    CHECK(rotation(4) == W("4 2 3 1"));
    CHECK(triple_perm(1, 2, 1) == rotation(4));
    CHECK_THROWS_AS(triple_perm(0, 1, 1), std::domain_error);
}

TEST_CASE("packed keys round trip") {
    for (const char* t : {"1", "2 1", "4 2 3 1", "8 3 2 5 4 7 6 1"}) {
        ReducedPermutation pi = W(t);
        CHECK(ReducedPermutation::from_packed(pi.packed(), pi.size()) == pi);
    }
}

TEST_CASE("labeled permutations reduce") {
    LabeledPermutation lp = LabeledPermutation::parse("A B C D / B C D A");
    CHECK(lp.reduce() == W("2 3 4 1"));
    CHECK(LabeledPermutation::section(W("4 2 3 1")).reduce() == W("4 2 3 1"));
    CHECK_THROWS_AS(LabeledPermutation::parse("A B / B C"), std::invalid_argument);
}

TEST_CASE("marked point insertion splits one interval") {
    CHECK(insert_marked_point(W("2 1"), 2) == W("2 3 1"));
    CHECK(insert_marked_point(W("2 1"), 1) == W("3 1 2"));
}

TEST_CASE("row cycles of a standard permutation") {
    Constellation c = standard_to_constellation(LabeledPermutation::section(W("4 3 2 1")));
    REQUIRE(c.alphabet.size() == 3);
    // single 3-cycle product, matching profile (3)
    std::vector<int> prod = c.product();
    int len = 1, x = prod[0];
    while (x != 0) {
        x = prod[static_cast<size_t>(x)];
        ++len;
    }
    CHECK(len == 3);

    Constellation c2 = standard_to_constellation(LabeledPermutation::section(W("3 2 1")));
    CHECK(c2.tau_t == c2.tau_b);
    std::vector<int> prod2 = c2.product();
    for (size_t i = 0; i < prod2.size(); ++i)
        CHECK(prod2[i] == static_cast<int>(i));
}
