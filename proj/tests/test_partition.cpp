#include <doctest.h>

#include "rauzy/partition.hpp"

using namespace rauzy;

namespace {
IntegerPartition P(const char* text) { return IntegerPartition::parse(text); }
} // namespace

TEST_CASE("parsing and canonical text") {
    CHECK(P("4,3,2,1").str() == "4,3,2,1");
    CHECK(P("1, 3, 2").str() == "3,2,1");
    CHECK(P("-").str() == "-");
    CHECK(P("-").empty());
    CHECK_THROWS_AS(P("3,x"), std::domain_error);
    CHECK_THROWS_AS(P("0"), std::domain_error);
}

TEST_CASE("disjoint union") {
    CHECK(disjoint_union(P("3,1"), P("1")) == P("3,1,1"));
    CHECK(disjoint_union(P("-"), P("5")) == P("5"));
    IntegerPartition u = disjoint_union(P("3,1"), P("3,1"));
    CHECK(u == P("3,3,1,1"));
    CHECK(u.sum() == 8);
    CHECK(u.length() == 4);
}

TEST_CASE("splitting") {
    CHECK(split(P("3,1,1"), 3, 1) == P("1,1,1,1"));
    CHECK(split(P("3,1,1"), 3, 0) == P("2,1,1"));
    CHECK(split(P("5"), 5, 2) == P("2,2"));
    CHECK_THROWS_AS(split(P("3,1,1"), 2, 0), std::domain_error);
}

TEST_CASE("collapsing") {
    CHECK(collapse(P("3,1,1"), 3, 1) == P("3,1"));
    CHECK(collapse(P("1,1,1"), 1, 1) == P("1,1"));
    CHECK(collapse(P("3,3"), 3, 3) == P("5"));
    CHECK_THROWS_AS(collapse(P("3,1"), 3, 3), std::domain_error);
}

TEST_CASE("centralizer order") {
    CHECK(centralizer_order(P("1")) == 1);
    CHECK(centralizer_order(P("3,1,1")) == 6);
    CHECK(centralizer_order(P("2,2")) == 8);
    CHECK(centralizer_order(P("-")) == 1);
}

TEST_CASE("subpartitions with multiplicity") {
    CHECK(subpartitions_with_multiplicity(P("-")).size() == 1);
    auto subs = subpartitions_with_multiplicity(P("1,3"));
    CHECK(subs.size() == 4);
    int copies = 0;
    for (const auto& q : subpartitions_with_multiplicity(P("1,1,3")))
        if (q == P("3,1"))
            ++copies;
    CHECK(copies == 2);
}

TEST_CASE("distinct splits cover the multiset once each") {
    auto splits = distinct_splits(P("1,1"));
    CHECK(splits.size() == 3);
    for (const auto& [a, b] : splits)
        CHECK(disjoint_union(a, b) == P("1,1"));
}

TEST_CASE("genus") {
    CHECK(genus_of(P("1,1,1")).g == 1);
    CHECK(genus_of(P("3")).g == 2);
    CHECK(genus_of(P("4,3,2,1")).g == 4);
    CHECK_THROWS_AS(genus_of(P("2")), std::domain_error);
}
