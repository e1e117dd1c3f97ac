#include <doctest.h>

#include "rauzy/count.hpp"
#include "rauzy/partition.hpp"

using namespace rauzy;

namespace {
IntegerPartition P(const char* text) { return IntegerPartition::parse(text); }
MarkedProfile MP(const char* text) { return MarkedProfile::parse(text); }
} // namespace

TEST_CASE("c values") {
    CHECK(c_closed(P("1,1,1")) == 2);
    CHECK(c_closed(P("3")) == 1);
    CHECK(c_closed(P("2,2")) == 2);
    CHECK(c_recursive(P("1")) == 1);
    CHECK(c_recursive(P("5")) == 8);
    CHECK(c_closed(P("5")) == 8);
    CHECK_THROWS_AS(c_closed(P("2")), std::domain_error);
    for (const char* t : {"3,1", "5,1", "3,3", "2,2,1,1", "4,2", "7", "3,1,1,1"}) {
        CHECK(c_closed(P(t)) == c_recursive(P(t)));
        CHECK(c_closed(P(t)) == c_goupil_schaeffer(P(t)));
    }
    CHECK(c_goupil_schaeffer(P("3")) == 1);
    CHECK(c_goupil_schaeffer(P("1,1,1")) == 2);
}

TEST_CASE("d values") {
    CHECK(d_closed(P("1,1,1")) == 2);
    CHECK(d_closed(P("5")) == 6);
    CHECK(d_closed(P("3,1")) == 3);
    CHECK(d_recursive(P("5")) == d_closed(P("5")));
    CHECK(d_recursive(P("3,3,1")) == d_closed(P("3,3,1")));
    CHECK_THROWS_AS(d_closed(P("2,2")), std::domain_error);
}

TEST_CASE("standard counts by marked profile") {
    CHECK(gamma_std(MP("3|1;-")) == 1);
    CHECK(delta_std(MP("3|1;-")) == 1);
    CHECK(gamma_std(MP("1o1;1")) == 1);
    CHECK(gamma_std(MP("3|0;-")) == 0); // angle out of the standard range
    CHECK(gamma_std(MP("1|0;-")) == 1); // the two-letter standard
    CHECK(gamma_std(MP("0o0;-")) == 1); // the one-letter permutation
}

TEST_CASE("irreducible counts by marked profile") {
    CHECK(gamma_irr(MP("1|0;1,1")) == 3);
    CHECK(gamma_irr(MP("1o1;1")) == 3);
    BigInt total = 0;
    for (const auto& mp : markings_of_profile(P("3")))
        total += gamma_irr(mp);
    CHECK(total == 7);
    CHECK(gamma_irr(MP("0o0;-")) == 1);
    CHECK(gamma_irr(MP("0o0;1")) == 0);
}

TEST_CASE("irreducible permutation counts") {
    CHECK(irreducible_count(1) == 1);
    CHECK(irreducible_count(4) == 13);
    CHECK(irreducible_count(6) == 461);
}

TEST_CASE("stratum components") {
    auto comps = stratum_components(P("5"));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].kind == ComponentKind::Hyperelliptic);
    CHECK(comps[1].kind == ComponentKind::OddSpin);
    comps = stratum_components(P("2,2"));
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].kind == ComponentKind::Connected);
    comps = stratum_components(P("7"));
    REQUIRE(comps.size() == 3);
    CHECK(comps[0].kind == ComponentKind::Hyperelliptic);
    CHECK(comps[1].kind == ComponentKind::OddSpin);
    CHECK(comps[2].kind == ComponentKind::EvenSpin);
}

TEST_CASE("class cardinalities from formulas") {
    auto table = class_cardinalities(P("5"));
    REQUIRE(table.size() == 2);
    CHECK(table[0].kind == ComponentKind::Hyperelliptic);
    CHECK(table[0].cardinality == 31);
    CHECK(table[1].kind == ComponentKind::OddSpin);
    CHECK(table[1].cardinality == 134);

    std::map<int, BigInt> conn;
    for (const auto& e : class_cardinalities(P("3,1,1"))) {
        CHECK(e.kind == ComponentKind::Connected);
        conn[e.degree] = e.cardinality;
    }
    CHECK(conn[3] == 105);
    CHECK(conn[1] == 66);

    conn.clear();
    for (const auto& e : class_cardinalities(P("2,2,1")))
        conn[e.degree] = e.cardinality;
    CHECK(conn[2] == 90);
    CHECK(conn[1] == 20);

    CHECK(extended_class_total(P("1,1,1,1,1")) == 15);
}

TEST_CASE("hyperelliptic tallies") {
    HypCounts h4 = hyp_counts(4, 0);
    BigInt total = 0;
    for (const auto& [mk, v] : h4.marking_tally)
        total += v;
    CHECK(total == 7);
    HypCounts h5 = hyp_counts(5, 0);
    CHECK(h5.marking_tally.at("2o2") == 7);
    HypCounts h6 = hyp_counts(6, 0);
    total = 0;
    for (const auto& [mk, v] : h6.marking_tally)
        total += v;
    CHECK(total == 31);
    CHECK(h6.marking_tally == h6.closed_candidates);
}

TEST_CASE("marked point lift") {
    LiftInput base;
    base.d = 4;
    base.total = 7;
    base.standard_count = 1;
    base.marking_tally = {{"3|0", BigInt(3)}, {"3|1", BigInt(1)}, {"3|2", BigInt(3)}};
    base.degree_tally = {{3, BigInt(7)}};
    CHECK(marked_point_lift(base, 0).total == 7);
    LiftResult lifted = marked_point_lift(base, 1);
    CHECK(lifted.total == 46);
    CHECK(lifted.degree_tally.at(3) == binomial(5, 1) * 7);
    CHECK(lifted.degree_tally.at(1) == binomial(5, 0) * (7 + 4));
    LiftInput bad = base;
    bad.marking_tally["1o3"] = 1;
    CHECK_THROWS_AS(marked_point_lift(bad, 1), std::domain_error);
}

TEST_CASE("minimal stratum sums") {
    auto [g3, d3] = minimal_stratum_counts(3);
    CHECK(g3 == 7);
    CHECK(d3 == 7);
    auto [g5, d5] = minimal_stratum_counts(5);
    CHECK(g5 == 165);
    CHECK(d5 == 103);
    CHECK_THROWS_AS(minimal_stratum_counts(4), std::domain_error);
}
