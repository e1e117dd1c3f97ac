#include <doctest.h>

#include "rauzy/explore.hpp"
#include "rauzy/invariant.hpp"
#include "rauzy/perm.hpp"

using namespace rauzy;

namespace {
ReducedPermutation W(const char* text) { return ReducedPermutation::parse(text); }
IntegerPartition P(const char* text) { return IntegerPartition::parse(text); }
MarkedProfile MP(const char* text) { return MarkedProfile::parse(text); }
} // namespace

TEST_CASE("interval diagram cycles") {
    // the table (A B C D / B C D A) reduces to (2 3 4 1): three 2-cycles
    IntervalDiagram d = interval_diagram(W("2 3 4 1"));
    CHECK(d.cycles().size() == 3);
    for (const auto& c : d.cycles())
        CHECK(c.size() == 2);
    CHECK(interval_diagram(W("2 1")).cycles().size() == 1);
    CHECK(interval_diagram(W("4 2 3 1")).cycles().size() == 3);
    CHECK_THROWS_AS(interval_diagram(W("1 2")), std::domain_error);
}

TEST_CASE("profiles") {
    CHECK(profile(W("4 3 2 1")) == P("3"));
    CHECK(profile(W("4 2 3 1")) == P("1,1,1"));
    CHECK(profile(concatenate(W("3 5 4 2 1"), W("2 5 4 1 3"))) == P("7,1,1"));
}

TEST_CASE("markings pin the angle orientation") {
    CHECK(marked_profile(W("2 4 5 1 3")).str() == "3|0;1");
    CHECK(marked_profile(W("4 5 3 2 1")).str() == "3|1;1");
    CHECK(marked_profile(W("2 5 3 4 1")).str() == "3|2;1");
    // the opposite walk direction would reverse the angles
    CHECK(marked_profile(W("2 4 5 1 3"), AngleOrientation::Backward).str() == "3|2;1");
    CHECK(marked_profile(W("2 5 3 4 1"), AngleOrientation::Backward).str() == "3|0;1");
    // type-2 markings of the two pinned factors
    CHECK(marked_profile(W("3 5 4 2 1")).str() == "1o3;-");
    CHECK(marked_profile(W("2 5 4 1 3")).str() == "3o1;-");
}

TEST_CASE("block fold handles reducible input") {
    CHECK(marked_profile(W("2 1 4 3")).str() == "3|1;-");
    CHECK(marked_profile(W("1")).str() == "0o0;-");
    CHECK(marked_profile(W("1 2")).str() == "0o0;1");
    CHECK(profile(W("1 2")) == P("1"));
    // ends removal agrees with the fold on the standard lift
    CHECK(marked_profile(W("6 3 2 5 4 1")).str() == "5|2;-");
}

TEST_CASE("marked profile text round trip") {
    for (const char* t : {"3|1;1,1", "1o1;1", "0o0;-", "3|0;-"}) {
        CHECK(MP(t).str() == t);
    }
    CHECK(MP("3|1;1,1").full_profile() == P("3,1,1"));
    CHECK(MP("1o1;1").full_profile() == P("1,1,1"));
    CHECK(MP("0o0;1").full_profile() == P("1"));
    CHECK(MP("3|1;1,1").letters() == 6);
    CHECK(MP("0o0;-").letters() == 1);
}

TEST_CASE("intersection matrix") {
    auto rows = intersection_matrix(W("2 1"));
    CHECK(rows[0] == 0b10);
    CHECK(rows[1] == 0b01);
    rows = intersection_matrix(W("1 2"));
    CHECK(rows[0] == 0);
    CHECK(rows[1] == 0);
    rows = intersection_matrix(W("4 3 2 1"));
    for (int i = 0; i < 4; ++i)
        CHECK(rows[static_cast<size_t>(i)] == (0b1111ull ^ (1ull << i)));
}

TEST_CASE("arf invariant on the binary forms") {
    QuadraticForm q;
    q.n = 2;
    q.omega = {0b10, 0b01};
    q.qdiag = 0b00; // q = xy
    CHECK(arf(q) == 0);
    q.qdiag = 0b11; // q = x^2 + xy + y^2
    CHECK(arf(q) == 1);
    QuadraticForm bad;
    bad.n = 1;
    bad.omega = {0};
    bad.qdiag = 1;
    CHECK_THROWS_AS(arf(bad), std::domain_error);
}

TEST_CASE("spin parity") {
    CHECK(spin_parity(W("8 5 4 3 2 7 6 1")) == SpinParity::Even);
    CHECK(spin_parity(W("8 3 2 5 4 7 6 1")) == SpinParity::Odd);
    CHECK(spin_parity(W("4 3 2 1")) == SpinParity::Odd);
    CHECK(spin_parity(symmetric(5)) == SpinParity::Undefined); // profile (2,2)
    CHECK(spin_parity(W("1 2")) == SpinParity::Undefined);     // zero-angle ends
}

TEST_CASE("concatenation table") {
    MarkedProfile t11 = concat_marked_profile(MP("1|0;-"), MP("1|0;-"));
    CHECK(t11.str() == "3|1;-");
    CHECK(concat_marked_profile(MP("1o3;-"), MP("1o3;-")).str() == "1o3;5");
    CHECK(concat_marked_profile(MP("1o3;-"), MP("3o1;-")).str() == "1o1;7");
    CHECK(concat_marked_profile(MP("3o1;-"), MP("1o3;-")).str() == "3o3;3");
    CHECK(concat_marked_profile(MP("3o1;-"), MP("3o1;-")).str() == "3o1;5");
}

TEST_CASE("hyperelliptic membership") {
    CHECK(is_hyperelliptic_class(W("4 3 2 1")));
    CHECK(is_hyperelliptic_class(W("4 2 3 1"))); // marked torus family
    CHECK_FALSE(is_hyperelliptic_class(W("8 3 2 5 4 7 6 1")));
}
