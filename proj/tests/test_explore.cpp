#include <doctest.h>

#include <set>
#include <sstream>

#include "rauzy/count.hpp"
#include "rauzy/explore.hpp"

using namespace rauzy;

namespace {
ReducedPermutation W(const char* text) { return ReducedPermutation::parse(text); }
} // namespace

TEST_CASE("class sizes by search") {
    RauzyDiagram sym4 = build_class(symmetric(4));
    CHECK(sym4.size() == 7);
    ClassStats st = stats(sym4);
    CHECK(st.standard_count == 1);
    CHECK(st.left_degree == 3);
    CHECK(st.profile.str() == "3");
    CHECK(st.spin == SpinParity::Odd);

    RauzyDiagram rot4 = build_class(rotation(4));
    CHECK(rot4.size() == 6);
    CHECK(stats(rot4).standard_count == 1);

    // the even-spin witness has the smaller class, the odd-spin one the larger
    CHECK(build_class(W("8 5 4 3 2 7 6 1")).size() == 2327);
    CHECK(build_class(W("8 3 2 5 4 7 6 1")).size() == 5209);
    CHECK_THROWS_AS(build_class(W("1 2")), std::domain_error);
}

TEST_CASE("survey matches the full diagram") {
    ClassSummary s = survey_class(symmetric(6), false);
    CHECK(s.size == 31);
    CHECK(s.standard_count == 1);
    CHECK(s.degree_tally.at(5) == 31);
    ClassSummary e = survey_class(symmetric(5), true, 2);
    CHECK(e.size == build_class(symmetric(5), BuildOptions{true, 1}).size());
}

TEST_CASE("census tallies") {
    Census c4 = census(4);
    uint64_t irr = 0, std_count = 0;
    for (const auto& [key, cell] : c4) {
        irr += cell.irr;
        std_count += cell.std_count;
    }
    CHECK(irr == 13);
    CHECK(std_count == 2);

    Census c6 = census(6);
    irr = 0;
    for (const auto& [key, cell] : c6)
        irr += cell.irr;
    CHECK(irr == 461);

    auto classes = partition_into_classes(6);
    std::multiset<uint64_t> sizes;
    for (const auto& c : classes)
        sizes.insert(c.size);
    CHECK(sizes == std::multiset<uint64_t>{15, 20, 31, 66, 90, 105, 134});
}

TEST_CASE("rotation model graph") {
    CHECK(rotation_model(4).vertices.size() == 6);
    CHECK(rotation_model(2).vertices.size() == 1);
    for (int n = 2; n <= 6; ++n)
        CHECK(check_rotation_isomorphism(n));
}

TEST_CASE("deterministic DOT export") {
    RauzyDiagram sym4 = build_class(symmetric(4));
    std::ostringstream a, b;
    export_dot(sym4, a);
    export_dot(sym4, b);
    CHECK(a.str() == b.str());
    int nodes = 0, edges = 0;
    std::istringstream in(a.str());
    std::string line;
    while (std::getline(in, line)) {
        if (line.find("->") != std::string::npos)
            ++edges;
        else if (line.find('"') != std::string::npos)
            ++nodes;
    }
    CHECK(nodes == 7);
    CHECK(edges == 14);
}

TEST_CASE("hyperelliptic class cache") {
    CHECK(hyperelliptic_class(4, 0).size() == 7);
    CHECK(hyperelliptic_class(4, 1).size() == 46);
}
