#include <catch2/catch_amalgamated.hpp>

#include "bridgepass/canonical.hpp"
#include "bridgepass/codec.hpp"

using namespace bridgepass;

namespace {
const char* kTrefoil = "O1- U2- O3- U1- O2- U3-";
const char* kTrefoilPd = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
}

TEST_CASE("empty gauss text parses to the circle") {
    CHECK(parse_extended_gauss("").is_circle());
    CHECK(parse_extended_gauss("   ").is_circle());
    CHECK(emit_extended_gauss(Diagram::circle()).empty());
    CHECK(emit_pd(Diagram::circle()).empty());
}

TEST_CASE("gauss syntax errors") {
    CHECK_THROWS_AS(parse_extended_gauss("O1"), SyntaxError);
    CHECK_THROWS_AS(parse_extended_gauss("Q1+ U1+"), SyntaxError);
    CHECK_THROWS_AS(parse_extended_gauss("O1? U1?"), SyntaxError);
    CHECK_THROWS_AS(parse_extended_gauss("O0+ U0+"), SyntaxError);
}

TEST_CASE("gauss consistency errors") {
    CHECK_THROWS_AS(parse_extended_gauss("O1+ U1-"), InconsistentCode);
    CHECK_THROWS_AS(parse_extended_gauss("O1+ O1+"), InconsistentCode);
    CHECK_THROWS_AS(parse_extended_gauss("O1+ U1+ O2+"), InconsistentCode);
}

TEST_CASE("non-realizable signed code is rejected") {
    // The trefoil word admits only the two uniform sign assignments.
    CHECK_THROWS_AS(parse_extended_gauss("O1+ U2- O3- U1+ O2- U3-"), NonRealizable);
}

TEST_CASE("pd trefoil round trip against gauss trefoil") {
    Diagram a = parse_extended_gauss(kTrefoil);
    Diagram b = parse_pd(kTrefoilPd);
    CHECK(b.crossing_count() == 3);
    SymmetryGroup g = SymmetryGroup::rotations_reversal_mirror;
    CHECK(canonical_form(a, g) == canonical_form(b, g));
}

TEST_CASE("pd degenerate term rejected") {
    CHECK_THROWS_AS(parse_pd("X[1,1,1,1]"), InconsistentCode);
    CHECK_THROWS_AS(parse_pd("X[1,4,2,5]"), InconsistentCode);
    CHECK_THROWS_AS(parse_pd("X 1,4,2,5"), SyntaxError);
}

TEST_CASE("codec round trips are canonically stable") {
    for (const char* code : {kTrefoil, "O1+ U1+", "O1+ O2- U2- U1+",
                             "O1+ U2+ O3- U4- O2+ U1+ O4- U3-"}) {
        Diagram d = parse_extended_gauss(code);
        CHECK(canonically_equal(parse_extended_gauss(emit_extended_gauss(d)), d));
        CHECK(canonically_equal(parse_pd(emit_pd(d)), d));
    }
}

TEST_CASE("one-crossing kinks survive both codecs") {
    for (const char* code : {"O1+ U1+", "O1- U1-", "U1+ O1+", "U1- O1-"}) {
        Diagram d = parse_extended_gauss(code);
        Diagram via_pd = parse_pd(emit_pd(d));
        CHECK(canonically_equal(via_pd, d));
        CHECK(writhe(via_pd) == writhe(d));
    }
}
