#include <catch2/catch_amalgamated.hpp>

#include "bridgepass/codec.hpp"
#include "bridgepass/diagram.hpp"

using namespace bridgepass;

namespace {
const char* kTrefoil = "O1- U2- O3- U1- O2- U3-";
}

TEST_CASE("crossingless circle") {
    Diagram d = Diagram::circle();
    CHECK(d.crossing_count() == 0);
    CHECK(d.walk_length() == 0);
    CHECK(d.faces().size() == 2);
}

TEST_CASE("trefoil walk is planar with five faces") {
    Diagram d = parse_extended_gauss(kTrefoil);
    CHECK(d.crossing_count() == 3);
    CHECK(d.face_count() == 5);
    for (int x = 0; x < 3; ++x) CHECK(d.sign(x) == -1);
}

TEST_CASE("one-crossing kink is planar for either handedness") {
    for (const char* code : {"O1+ U1+", "O1- U1-", "U1+ O1+", "U1- O1-"}) {
        Diagram d = parse_extended_gauss(code);
        CHECK(d.crossing_count() == 1);
        CHECK(d.face_count() == 3);
    }
}

TEST_CASE("every crossing has one over and one under passage") {
    Diagram d = parse_extended_gauss(kTrefoil);
    for (int x = 0; x < d.crossing_count(); ++x) {
        CHECK(d.passage(d.over_pos(x)).level == Level::over);
        CHECK(d.passage(d.under_pos(x)).level == Level::under);
    }
}

TEST_CASE("stored signs agree with the rotation system") {
    for (const char* code : {kTrefoil, "O1+ U1+", "O1+ O2- U2- U1+"}) {
        Diagram d = parse_extended_gauss(code);
        for (int x = 0; x < d.crossing_count(); ++x)
            CHECK(sign_from_rotation(d, x) == d.sign(x));
    }
}

TEST_CASE("mirror flips signs and writhe") {
    Diagram d = parse_extended_gauss(kTrefoil);
    Diagram m = d.mirrored();
    CHECK(writhe(d) == -3);
    CHECK(writhe(m) == 3);
    CHECK(m.face_count() == 5);
}

TEST_CASE("dual is an involution") {
    Diagram d = parse_extended_gauss(kTrefoil);
    CHECK(d.dual().dual() == d);
    CHECK(d.dual().face_count() == d.face_count());
}

TEST_CASE("reversal preserves signs and planarity") {
    Diagram d = parse_extended_gauss(kTrefoil);
    Diagram r = d.reversed();
    CHECK(writhe(r) == writhe(d));
    CHECK(r.face_count() == 5);
}
