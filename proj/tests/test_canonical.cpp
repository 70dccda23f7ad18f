#include <catch2/catch_amalgamated.hpp>

#include "bridgepass/canonical.hpp"
#include "bridgepass/fixtures.hpp"

using namespace bridgepass;

TEST_CASE("relabeled diagrams share a key") {
    Diagram a = parse_extended_gauss("O1- U2- O3- U1- O2- U3-");
    Diagram b = parse_extended_gauss("O7- U5- O2- U7- O5- U2-");
    CHECK(canonical_form(a) == canonical_form(b));
}

TEST_CASE("key is constant across every basepoint rotation") {
    Diagram d = fixtures::figure_eight();
    CanonicalForm base = canonical_form(d);
    const auto& walk = d.walk();
    for (int shift = 0; shift < d.walk_length(); ++shift) {
        std::vector<Passage> rotated;
        for (int p = 0; p < d.walk_length(); ++p) rotated.push_back(walk[d.mod(p + shift)]);
        Diagram r = Diagram::from_walk(rotated, [&](int id) { return d.sign(id); });
        CHECK(canonical_form(r) == base);
    }
}

TEST_CASE("mirror is separated unless quotiented") {
    Diagram d = fixtures::trefoil();
    Diagram m = d.mirrored();
    CHECK(canonical_form(d) != canonical_form(m));
    CHECK(canonical_form(d, SymmetryGroup::rotations_reversal) !=
          canonical_form(m, SymmetryGroup::rotations_reversal));
    CHECK(canonical_form(d, SymmetryGroup::rotations_reversal_mirror) ==
          canonical_form(m, SymmetryGroup::rotations_reversal_mirror));
}

TEST_CASE("reversal quotient") {
    Diagram d = fixtures::trefoil();
    CHECK(canonical_form(d.reversed(), SymmetryGroup::rotations_reversal) ==
          canonical_form(d, SymmetryGroup::rotations_reversal));
}

TEST_CASE("distinct knots get distinct keys") {
    CHECK(canonical_form(fixtures::trefoil()) != canonical_form(fixtures::figure_eight()));
    CHECK(canonical_form(fixtures::poke()) != canonical_form(fixtures::double_spiral()));
}
