#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bridgepass/codec.hpp"

namespace bridgepass::fixtures {

/// Left-handed trefoil, all crossings negative.
inline constexpr const char* kTrefoil = "O1- U2- O3- U1- O2- U3-";

/// Figure-eight knot, alternating with four crossings.
inline constexpr const char* kFigureEight = "O1+ U2+ O3- U4- O2+ U1+ O4- U3-";

/// One-crossing curl (the "shape 8").
inline constexpr const char* kKink = "O1- U1-";

/// A strand poked under another: two opposite-sign crossings forming a
/// removable pocket. One overpass meets one underpass twice.
inline constexpr const char* kPoke = "O1+ O2- U2- U1+";

/// Two nested same-handed curls; same pass structure as the poke but with
/// equal signs, so the pocket is a coil rather than a pocket.
inline constexpr const char* kDoubleSpiral = "O1- O2- U2- U1-";

inline Diagram trefoil() { return parse_extended_gauss(kTrefoil); }
inline Diagram figure_eight() { return parse_extended_gauss(kFigureEight); }
inline Diagram kink() { return parse_extended_gauss(kKink); }
inline Diagram poke() { return parse_extended_gauss(kPoke); }
inline Diagram double_spiral() { return parse_extended_gauss(kDoubleSpiral); }

/// The basic named fixtures, used by property tests that quantify over
/// "every bundled diagram".
inline std::vector<std::pair<std::string, Diagram>> bundle() {
    return {
        {"trefoil", trefoil()},
        {"figure_eight", figure_eight()},
        {"kink", kink()},
        {"poke", poke()},
        {"double_spiral", double_spiral()},
    };
}

} // namespace bridgepass::fixtures
