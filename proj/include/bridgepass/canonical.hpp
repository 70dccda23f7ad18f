#pragma once

#include <string>
#include <vector>

#include "bridgepass/diagram.hpp"

namespace bridgepass {

/// Which diagram symmetries are quotiented out by canonical_form.
/// Basepoint rotation (and crossing relabeling) is always included.
enum class SymmetryGroup {
    rotations,                   // basepoint rotation only
    rotations_reversal,          // + orientation reversal
    rotations_reversal_mirror,   // + plane reflection
};

struct CanonicalForm {
    std::string key;

    bool operator==(const CanonicalForm&) const = default;
    bool operator<(const CanonicalForm& rhs) const { return key < rhs.key; }
};

namespace detail {

/// Serialization from one basepoint with labels assigned in visit order.
/// `dir` is +1 or -1; `flip` negates signs (mirror).
inline std::string rotation_key(const Diagram& d, int start, int dir, bool flip) {
    const int n = d.walk_length();
    std::vector<int> label(d.crossing_count(), -1);
    int next = 0;
    std::string out;
    out.reserve(4 * n);
    for (int t = 0; t < n; ++t) {
        const Passage& p = d.passage(start + dir * t);
        if (label[p.crossing] < 0) label[p.crossing] = next++;
        int s = d.sign(p.crossing) * (flip ? -1 : 1);
        out.push_back(p.level == Level::over ? 'O' : 'U');
        out.append(std::to_string(label[p.crossing]));
        out.push_back(s > 0 ? '+' : '-');
    }
    return out;
}

} // namespace detail

/// Minimal serialization over the selected symmetry group. Two diagrams have
/// equal keys iff they differ by relabeling plus the chosen symmetries.
inline CanonicalForm canonical_form(const Diagram& d,
                                    SymmetryGroup group = SymmetryGroup::rotations) {
    if (d.is_circle()) return {"circle"};
    std::string best;
    auto consider = [&](const std::string& k) {
        if (best.empty() || k < best) best = k;
    };
    const int n = d.walk_length();
    const bool reversal = group != SymmetryGroup::rotations;
    const bool mirror = group == SymmetryGroup::rotations_reversal_mirror;
    for (int start = 0; start < n; ++start) {
        consider(detail::rotation_key(d, start, 1, false));
        if (reversal) consider(detail::rotation_key(d, start, -1, false));
        if (mirror) {
            consider(detail::rotation_key(d, start, 1, true));
            if (reversal) consider(detail::rotation_key(d, start, -1, true));
        }
    }
    return {best};
}

inline bool canonically_equal(const Diagram& a, const Diagram& b,
                              SymmetryGroup group = SymmetryGroup::rotations) {
    return canonical_form(a, group) == canonical_form(b, group);
}

} // namespace bridgepass
