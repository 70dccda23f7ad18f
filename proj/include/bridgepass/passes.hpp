#pragma once

#include <vector>

#include "bridgepass/diagram.hpp"

namespace bridgepass {

/// Contiguous cyclic range of walk positions.
struct PassRange {
    int start = 0;
    int length = 0;
};

/// The over/underpass sequence of a diagram: the unique alternation of
/// maximal all-over and all-under arcs, located from a chosen start position.
/// k is the number of overpasses, i.e. the diagram's bridge count.
struct PassDecomposition {
    int k = 0;
    std::vector<int> boundaries;          // s1, f1, s2, f2, ..., sk, fk
    std::vector<PassRange> overpasses;    // o_i = [s_i, f_i)
    std::vector<PassRange> underpasses;   // u_i = [f_i, s_{i+1})
    std::vector<int> over_lengths;        // m_i
    std::vector<int> under_lengths;       // n_i
    std::vector<int> over_pass_at;        // walk position -> overpass index or -1
    std::vector<int> under_pass_at;       // walk position -> underpass index or -1
};

inline PassDecomposition decompose(const Diagram& d, int start = 0) {
    PassDecomposition out;
    const int n = d.walk_length();
    if (n == 0) return out;
    start = d.mod(start);

    // First overcrossing at or after the start; its maximal over run begins
    // just after the preceding undercrossing.
    int first_over = start;
    while (d.passage(first_over).level != Level::over) first_over = d.mod(first_over + 1);
    int s1 = first_over;
    while (d.passage(s1 - 1).level == Level::over) s1 = d.mod(s1 - 1);

    out.over_pass_at.assign(n, -1);
    out.under_pass_at.assign(n, -1);
    int pos = s1;
    int consumed = 0;
    while (consumed < n) {
        int s_i = pos;
        int m = 0;
        while (d.passage(pos).level == Level::over) {
            out.over_pass_at[pos] = out.k;
            pos = d.mod(pos + 1);
            ++m;
        }
        int f_i = pos;
        int u = 0;
        while (d.passage(pos).level == Level::under) {
            out.under_pass_at[pos] = out.k;
            pos = d.mod(pos + 1);
            ++u;
        }
        out.boundaries.push_back(s_i);
        out.boundaries.push_back(f_i);
        out.overpasses.push_back({s_i, m});
        out.underpasses.push_back({f_i, u});
        out.over_lengths.push_back(m);
        out.under_lengths.push_back(u);
        ++out.k;
        consumed += m + u;
    }
    return out;
}

inline int bridge_number(const Diagram& d) { return decompose(d).k; }

/// True iff b(D) <= 1, which forces the diagram to represent the unknot.
inline bool trivial_by_bridge(const Diagram& d) { return bridge_number(d) <= 1; }

/// Levels strictly alternate along the walk. Vacuously true for the circle.
inline bool is_alternating(const Diagram& d) {
    const int n = d.walk_length();
    for (int p = 0; p < n; ++p)
        if (d.passage(p).level == d.passage(p + 1).level) return false;
    return true;
}

/// M[i][j] = number of crossings between overpass o_i and underpass u_j.
struct IncidenceMatrix {
    int k = 0;
    std::vector<int> entries; // row-major k*k

    int at(int i, int j) const { return entries[i * k + j]; }
    int& at(int i, int j) { return entries[i * k + j]; }

    int row_sum(int i) const {
        int s = 0;
        for (int j = 0; j < k; ++j) s += at(i, j);
        return s;
    }
    int col_sum(int j) const {
        int s = 0;
        for (int i = 0; i < k; ++i) s += at(i, j);
        return s;
    }
};

inline IncidenceMatrix incidence(const Diagram& d, const PassDecomposition& dec) {
    if (d.crossing_count() == 0) throw EmptyDiagram("incidence needs at least one crossing");
    IncidenceMatrix m;
    m.k = dec.k;
    m.entries.assign(static_cast<std::size_t>(dec.k) * dec.k, 0);
    for (int x = 0; x < d.crossing_count(); ++x) {
        int i = dec.over_pass_at[d.over_pos(x)];
        int j = dec.under_pass_at[d.under_pos(x)];
        ++m.at(i, j);
    }
    return m;
}

inline IncidenceMatrix incidence(const Diagram& d) { return incidence(d, decompose(d)); }

/// Underpasses adjacent to overpass o_i are u_{i-1} and u_i.
inline bool passes_adjacent(int i, int j, int k) {
    return j == i || j == (i - 1 + k) % k;
}

struct RuleViolation {
    enum class Kind { multiple_incidence, adjacent_incidence, count_mismatch };
    int i = -1;
    int j = -1; // -1 for count_mismatch rows
    Kind kind = Kind::multiple_incidence;
};

struct RuleReport {
    bool rule1_ok = true; // every M[i][j] <= 1
    bool rule2_ok = true; // no adjacent incidences
    bool rule3_ok = true; // every row and column sums to exactly k-2
    /// Derived: some overpass meets every underpass. Implied impossible
    /// whenever rule2 holds (its adjacent underpasses are excluded).
    bool overpass_meets_all = false;
    std::vector<RuleViolation> violations;

    bool all_ok() const { return rule1_ok && rule2_ok && rule3_ok; }
};

inline RuleReport check_rules(const Diagram& d) {
    if (d.crossing_count() == 0) throw EmptyDiagram("check_rules needs at least one crossing");
    PassDecomposition dec = decompose(d);
    IncidenceMatrix m = incidence(d, dec);
    RuleReport rep;
    const int k = dec.k;
    for (int i = 0; i < k; ++i) {
        int met = 0;
        for (int j = 0; j < k; ++j) {
            if (m.at(i, j) > 0) ++met;
            if (m.at(i, j) > 1) {
                rep.rule1_ok = false;
                rep.violations.push_back({i, j, RuleViolation::Kind::multiple_incidence});
            }
            if (m.at(i, j) > 0 && passes_adjacent(i, j, k)) {
                rep.rule2_ok = false;
                rep.violations.push_back({i, j, RuleViolation::Kind::adjacent_incidence});
            }
        }
        if (met == k) rep.overpass_meets_all = true;
    }
    for (int i = 0; i < k; ++i) {
        if (m.row_sum(i) != k - 2) {
            rep.rule3_ok = false;
            rep.violations.push_back({i, -1, RuleViolation::Kind::count_mismatch});
        }
        if (m.col_sum(i) != k - 2) {
            rep.rule3_ok = false;
            rep.violations.push_back({-1, i, RuleViolation::Kind::count_mismatch});
        }
    }
    return rep;
}

/// Diagram-level bound checks. b <= c always holds; the two-sided bounds
/// b(b-2) >= c and (b-1)^2 >= 1+c are implications of minimality, so they are
/// only evaluated when the caller asserts the diagram is crossing-minimal.
struct BoundsReport {
    int b = 0;
    int c = 0;
    bool b_le_c = true;
    bool assume_minimal = false;
    bool upper_ok = true;  // c <= b(b-2), exact integers
    bool lower_ok = true;  // b >= 1 + sqrt(1+c), checked as (b-1)^2 >= 1+c
    bool bridge_in_forbidden_range = false; // b in {1,2} with c >= 1
    bool trivial = false;                   // b <= 1
};

inline BoundsReport check_bounds(const Diagram& d, bool assume_minimal) {
    BoundsReport rep;
    rep.b = bridge_number(d);
    rep.c = d.crossing_count();
    rep.b_le_c = rep.b <= rep.c;
    rep.assume_minimal = assume_minimal;
    rep.trivial = rep.b <= 1;
    if (assume_minimal && rep.c >= 1) {
        long long b = rep.b, c = rep.c;
        rep.upper_ok = c <= b * (b - 2);
        rep.lower_ok = (b - 1) * (b - 1) >= 1 + c;
        rep.bridge_in_forbidden_range = rep.b == 1 || rep.b == 2;
    }
    return rep;
}

/// Adds an n-fold nested spiral kink at the boundary point s1, in front of
/// the first overpass. The new under passages extend the last underpass and
/// the new over passages extend the first overpass, so the pass count is
/// unchanged while the crossing count grows by exactly n. The knot type is
/// unchanged (the spiral unwinds by n curl removals).
inline Diagram inflate(const Diagram& d, int n) {
    if (d.crossing_count() == 0) throw EmptyDiagram("inflate needs at least one crossing");
    if (n <= 0) throw InvalidK("inflate needs a positive twist count");
    PassDecomposition dec = decompose(d);
    const int s1 = dec.boundaries[0];
    const int c = d.crossing_count();

    std::vector<Passage> walk;
    walk.reserve(d.walk_length() + 2 * n);
    for (int p = 0; p < d.walk_length(); ++p) {
        if (p == s1) {
            for (int t = 0; t < n; ++t) walk.push_back({c + t, Level::under});
            for (int t = n - 1; t >= 0; --t) walk.push_back({c + t, Level::over});
        }
        walk.push_back(d.passage(p));
    }
    std::vector<int> signs = d.signs();
    signs.resize(c + n, -1); // uniform handedness keeps the nested coil flat
    return Diagram::from_walk(walk, signs);
}

} // namespace bridgepass
