#pragma once

#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "bridgepass/diagram.hpp"

namespace bridgepass {

// Extended Gauss text: whitespace/comma separated tokens `O<label><sign>` or
// `U<label><sign>`, e.g. "O1- U2- O3- U1- O2- U3-". Labels are positive
// integers; each label occurs exactly twice, once O and once U, with the same
// sign character. The empty token list is the crossingless circle.

inline Diagram parse_extended_gauss(const std::string& text) {
    std::vector<std::string> tokens;
    {
        std::string cur;
        for (char ch : text) {
            if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
                if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
            } else {
                cur.push_back(ch);
            }
        }
        if (!cur.empty()) tokens.push_back(std::move(cur));
    }
    if (tokens.empty()) return Diagram::circle();

    std::vector<Passage> walk;
    std::map<int, int> sign_of;     // label -> sign
    std::map<int, int> level_seen;  // label -> bitmask of levels seen
    walk.reserve(tokens.size());
    for (const std::string& tok : tokens) {
        if (tok.size() < 3) throw SyntaxError("token too short: '" + tok + "'");
        Level level;
        if (tok[0] == 'O')
            level = Level::over;
        else if (tok[0] == 'U')
            level = Level::under;
        else
            throw SyntaxError("token must start with O or U: '" + tok + "'");
        char sign_ch = tok.back();
        int sign;
        if (sign_ch == '+')
            sign = 1;
        else if (sign_ch == '-')
            sign = -1;
        else
            throw SyntaxError("token must end with + or -: '" + tok + "'");
        int label = 0;
        for (std::size_t i = 1; i + 1 < tok.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(tok[i])))
                throw SyntaxError("label must be a positive integer: '" + tok + "'");
            label = label * 10 + (tok[i] - '0');
        }
        if (label <= 0) throw SyntaxError("label must be a positive integer: '" + tok + "'");

        auto [it, fresh] = sign_of.try_emplace(label, sign);
        if (!fresh && it->second != sign)
            throw InconsistentCode("label " + std::to_string(label) + " carries two signs");
        int bit = level == Level::over ? 1 : 2;
        if (level_seen[label] & bit)
            throw InconsistentCode("label " + std::to_string(label) +
                                   " repeats on the same level");
        level_seen[label] |= bit;
        walk.push_back({label, level});
    }
    for (auto [label, mask] : level_seen)
        if (mask != 3)
            throw InconsistentCode("label " + std::to_string(label) +
                                   " lacks one of its two passages");
    try {
        return Diagram::from_walk(walk, [&](int id) { return sign_of.at(id); });
    } catch (const NonPlanar& e) {
        // A signed code forces the rotation at every crossing, so
        // realizability reduces to the planarity of the forced embedding.
        throw NonRealizable(e.what());
    }
}

/// Serializes with labels renumbered by first appearance along the walk.
inline std::string emit_extended_gauss(const Diagram& d) {
    std::ostringstream out;
    for (int p = 0; p < d.walk_length(); ++p) {
        const Passage& pa = d.passage(p);
        if (p) out << ' ';
        out << (pa.level == Level::over ? 'O' : 'U') << pa.crossing + 1
            << (d.sign(pa.crossing) > 0 ? '+' : '-');
    }
    return out.str();
}

// PD text: terms `X[a,b,c,d]` with edges labeled 1..2c consecutively along
// the orientation, the four entries counterclockwise from the incoming under
// edge. Edge t enters passage t and edge t+1 leaves it (labels mod 2c).

namespace detail {

struct PdTerm {
    int e[4];
};

inline std::vector<PdTerm> parse_pd_terms(const std::string& text) {
    std::vector<PdTerm> terms;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto skip_sep = [&] {
        while (i < text.size() &&
               (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
            ++i;
    };
    skip_sep();
    while (i < text.size()) {
        if (text[i] != 'X') throw SyntaxError("expected 'X' in PD term");
        ++i;
        if (i >= text.size() || (text[i] != '[' && text[i] != '('))
            throw SyntaxError("expected '[' after X");
        char close = text[i] == '[' ? ']' : ')';
        ++i;
        PdTerm t{};
        for (int slot = 0; slot < 4; ++slot) {
            skip_ws();
            int v = 0;
            bool any = false;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                ++i;
                any = true;
            }
            if (!any) throw SyntaxError("expected edge label in PD term");
            t.e[slot] = v;
            skip_ws();
            if (slot < 3) {
                if (i >= text.size() || text[i] != ',')
                    throw SyntaxError("expected ',' in PD term");
                ++i;
            }
        }
        if (i >= text.size() || text[i] != close) throw SyntaxError("unterminated PD term");
        ++i;
        terms.push_back(t);
        skip_sep();
    }
    return terms;
}

} // namespace detail

inline Diagram parse_pd(const std::string& text) {
    std::vector<detail::PdTerm> terms = detail::parse_pd_terms(text);
    if (terms.empty()) return Diagram::circle();
    const int c = static_cast<int>(terms.size());
    const int n = 2 * c;

    std::vector<int> uses(n + 1, 0);
    for (const auto& t : terms)
        for (int v : t.e) {
            if (v < 1 || v > n)
                throw InconsistentCode("edge label out of range 1..2c");
            ++uses[v];
        }
    for (int v = 1; v <= n; ++v)
        if (uses[v] != 2) throw InconsistentCode("each edge label must appear exactly twice");

    struct Incident {
        int crossing;
        Level level;
    };
    // incoming edge label -> the passage it enters
    std::vector<Incident> enters(n + 1, {-1, Level::over});
    std::vector<int> sign(c, 0);
    auto next_label = [n](int v) { return v % n + 1; };
    for (int x = 0; x < c; ++x) {
        const auto& t = terms[x];
        int a = t.e[0], b = t.e[1], cc = t.e[2], dd = t.e[3];
        if (next_label(a) != cc)
            throw InconsistentCode("under strand must leave on the next edge label");
        bool d_in = next_label(dd) == b;  // over enters at slot 3
        bool b_in = next_label(b) == dd;  // over enters at slot 1
        if (!d_in && !b_in)
            throw InconsistentCode("over strand edge labels are not consecutive");
        if (d_in && b_in) {
            // Only possible for a one-crossing diagram, where the over
            // passage is the one the under's outgoing edge enters.
            int oi = next_label(a);
            d_in = dd == oi;
        }
        int over_in = d_in ? dd : b;
        sign[x] = d_in ? 1 : -1;
        if (enters[a].crossing >= 0 || enters[over_in].crossing >= 0)
            throw InconsistentCode("two passages claim the same incoming edge");
        enters[a] = {x, Level::under};
        enters[over_in] = {x, Level::over};
    }
    std::vector<Passage> walk;
    walk.reserve(n);
    for (int e = 1; e <= n; ++e) {
        if (enters[e].crossing < 0)
            throw InconsistentCode("edge label " + std::to_string(e) + " enters no crossing");
        walk.push_back({enters[e].crossing, enters[e].level});
    }
    return Diagram::from_walk(walk, [&](int id) { return sign[id]; });
}

inline std::string emit_pd(const Diagram& d) {
    std::ostringstream out;
    const int n = d.walk_length();
    auto in_label = [&](int pos) { return d.mod(pos - 1) + 1; };
    auto out_label = [&](int pos) { return d.mod(pos) + 1; };
    for (int x = 0; x < d.crossing_count(); ++x) {
        int u = d.under_pos(x), o = d.over_pos(x);
        if (x) out << ' ';
        out << "X[" << in_label(u) << ',';
        if (d.sign(x) > 0)
            out << out_label(o) << ',' << out_label(u) << ',' << in_label(o);
        else
            out << in_label(o) << ',' << out_label(u) << ',' << out_label(o);
        out << ']';
    }
    (void)n;
    return out.str();
}

} // namespace bridgepass
