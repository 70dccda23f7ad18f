#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "bridgepass/diagram.hpp"
#include "bridgepass/laurent.hpp"

namespace bridgepass {

inline constexpr int kDefaultBracketCap = 18;

namespace detail {

struct LoopCounter {
    std::vector<int> parent;

    explicit LoopCounter(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace detail

/// Kauffman bracket by full state enumeration: each crossing is smoothed two
/// ways; a state with a A-smoothings, b B-smoothings and L loops contributes
/// A^(a-b) * (-A^2 - A^-2)^(L-1).
///
/// The A-smoothing joins the regions swept when the over strand is rotated
/// counterclockwise onto the under strand. In terms of the four edge ends:
///   sign +1: A joins over_in|under_out and over_out|under_in
///   sign -1: A joins over_in|under_in  and over_out|under_out
inline LaurentPolynomial kauffman_bracket(const Diagram& d, int cap = kDefaultBracketCap) {
    const int c = d.crossing_count();
    if (c > cap)
        throw TooLarge("bracket state sum capped at " + std::to_string(cap) + " crossings");
    if (c == 0) return LaurentPolynomial::one();

    const int n = d.walk_length();
    LaurentPolynomial delta;
    delta.add_term(2, -1);
    delta.add_term(-2, -1);
    std::vector<LaurentPolynomial> delta_pow(n + 1);
    delta_pow[0] = LaurentPolynomial::one();
    for (int i = 1; i <= n; ++i) delta_pow[i] = delta_pow[i - 1] * delta;

    // Edge p runs from passage p to passage p+1; smoothing a crossing joins
    // its four incident edges in one of two pairings.
    auto edge_in = [&](int pos) { return d.mod(pos - 1); };
    auto edge_out = [&](int pos) { return d.mod(pos); };

    LaurentPolynomial total;
    for (std::uint32_t state = 0; state < (1u << c); ++state) {
        detail::LoopCounter uf(n);
        int a_count = 0;
        for (int x = 0; x < c; ++x) {
            int o_in = edge_in(d.over_pos(x)), o_out = edge_out(d.over_pos(x));
            int u_in = edge_in(d.under_pos(x)), u_out = edge_out(d.under_pos(x));
            bool a_smoothing = !(state & (1u << x));
            if (a_smoothing) ++a_count;
            bool cross_join = a_smoothing == (d.sign(x) > 0);
            if (cross_join) {
                uf.unite(o_in, u_out);
                uf.unite(o_out, u_in);
            } else {
                uf.unite(o_in, u_in);
                uf.unite(o_out, u_out);
            }
        }
        int loops = 0;
        for (int e = 0; e < n; ++e)
            if (uf.find(e) == e) ++loops;
        int exponent = a_count - (c - a_count);
        LaurentPolynomial term = LaurentPolynomial::monomial(1, exponent) * delta_pow[loops - 1];
        total += term;
    }
    return total;
}

/// Writhe-normalized bracket X(D) = (-A^3)^(-w) * <D>, invariant under all
/// three Reidemeister moves and hence under any isotopy-realizing rewrite.
inline LaurentPolynomial normalized_jones(const Diagram& d, int cap = kDefaultBracketCap) {
    int w = writhe(d);
    LaurentPolynomial norm = LaurentPolynomial::monomial(w % 2 == 0 ? 1 : -1, -3 * w);
    return norm * kauffman_bracket(d, cap);
}

} // namespace bridgepass
