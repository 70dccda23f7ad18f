#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <utility>
#include <vector>

#include "bridgepass/errors.hpp"

namespace bridgepass {

enum class Level : std::uint8_t { over, under };

inline Level flipped(Level l) { return l == Level::over ? Level::under : Level::over; }

/// One visit of the knot to a crossing, on the over or the under strand.
struct Passage {
    int crossing = -1;
    Level level = Level::over;

    bool operator==(const Passage&) const = default;
};

/// An oriented knot diagram as a combinatorial planar map.
///
/// The diagram is stored as the cyclic walk of passages (length 2c) together
/// with one sign per crossing. The sign follows the convention that the
/// crossing is +1 when the over strand crosses the under strand from left to
/// right, looking along the under strand. Given the two strand directions at
/// a crossing this sign determines the counterclockwise rotation of the four
/// incident edge ends, so the planar embedding is derivable:
///
///   sign +1:  over_in, under_in, over_out, under_out
///   sign -1:  over_in, under_out, over_out, under_in
///
/// Planarity (face count == c + 2) is a constructor invariant; a walk whose
/// derived rotation system has any other genus is rejected.
class Diagram {
public:
    /// The crossingless circle.
    static Diagram circle() { return Diagram{}; }

    /// Builds a validated diagram. Crossing ids in `walk` may be arbitrary
    /// distinct non-negative ints; they are compacted to 0..c-1 in order of
    /// first appearance. `sign_of` maps original crossing id -> sign.
    template <typename SignFn>
        requires std::invocable<SignFn&, int>
    static Diagram from_walk(const std::vector<Passage>& walk, SignFn&& sign_of) {
        Diagram d;
        std::vector<int> order; // original ids in first-appearance order
        std::vector<int> remap;
        for (const Passage& p : walk) {
            if (p.crossing < 0) throw InconsistentCode("negative crossing id");
            if (p.crossing >= static_cast<int>(remap.size())) remap.resize(p.crossing + 1, -1);
            if (remap[p.crossing] < 0) {
                remap[p.crossing] = static_cast<int>(order.size());
                order.push_back(p.crossing);
            }
        }
        d.walk_.reserve(walk.size());
        for (const Passage& p : walk) d.walk_.push_back({remap[p.crossing], p.level});
        d.signs_.reserve(order.size());
        for (int id : order) {
            int s = sign_of(id);
            if (s != 1 && s != -1) throw InconsistentCode("crossing sign must be +1 or -1");
            d.signs_.push_back(s);
        }
        d.index_and_validate();
        return d;
    }

    static Diagram from_walk(const std::vector<Passage>& walk, const std::vector<int>& signs_by_id) {
        return from_walk(walk, [&](int id) {
            if (id >= static_cast<int>(signs_by_id.size())) throw InconsistentCode("missing sign");
            return signs_by_id[id];
        });
    }

    int crossing_count() const { return static_cast<int>(signs_.size()); }
    int walk_length() const { return static_cast<int>(walk_.size()); }
    bool is_circle() const { return walk_.empty(); }

    const std::vector<Passage>& walk() const { return walk_; }
    const Passage& passage(int pos) const { return walk_[mod(pos)]; }

    int sign(int crossing) const { return signs_[crossing]; }
    const std::vector<int>& signs() const { return signs_; }

    int over_pos(int crossing) const { return over_pos_[crossing]; }
    int under_pos(int crossing) const { return under_pos_[crossing]; }

    /// Position of the other passage of the crossing visited at `pos`.
    int mate(int pos) const {
        const Passage& p = walk_[mod(pos)];
        return p.level == Level::over ? under_pos_[p.crossing] : over_pos_[p.crossing];
    }

    int mod(int pos) const {
        int n = walk_length();
        return ((pos % n) + n) % n;
    }

    bool operator==(const Diagram& rhs) const {
        return walk_ == rhs.walk_ && signs_ == rhs.signs_;
    }

    // --- planar map view -----------------------------------------------
    //
    // Edge t runs from passage t to passage t+1 (mod 2c). Each edge has two
    // darts: dart 2t at its tail (incident to the crossing of passage t) and
    // dart 2t+1 at its head (incident to the crossing of passage t+1).

    int dart_count() const { return 2 * walk_length(); }

    static int alpha(int dart) { return dart ^ 1; }

    int dart_in(int pos) const { return 2 * mod(pos - 1) + 1; }  // head of edge pos-1
    int dart_out(int pos) const { return 2 * mod(pos); }         // tail of edge pos

    /// Counterclockwise-next dart around the crossing the dart is incident to.
    int sigma(int dart) const { return sigma_[dart]; }

    /// Face orbits of the derived rotation system. The crossingless circle
    /// reports its two faces as empty cycles.
    std::vector<std::vector<int>> faces() const {
        if (is_circle()) return {{}, {}};
        std::vector<std::vector<int>> out;
        std::vector<char> seen(dart_count(), 0);
        for (int d0 = 0; d0 < dart_count(); ++d0) {
            if (seen[d0]) continue;
            std::vector<int> cycle;
            int d = d0;
            do {
                seen[d] = 1;
                cycle.push_back(d);
                d = sigma_[alpha(d)];
            } while (d != d0);
            out.push_back(std::move(cycle));
        }
        return out;
    }

    int face_count() const { return static_cast<int>(faces().size()); }

    // --- symmetries -----------------------------------------------------

    /// Reflection of the plane: same walk, all signs flipped.
    Diagram mirrored() const {
        Diagram d = *this;
        for (int& s : d.signs_) s = -s;
        d.index_and_validate();
        return d;
    }

    /// Orientation reversal of the knot: walk reversed, levels and signs kept.
    Diagram reversed() const {
        Diagram d = *this;
        std::reverse(d.walk_.begin(), d.walk_.end());
        d.index_and_validate();
        return d;
    }

    /// Over/under duality: reversed traversal with all levels swapped. The
    /// embedding is unchanged, so all signs flip. Involutive.
    Diagram dual() const {
        Diagram d = *this;
        std::reverse(d.walk_.begin(), d.walk_.end());
        for (Passage& p : d.walk_) p.level = flipped(p.level);
        for (int& s : d.signs_) s = -s;
        d.index_and_validate();
        return d;
    }

private:
    Diagram() = default;

    void index_and_validate() {
        const int c = crossing_count();
        if (walk_length() != 2 * c)
            throw InconsistentCode("walk length must be twice the crossing count");
        over_pos_.assign(c, -1);
        under_pos_.assign(c, -1);
        for (int p = 0; p < walk_length(); ++p) {
            const Passage& pa = walk_[p];
            int& slot = pa.level == Level::over ? over_pos_[pa.crossing] : under_pos_[pa.crossing];
            if (slot >= 0)
                throw InconsistentCode("crossing visited twice on the same level");
            slot = p;
        }
        for (int x = 0; x < c; ++x)
            if (over_pos_[x] < 0 || under_pos_[x] < 0)
                throw InconsistentCode("crossing must have one over and one under passage");
        build_sigma();
        if (c > 0 && face_count() != c + 2)
            throw NonPlanar("rotation system is not planar (face count != c + 2)");
    }

    void build_sigma() {
        sigma_.assign(dart_count(), -1);
        for (int x = 0; x < crossing_count(); ++x) {
            int o_in = dart_in(over_pos_[x]);
            int o_out = dart_out(over_pos_[x]);
            int u_in = dart_in(under_pos_[x]);
            int u_out = dart_out(under_pos_[x]);
            if (signs_[x] > 0) {
                sigma_[o_in] = u_in;
                sigma_[u_in] = o_out;
                sigma_[o_out] = u_out;
                sigma_[u_out] = o_in;
            } else {
                sigma_[o_in] = u_out;
                sigma_[u_out] = o_out;
                sigma_[o_out] = u_in;
                sigma_[u_in] = o_in;
            }
        }
    }

    std::vector<Passage> walk_;
    std::vector<int> signs_;
    std::vector<int> over_pos_, under_pos_;
    std::vector<int> sigma_;
};

/// Standard writhe, summed from the stored signs.
inline int writhe(const Diagram& d) {
    int w = 0;
    for (int s : d.signs()) w += s;
    return w;
}

/// Recomputes the sign of a crossing from the rotation system alone, as a
/// consistency cross-check against the stored value. The counterclockwise
/// neighbour of the incoming over dart is the incoming under dart exactly at
/// positive crossings.
inline int sign_from_rotation(const Diagram& d, int crossing) {
    int o_in = d.dart_in(d.over_pos(crossing));
    int u_in = d.dart_in(d.under_pos(crossing));
    return d.sigma(o_in) == u_in ? 1 : -1;
}

} // namespace bridgepass
