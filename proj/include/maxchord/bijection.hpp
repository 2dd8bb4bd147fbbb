#pragma once

#include "maxchord/diagram.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <tuple>
#include <vector>

namespace maxchord {

// A rooted quotient map: a (2g+1)-gon whose sides 0..2g-1 are glued in
// pairs, each pair with or without a twist, the remaining side being the
// boundary. Keeping the side labels is what roots the map, so there is no
// quotienting by relabelling.
class SignedMatching {
public:
    SignedMatching(int g, std::vector<int> mate, std::vector<std::uint8_t> twist);

    static SignedMatching from_pairs(int g, const std::vector<std::tuple<int, int, bool>>& pairs);

    int edges() const { return g_; }       // g edges after gluing
    int sides() const { return 2 * g_; }   // glued polygon sides
    int mate(int s) const { return mate_[s]; }
    bool twist(int s) const { return twist_[s] != 0; }

    // Pairs (u, v, twist) with u < v, sorted by u.
    std::vector<std::tuple<int, int, bool>> pairs() const;

    bool operator==(const SignedMatching&) const = default;
    bool operator<(const SignedMatching& other) const {
        return std::tie(mate_, twist_) < std::tie(other.mate_, other.twist_);
    }

private:
    int g_;
    std::vector<int> mate_;
    std::vector<std::uint8_t> twist_;
};

struct GluingReport {
    int vertex_count;
    int face_count;  // always 1: a polygon has one face and boundary
                     // contraction preserves it
    bool orientable; // no twisted pair anywhere
    int euler_genus; // cross-cap count; twice the genus when orientable
};

// Glues the (2g+1)-gon. Directed side s runs from corner s to corner s+1
// (mod 2g+1). An untwisted pair is identified head-to-tail, a twisted pair
// head-to-head, and the boundary side is contracted to a point. Vertices of
// the result are the corner classes.
GluingReport glue(const SignedMatching& sm);

// One vertex (the face count is structurally one).
bool is_unicellular_map(const SignedMatching& sm);

// Folds a type II maximal diagram with 2g chords (fixed by the canonical
// axis i -> 4g-1-i) to its quotient map. Chords come in g mirror pairs;
// the pair of a chord {a,b} is glued with a twist exactly when the chord
// crosses the axis, i.e. when exactly one endpoint lies below 2g.
SignedMatching to_quotient(const ChordDiagram& d);

// Inverse of to_quotient: doubles each glued pair into a mirror pair of
// chords. Requires a one-vertex map; the unfolded diagram is then type II
// maximal.
ChordDiagram from_quotient(const SignedMatching& sm);

struct StripResult {
    ChordDiagram remainder;         // type II maximal, one genus lower
    std::pair<int, int> vertical;   // always {0, 2g}
    std::pair<int, int> horizontal; // {a, 4g-a}
};

// Removes the unique vertical and horizontal chords of a type I maximal
// diagram (fixed by i -> -i) and relabels so the surviving reflection is
// the canonical type II axis.
StripResult strip_type1(const ChordDiagram& d);

// Converse direction: wraps a type II maximal diagram of genus g-1 into a
// type I maximal diagram of genus g with horizontal chord {h, 4g-h},
// h in 1..2g-1. Inverse of strip_type1 for every h.
ChordDiagram insert_type1(const ChordDiagram& type2, int horizontal_point);

// All (2g-1)!! * 2^g signed matchings, deterministic order: matchings by
// smallest-first pairing, twist assignments in binary counting order.
void for_each_signed_matching(int g, const std::function<bool(const SignedMatching&)>& fn);

// Text format: "g; u-v:t ..." with pairs sorted by smaller side,
// e.g. "1; 0-1:1".
std::string to_text(const SignedMatching& sm);
SignedMatching parse_matching(const std::string& text);

} // namespace maxchord
