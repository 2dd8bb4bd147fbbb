#include "maxchord/bijection.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace maxchord {

namespace {

struct DisjointSet {
    std::vector<int> parent;

    explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }

    void unite(int a, int b) { parent[find(a)] = find(b); }

    int classes() {
        int c = 0;
        for (int i = 0; i < static_cast<int>(parent.size()); ++i) c += find(i) == i;
        return c;
    }
};

bool enumerate_matchings(std::vector<int>& mate, int low,
                         const std::function<bool(const std::vector<int>&)>& fn) {
    const int m = static_cast<int>(mate.size());
    while (low < m && mate[low] != -1) ++low;
    if (low == m) return fn(mate);
    for (int j = low + 1; j < m; ++j) {
        if (mate[j] != -1) continue;
        mate[low] = j;
        mate[j] = low;
        const bool keep_going = enumerate_matchings(mate, low + 1, fn);
        mate[low] = -1;
        mate[j] = -1;
        if (!keep_going) return false;
    }
    return true;
}

} // namespace

SignedMatching::SignedMatching(int g, std::vector<int> mate, std::vector<std::uint8_t> twist)
    : g_(g), mate_(std::move(mate)), twist_(std::move(twist)) {
    if (g_ < 0) throw std::invalid_argument("signed matching needs g >= 0");
    const int m = 2 * g_;
    if (static_cast<int>(mate_.size()) != m || static_cast<int>(twist_.size()) != m)
        throw std::invalid_argument("signed matching needs exactly 2g sides");
    for (int i = 0; i < m; ++i) {
        if (mate_[i] < 0 || mate_[i] >= m)
            throw std::invalid_argument("mate of side " + std::to_string(i) + " is out of range");
        if (mate_[i] == i) throw std::invalid_argument("side " + std::to_string(i) + " glued to itself");
        if (twist_[i] > 1) throw std::invalid_argument("twist flag of side " + std::to_string(i) + " is not a bit");
    }
    for (int i = 0; i < m; ++i) {
        if (mate_[mate_[i]] != i)
            throw std::invalid_argument("side gluing is not an involution at side " + std::to_string(i));
        if (twist_[i] != twist_[mate_[i]])
            throw std::invalid_argument("twist flags disagree across the pair at side " + std::to_string(i));
    }
}

SignedMatching SignedMatching::from_pairs(int g, const std::vector<std::tuple<int, int, bool>>& pairs) {
    if (g < 0) throw std::invalid_argument("signed matching needs g >= 0");
    const int m = 2 * g;
    if (static_cast<int>(pairs.size()) != g)
        throw std::invalid_argument("expected exactly g glued pairs");
    std::vector<int> mate(m, -1);
    std::vector<std::uint8_t> twist(m, 0);
    for (const auto& [u, v, t] : pairs) {
        if (u < 0 || u >= m || v < 0 || v >= m)
            throw std::invalid_argument("side index out of range in pair " + std::to_string(u) + "-" +
                                        std::to_string(v));
        if (u == v) throw std::invalid_argument("side " + std::to_string(u) + " glued to itself");
        if (mate[u] != -1 || mate[v] != -1)
            throw std::invalid_argument("duplicate side in pair " + std::to_string(u) + "-" + std::to_string(v));
        mate[u] = v;
        mate[v] = u;
        twist[u] = twist[v] = t ? 1 : 0;
    }
    return SignedMatching(g, std::move(mate), std::move(twist));
}

std::vector<std::tuple<int, int, bool>> SignedMatching::pairs() const {
    std::vector<std::tuple<int, int, bool>> out;
    out.reserve(g_);
    for (int s = 0; s < sides(); ++s)
        if (s < mate_[s]) out.emplace_back(s, mate_[s], twist_[s] != 0);
    return out;
}

GluingReport glue(const SignedMatching& sm) {
    const int g = sm.edges();
    const int corners = 2 * g + 1;
    DisjointSet dsu(corners);
    bool orientable = true;
    for (const auto& [u, v, t] : sm.pairs()) {
        // side s has tail corner s and head corner s+1; no wrap below the
        // boundary side
        if (t) {
            dsu.unite(u, v);
            dsu.unite(u + 1, v + 1);
            orientable = false;
        } else {
            dsu.unite(u + 1, v);
            dsu.unite(u, v + 1);
        }
    }
    dsu.unite(corners - 1, 0); // contract the boundary side into a point
    const int vertices = dsu.classes();
    const int euler_genus = g + 1 - vertices; // from V - E + F = 2 - k with E = g, F = 1
    if (euler_genus < 0) throw std::logic_error("glue: negative Euler genus");
    if (orientable && euler_genus % 2 != 0)
        throw std::logic_error("glue: orientable gluing with odd Euler genus");
    return {vertices, 1, orientable, euler_genus};
}

bool is_unicellular_map(const SignedMatching& sm) {
    return glue(sm).vertex_count == 1;
}

SignedMatching to_quotient(const ChordDiagram& d) {
    if (d.points() == 0) return SignedMatching(0, {}, {});
    if (!is_maximal(d)) throw std::invalid_argument("to_quotient: diagram is not maximal");
    const int m = d.points(); // 4g; maximality forces an even chord count
    const int g = m / 4;
    const auto rho = canonical_type2_axis(m);
    if (!is_fixed_by(d, rho))
        throw std::invalid_argument("to_quotient: diagram is not fixed by the canonical type II axis");
    const auto classes = axis_chord_classes(d, rho);
    if (!classes.vertical.empty() || !classes.horizontal.empty())
        throw std::logic_error("to_quotient: type II maximal diagram has an axis chord");
    const int sides = 2 * g;
    std::vector<int> mate(sides, -1);
    std::vector<std::uint8_t> twist(sides, 0);
    for (const auto& [chord, mirror] : classes.mirror_orbits) {
        const auto [a, b] = chord;
        const int u = a < sides ? a : m - 1 - a;
        const int v = b < sides ? b : m - 1 - b;
        const bool t = (a < sides) != (b < sides); // the chord crosses the axis
        mate[u] = v;
        mate[v] = u;
        twist[u] = twist[v] = t ? 1 : 0;
        (void)mirror;
    }
    return SignedMatching(g, std::move(mate), std::move(twist));
}

ChordDiagram from_quotient(const SignedMatching& sm) {
    if (!is_unicellular_map(sm))
        throw std::invalid_argument("from_quotient: matching does not glue to a one-vertex map");
    const int g = sm.edges();
    if (g == 0) return ChordDiagram({});
    const int m = 4 * g;
    const auto rho = [m](int i) { return m - 1 - i; };
    std::vector<std::pair<int, int>> chords;
    chords.reserve(2 * g);
    for (const auto& [u, v, t] : sm.pairs()) {
        if (t) {
            chords.emplace_back(u, rho(v));
            chords.emplace_back(v, rho(u));
        } else {
            chords.emplace_back(u, v);
            chords.emplace_back(rho(u), rho(v));
        }
    }
    ChordDiagram d = ChordDiagram::from_pairs(chords);
    if (!is_maximal(d) || !is_fixed_by(d, canonical_type2_axis(m)))
        throw std::logic_error("from_quotient: unfolded diagram is not type II maximal");
    return d;
}

StripResult strip_type1(const ChordDiagram& d) {
    const int m = d.points();
    if (m == 0 || !is_maximal(d)) throw std::invalid_argument("strip_type1: diagram is not maximal");
    const auto sigma = canonical_type1_axis(m);
    if (!is_fixed_by(d, sigma))
        throw std::invalid_argument("strip_type1: diagram is not fixed by the canonical type I axis");
    const auto classes = axis_chord_classes(d, sigma);
    if (classes.vertical.size() != 1 || classes.horizontal.size() != 1)
        throw std::logic_error("strip_type1: expected exactly one vertical and one horizontal chord, found " +
                               std::to_string(classes.vertical.size()) + " and " +
                               std::to_string(classes.horizontal.size()));
    const auto vertical = classes.vertical[0];
    const auto horizontal = classes.horizontal[0];

    // Delete the four axis-incident points and relabel survivors by rank:
    // the gap left at point 0 turns the point axis into the canonical arc
    // axis of the smaller circle.
    std::array<int, 4> removed{vertical.first, vertical.second, horizontal.first, horizontal.second};
    std::vector<int> rank(m, -1);
    int next = 0;
    for (int i = 0; i < m; ++i) {
        if (std::find(removed.begin(), removed.end(), i) == removed.end()) rank[i] = next++;
    }
    std::vector<int> mate(m - 4);
    for (int i = 0; i < m; ++i)
        if (rank[i] != -1) mate[rank[i]] = rank[d.mate(i)];
    ChordDiagram rest(std::move(mate));
    if (!is_maximal(rest) || (rest.points() > 0 && !is_fixed_by(rest, canonical_type2_axis(rest.points()))))
        throw std::logic_error("strip_type1: remainder is not a type II maximal diagram");
    return {std::move(rest), vertical, horizontal};
}

ChordDiagram insert_type1(const ChordDiagram& type2, int horizontal_point) {
    const int mp = type2.points();
    if (mp % 4 != 0) throw std::invalid_argument("insert_type1: input point count is not a multiple of 4");
    if (!is_maximal(type2) || (mp > 0 && !is_fixed_by(type2, canonical_type2_axis(mp))))
        throw std::invalid_argument("insert_type1: input is not a type II maximal diagram");
    const int m = mp + 4;
    const int g = m / 4;
    const int h = horizontal_point;
    if (h < 1 || h > 2 * g - 1)
        throw std::invalid_argument("insert_type1: horizontal point must lie in 1..2g-1");

    // Survivor positions of strip_type1 in increasing order; old point j
    // lands at the j-th of them.
    std::vector<int> position;
    position.reserve(mp);
    for (int i = 1; i < m; ++i)
        if (i != 2 * g && i != h && i != m - h) position.push_back(i);
    std::vector<std::pair<int, int>> chords;
    chords.reserve(m / 2);
    for (const auto& [a, b] : type2.chord_pairs()) chords.emplace_back(position[a], position[b]);
    chords.emplace_back(0, 2 * g);   // vertical
    chords.emplace_back(h, m - h);   // horizontal
    ChordDiagram d = ChordDiagram::from_pairs(chords);
    if (!is_maximal(d) || !is_fixed_by(d, canonical_type1_axis(m)))
        throw std::logic_error("insert_type1: result is not a type I maximal diagram");
    return d;
}

void for_each_signed_matching(int g, const std::function<bool(const SignedMatching&)>& fn) {
    if (g < 0) throw std::invalid_argument("signed matchings need g >= 0");
    if (g == 0) {
        fn(SignedMatching(0, {}, {}));
        return;
    }
    std::vector<int> mate(2 * g, -1);
    enumerate_matchings(mate, 0, [&](const std::vector<int>& matching) {
        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(g);
        for (int s = 0; s < 2 * g; ++s)
            if (s < matching[s]) pairs.emplace_back(s, matching[s]);
        for (std::uint32_t mask = 0; mask < (1u << g); ++mask) {
            std::vector<std::uint8_t> twist(2 * g, 0);
            for (int j = 0; j < g; ++j) {
                if (mask >> j & 1) {
                    twist[pairs[j].first] = 1;
                    twist[pairs[j].second] = 1;
                }
            }
            if (!fn(SignedMatching(g, matching, std::move(twist)))) return false;
        }
        return true;
    });
}

std::string to_text(const SignedMatching& sm) {
    std::ostringstream os;
    os << sm.edges() << ';';
    for (const auto& [u, v, t] : sm.pairs()) os << ' ' << u << '-' << v << ':' << (t ? 1 : 0);
    return os.str();
}

SignedMatching parse_matching(const std::string& text) {
    try {
        const auto semi = text.find(';');
        if (semi == std::string::npos)
            throw std::invalid_argument("missing \";\" after the genus");
        const int g = std::stoi(text.substr(0, semi));
        std::istringstream rest(text.substr(semi + 1));
        std::vector<std::tuple<int, int, bool>> pairs;
        std::string token;
        while (rest >> token) {
            const auto dash = token.find('-');
            const auto colon = token.find(':');
            if (dash == std::string::npos || colon == std::string::npos || colon < dash)
                throw std::invalid_argument("pair token must look like u-v:t");
            const int u = std::stoi(token.substr(0, dash));
            const int v = std::stoi(token.substr(dash + 1, colon - dash - 1));
            const int t = std::stoi(token.substr(colon + 1));
            if (t != 0 && t != 1) throw std::invalid_argument("twist flag must be 0 or 1");
            pairs.emplace_back(u, v, t == 1);
        }
        return SignedMatching::from_pairs(g, pairs);
    } catch (const std::logic_error& e) {
        throw std::invalid_argument("cannot parse matching \"" + text + "\": " + e.what());
    }
}

} // namespace maxchord
