#include "maxchord/diagram.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace maxchord {

namespace {

int mod(int x, int m) {
    int r = x % m;
    return r < 0 ? r + m : r;
}

void check_circle_size(int points) {
    if (points < 2 || points % 2 != 0)
        throw std::invalid_argument("symmetry element needs an even circle of at least 2 points, got " +
                                    std::to_string(points));
}

// Every dihedral element is i -> sign*i + offset (mod points).
struct Affine {
    int sign;
    int offset;
};

Affine to_affine(const SymmetryElement& s) {
    switch (s.kind) {
    case SymmetryKind::rotation:
        return {1, s.parameter};
    case SymmetryKind::reflection_points:
        return {-1, mod(2 * s.parameter, s.points)};
    case SymmetryKind::reflection_arcs:
    default:
        return {-1, mod(2 * s.parameter + 1, s.points)};
    }
}

} // namespace

ChordDiagram::ChordDiagram(std::vector<int> mate) : mate_(std::move(mate)) {
    const int m = points();
    if (m % 2 != 0)
        throw std::invalid_argument("odd number of points: " + std::to_string(m));
    for (int i = 0; i < m; ++i) {
        if (mate_[i] < 0 || mate_[i] >= m)
            throw std::invalid_argument("mate of point " + std::to_string(i) + " is out of range");
        if (mate_[i] == i)
            throw std::invalid_argument("self-pair at point " + std::to_string(i));
    }
    for (int i = 0; i < m; ++i)
        if (mate_[mate_[i]] != i)
            throw std::invalid_argument("mate sequence is not an involution at point " + std::to_string(i));
}

ChordDiagram ChordDiagram::from_pairs(const std::vector<std::pair<int, int>>& pairs) {
    const int m = 2 * static_cast<int>(pairs.size());
    std::vector<int> mate(m, -1);
    for (const auto& [a, b] : pairs) {
        if (a < 0 || a >= m)
            throw std::invalid_argument("point " + std::to_string(a) + " is out of range for " +
                                        std::to_string(pairs.size()) + " chords");
        if (b < 0 || b >= m)
            throw std::invalid_argument("point " + std::to_string(b) + " is out of range for " +
                                        std::to_string(pairs.size()) + " chords");
        if (a == b)
            throw std::invalid_argument("self-pair at point " + std::to_string(a));
        if (mate[a] != -1)
            throw std::invalid_argument("duplicate point " + std::to_string(a));
        if (mate[b] != -1)
            throw std::invalid_argument("duplicate point " + std::to_string(b));
        mate[a] = b;
        mate[b] = a;
    }
    return ChordDiagram(std::move(mate));
}

std::vector<std::pair<int, int>> ChordDiagram::chord_pairs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(chords());
    for (int i = 0; i < points(); ++i)
        if (i < mate_[i]) out.emplace_back(i, mate_[i]);
    return out;
}

SymmetryElement SymmetryElement::rotation(int points, int k) {
    check_circle_size(points);
    return {SymmetryKind::rotation, mod(k, points), points};
}

SymmetryElement SymmetryElement::reflection_through_points(int points, int p) {
    check_circle_size(points);
    return {SymmetryKind::reflection_points, mod(p, points / 2), points};
}

SymmetryElement SymmetryElement::reflection_through_arcs(int points, int p) {
    check_circle_size(points);
    return {SymmetryKind::reflection_arcs, mod(p, points / 2), points};
}

int SymmetryElement::apply(int i) const {
    switch (kind) {
    case SymmetryKind::rotation:
        return mod(i + parameter, points);
    case SymmetryKind::reflection_points:
        return mod(2 * parameter - i, points);
    case SymmetryKind::reflection_arcs:
    default:
        return mod(2 * parameter + 1 - i, points);
    }
}

SymmetryElement compose(const SymmetryElement& a, const SymmetryElement& b) {
    if (a.points != b.points)
        throw std::invalid_argument("composing symmetries of different circles");
    const int m = a.points;
    const Affine fa = to_affine(a);
    const Affine fb = to_affine(b);
    const int sign = fa.sign * fb.sign;
    const int offset = mod(fa.sign * fb.offset + fa.offset, m);
    if (sign > 0) return SymmetryElement::rotation(m, offset);
    if (offset % 2 == 0) return SymmetryElement::reflection_through_points(m, offset / 2);
    return SymmetryElement::reflection_through_arcs(m, (offset - 1) / 2);
}

SymmetryElement inverse(const SymmetryElement& s) {
    if (s.kind == SymmetryKind::rotation)
        return SymmetryElement::rotation(s.points, -s.parameter);
    return s; // reflections are involutions
}

SymmetryElement canonical_type1_axis(int points) {
    return SymmetryElement::reflection_through_points(points, 0);
}

SymmetryElement canonical_type2_axis(int points) {
    return SymmetryElement::reflection_through_arcs(points, points / 2 - 1);
}

std::vector<SymmetryElement> dihedral_elements(int points) {
    check_circle_size(points);
    std::vector<SymmetryElement> out;
    out.reserve(2 * points);
    for (int k = 0; k < points; ++k) out.push_back(SymmetryElement::rotation(points, k));
    for (int p = 0; p < points / 2; ++p) out.push_back(SymmetryElement::reflection_through_points(points, p));
    for (int p = 0; p < points / 2; ++p) out.push_back(SymmetryElement::reflection_through_arcs(points, p));
    return out;
}

int face_walk_count(std::span<const int> mate) {
    const int m = static_cast<int>(mate.size());
    if (m == 0) return 1;
    int cycles = 0;
    if (m <= 64) {
        std::uint64_t seen = 0;
        for (int i = 0; i < m; ++i) {
            if (seen >> i & 1) continue;
            ++cycles;
            int j = i;
            do {
                seen |= std::uint64_t(1) << j;
                j = mate[j] + 1 == m ? 0 : mate[j] + 1;
            } while (j != i);
        }
    } else {
        std::vector<char> seen(m, 0);
        for (int i = 0; i < m; ++i) {
            if (seen[i]) continue;
            ++cycles;
            int j = i;
            do {
                seen[j] = 1;
                j = mate[j] + 1 == m ? 0 : mate[j] + 1;
            } while (j != i);
        }
    }
    return cycles;
}

FaceWalkDecomposition face_walks(const ChordDiagram& d) {
    const int m = d.points();
    FaceWalkDecomposition out;
    if (m == 0) {
        out.count = 1;
        return out;
    }
    std::vector<char> seen(m, 0);
    for (int i = 0; i < m; ++i) {
        if (seen[i]) continue;
        std::vector<int> walk;
        int j = i;
        do {
            seen[j] = 1;
            walk.push_back(j);
            j = d.mate(j) + 1 == m ? 0 : d.mate(j) + 1;
        } while (j != i);
        out.walks.push_back(std::move(walk));
    }
    out.count = static_cast<int>(out.walks.size());
    return out;
}

int genus(const ChordDiagram& d) {
    const int f = face_walk_count(d.mate_vector());
    const int t = d.chords() + 1 - f;
    if (t < 0 || t % 2 != 0)
        throw std::logic_error("face-walk count violates the Euler relation: n=" +
                               std::to_string(d.chords()) + " F=" + std::to_string(f));
    return t / 2;
}

bool is_maximal(const ChordDiagram& d) {
    return face_walk_count(d.mate_vector()) == 1;
}

ChordDiagram apply_symmetry(const ChordDiagram& d, const SymmetryElement& s) {
    if (d.points() != s.points)
        throw std::invalid_argument("diagram has " + std::to_string(d.points()) +
                                    " points but symmetry acts on " + std::to_string(s.points));
    std::vector<int> mate(d.points());
    for (int i = 0; i < d.points(); ++i) mate[s.apply(i)] = s.apply(d.mate(i));
    return ChordDiagram(std::move(mate));
}

bool is_fixed_by(const ChordDiagram& d, const SymmetryElement& s) {
    if (d.points() != s.points)
        throw std::invalid_argument("diagram has " + std::to_string(d.points()) +
                                    " points but symmetry acts on " + std::to_string(s.points));
    for (int i = 0; i < d.points(); ++i)
        if (d.mate(s.apply(i)) != s.apply(d.mate(i))) return false;
    return true;
}

AxisChordClasses axis_chord_classes(const ChordDiagram& d, const SymmetryElement& s) {
    if (!s.is_reflection())
        throw std::invalid_argument("axis_chord_classes needs a reflection");
    if (!is_fixed_by(d, s))
        throw std::invalid_argument("diagram is not fixed by the given reflection");
    AxisChordClasses out;
    const int m = d.points();
    std::vector<char> done(m, 0);
    for (int a = 0; a < m; ++a) {
        const int b = d.mate(a);
        if (a > b || done[a]) continue;
        done[a] = 1;
        const int sa = s.apply(a);
        const int sb = s.apply(b);
        if (sa == a && sb == b) {
            out.vertical.emplace_back(a, b);
        } else if (sa == b) {
            out.horizontal.emplace_back(a, b);
        } else {
            const auto mirror = std::minmax(sa, sb);
            done[mirror.first] = 1;
            out.mirror_orbits.push_back({{a, b}, {mirror.first, mirror.second}});
        }
    }
    return out;
}

ChordDiagram canonical_form(const ChordDiagram& d) {
    const int m = d.points();
    if (m == 0) return d;
    std::vector<int> best = d.mate_vector();
    std::vector<int> image(m);
    for (const auto& s : dihedral_elements(m)) {
        for (int i = 0; i < m; ++i) image[s.apply(i)] = s.apply(d.mate(i));
        if (image < best) best = image;
    }
    return ChordDiagram(std::move(best));
}

bool chords_cross(std::pair<int, int> a, std::pair<int, int> b) {
    const auto [a1, a2] = std::minmax(a.first, a.second);
    const auto [b1, b2] = std::minmax(b.first, b.second);
    return (a1 < b1 && b1 < a2) != (a1 < b2 && b2 < a2);
}

std::string to_text(const ChordDiagram& d) {
    std::ostringstream os;
    for (int i = 0; i < d.points(); ++i) {
        if (i > 0) os << ' ';
        os << d.mate(i);
    }
    return os.str();
}

ChordDiagram parse_diagram(const std::string& text) {
    std::istringstream is(text);
    std::string token;
    std::vector<std::string> tokens;
    bool pair_format = false;
    while (is >> token) {
        if (token.find('-') != std::string::npos) pair_format = true;
        tokens.push_back(token);
    }
    try {
        if (pair_format) {
            std::vector<std::pair<int, int>> pairs;
            for (const auto& t : tokens) {
                const auto dash = t.find('-');
                if (dash == std::string::npos)
                    throw std::invalid_argument("mixed pair and mate tokens");
                pairs.emplace_back(std::stoi(t.substr(0, dash)), std::stoi(t.substr(dash + 1)));
            }
            return ChordDiagram::from_pairs(pairs);
        }
        std::vector<int> mate;
        mate.reserve(tokens.size());
        for (const auto& t : tokens) mate.push_back(std::stoi(t));
        return ChordDiagram(std::move(mate));
    } catch (const std::logic_error& e) {
        // stoi failures and validation errors both surface as parse errors
        throw std::invalid_argument("cannot parse diagram \"" + text + "\": " + e.what());
    }
}

} // namespace maxchord
