#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace maxchord {

// A chord diagram: 2n points labelled 0..2n-1 clockwise around a circle,
// joined pairwise by n chords. Stored as the fixed-point-free involution
// mate[i] = partner of point i.
//
// The empty diagram (n = 0) is accepted and serves as a recursion base; it
// has one face walk and genus 0 by convention.
class ChordDiagram {
public:
    explicit ChordDiagram(std::vector<int> mate);

    // Builds a diagram from explicit chords. The pairs must cover
    // 0..2n-1 exactly once each, with no pair {i,i}.
    static ChordDiagram from_pairs(const std::vector<std::pair<int, int>>& pairs);

    int points() const { return static_cast<int>(mate_.size()); }
    int chords() const { return points() / 2; }
    int mate(int i) const { return mate_[i]; }
    const std::vector<int>& mate_vector() const { return mate_; }

    // Chords as (min,max) pairs, sorted by smaller endpoint.
    std::vector<std::pair<int, int>> chord_pairs() const;

    bool operator==(const ChordDiagram&) const = default;
    bool operator<(const ChordDiagram& other) const { return mate_ < other.mate_; }

private:
    std::vector<int> mate_;
};

enum class SymmetryKind { rotation, reflection_points, reflection_arcs };

// An element of the dihedral group of a circle with an even number of
// points. As functions on point indices (mod the point count):
//
//   rotation(k)                  i -> i + k
//   reflection_through_points(p) i -> 2p - i      axis through p and p + n
//   reflection_through_arcs(p)   i -> 2p + 1 - i  axis between p,p+1 and the
//                                                 opposite arc
//
// Reflection parameters are normalized to 0..n-1 since p and p+n describe
// the same axis.
struct SymmetryElement {
    SymmetryKind kind;
    int parameter;
    int points;

    static SymmetryElement rotation(int points, int k);
    static SymmetryElement reflection_through_points(int points, int p);
    static SymmetryElement reflection_through_arcs(int points, int p);

    int apply(int i) const;
    bool is_reflection() const { return kind != SymmetryKind::rotation; }

    bool operator==(const SymmetryElement&) const = default;
};

// Group law: compose(a, b) applies b first, then a.
SymmetryElement compose(const SymmetryElement& a, const SymmetryElement& b);
SymmetryElement inverse(const SymmetryElement& s);

// The canonical axes used throughout: the type I axis passes through points
// 0 and n; the type II axis through the midpoints of arcs (2n-1,0) and
// (n-1,n), i.e. i -> 2n-1-i.
SymmetryElement canonical_type1_axis(int points);
SymmetryElement canonical_type2_axis(int points);

// All 4n elements of the dihedral group: 2n rotations, n point-axis and
// n arc-axis reflections.
std::vector<SymmetryElement> dihedral_elements(int points);

// The face walks of a diagram: cycles of the permutation i -> mate[i]+1,
// each listed starting from its smallest element, sorted by that element.
// Traversing a chord and then the next clockwise arc realizes the
// alternating chord-side/arc walk.
struct FaceWalkDecomposition {
    std::vector<std::vector<int>> walks;
    int count; // == walks.size(), except 1 for the empty diagram
};

FaceWalkDecomposition face_walks(const ChordDiagram& d);

// Cycle count only, no walk materialization. Hot path of the exhaustive
// oracles. Returns 1 for an empty mate sequence.
int face_walk_count(std::span<const int> mate);

// Genus via the Euler characteristic of the polygon gluing:
// g = (n + 1 - F) / 2 with F the number of face walks.
int genus(const ChordDiagram& d);

// A diagram is maximal when it has exactly one face walk; then n is even
// and the genus is n/2.
bool is_maximal(const ChordDiagram& d);

ChordDiagram apply_symmetry(const ChordDiagram& d, const SymmetryElement& s);
bool is_fixed_by(const ChordDiagram& d, const SymmetryElement& s);

// Chords of a reflection-fixed diagram, split into the chord lying on the
// axis (vertical), chords whose ends the reflection swaps (horizontal), and
// the remaining chords grouped into mirror pairs. The three classes
// partition the chord set.
struct AxisChordClasses {
    std::vector<std::pair<int, int>> vertical;
    std::vector<std::pair<int, int>> horizontal;
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> mirror_orbits;
};

AxisChordClasses axis_chord_classes(const ChordDiagram& d, const SymmetryElement& s);

// Lexicographically smallest mate sequence over all 4n dihedral images.
// Two diagrams are dihedral-isomorphic iff their canonical forms are equal.
ChordDiagram canonical_form(const ChordDiagram& d);

// Whether two chords intersect when drawn as straight segments.
bool chords_cross(std::pair<int, int> a, std::pair<int, int> b);

// Text format: space-separated mate sequence, e.g. "2 3 0 1" for the
// crossing pair. parse_diagram also accepts the pair list "0-2 1-3".
std::string to_text(const ChordDiagram& d);
ChordDiagram parse_diagram(const std::string& text);

} // namespace maxchord
