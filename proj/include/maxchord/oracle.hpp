#pragma once

#include "maxchord/counting.hpp"
#include "maxchord/diagram.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>

namespace maxchord {

// Raised when a brute-force scan would leave desk scale; an explicit force
// flag lifts the guard.
class desk_scale_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Full enumeration stops at 8 chords ((2*8-1)!! = 2,027,025 diagrams),
// reflection-symmetric enumeration at genus 7.
inline constexpr int max_enumeration_chords = 8;
inline constexpr int max_symmetric_genus = 7;

enum class AxisType { type1, type2 };

// Visits every diagram with n chords exactly once: the smallest unpaired
// point is joined to each larger unpaired point in increasing order, depth
// first. Return false from the callback to stop early.
void for_each_diagram(int n, const std::function<bool(const ChordDiagram&)>& fn, bool force = false);

// Visits exactly the diagrams fixed by the given reflection, chosen mirror
// orbit by mirror orbit; never touches the full matching space.
void for_each_symmetric_diagram(const SymmetryElement& reflection,
                                const std::function<bool(const ChordDiagram&)>& fn, bool force = false);

struct GenusTally {
    int n;
    std::map<int, std::uint64_t> counts; // genus -> labelled diagram count
};

GenusTally genus_tally(int n, bool force = false);

// Burnside average over the 4g rotations of the number of maximal diagrams
// each one fixes, by full enumeration. Checks d_star.
CountBig d_star_oracle(int g, bool force = false);

// Maximal diagrams fixed by the canonical axis of the given type, counted
// by symmetric-only enumeration. Checks d_vertical / d_parallel.
CountBig reflection_fixed_oracle(int g, AxisType axis, bool force = false);

// Two independent counts of dihedral classes of maximal diagrams: the
// Burnside average over all 8g dihedral elements, and the number of
// distinct canonical forms. They must agree (and check d_circle).
struct DCircleOracle {
    CountBig burnside;
    CountBig canonical_classes;
};

DCircleOracle d_circle_oracle(int g, bool force = false);

// True when every axis of the given type fixes the same number of maximal
// diagrams (they are all conjugate by rotations).
bool axis_independence_check(int g, AxisType axis, bool force = false);

} // namespace maxchord
