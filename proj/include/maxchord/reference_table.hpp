#pragma once

#include <array>

namespace maxchord {

// Golden reference for the four counting sequences, g = 1..12, kept as
// decimal strings (the last column has 27 digits). verify-table and the
// acceptance suite compare freshly computed values against these.
struct ReferenceRow {
    unsigned g;
    const char* d_star;   // up to rotations
    const char* d_type1;  // fixed by a point axis
    const char* d_type2;  // fixed by an arc axis
    const char* d_all;    // up to all dihedral symmetries
};

inline constexpr std::array<ReferenceRow, 12> reference_table{{
    {1, "1", "1", "1", "1"},
    {2, "4", "3", "5", "4"},
    {3, "131", "25", "41", "82"},
    {4, "14118", "287", "509", "7258"},
    {5, "2976853", "4581", "8229", "1491629"},
    {6, "1013582110", "90519", "166377", "506855279"},
    {7, "508233789579", "2162901", "4016613", "254118439668"},
    {8, "352755124921122", "60249195", "113044185", "176377605783906"},
    {9, "324039613564554401", "1921751145", "3630535785", "162019808170348933"},
    {10, "380751174738424280720", "68980179915", "131095612845", "190375587419231088550"},
    {11, "557175918657122229139987", "2753007869745", "5256401729985", "278587959330563466969926"},
    {12, "993806827312044893602464496", "120897239789655", "231748716159765",
     "496903413656110608290219603"},
}};

} // namespace maxchord
