#pragma once

// Published reference data used by golden tests: the critical-value table
// and its extrapolants exactly as printed in the source tables, plus this
// library's own high-precision values where the printed data carries
// transcription-level errors (see the repository README for the audit).

#include "qes/precision.hpp"

#include <utility>
#include <vector>

namespace qes::testing {

/// Printed critical values [a_crit(J)]^2, J = 2..20, 10 decimals.
inline const std::vector<std::pair<int, const char*>>& printed_critical_values() {
    static const std::vector<std::pair<int, const char*>> v = {
        {2, "2"},
        {3, "10.5874700363"},
        {4, "20.5515334397"},
        {5, "31.0534552654"},
        {6, "41.8519569727"},
        {7, "52.8409390328"},
        {8, "63.9636348939"},
        {9, "75.1858755649"},
        {10, "86.4853951835"},
        {11, "97.8468072286"},
        {12, "109.2590335351"},
        {13, "120.7137913596"},
        {14, "132.2047259144"},
        {15, "143.7268461067"},
        {16, "155.2761720922"},
        {17, "166.8494020446"},
        {18, "178.4439117241"},
        {19, "190.0574079492"},
        {20, "201.6880273595"},
    };
    return v;
}

/// Printed first extrapolants R_1(J), J = 1..16, 10 decimals.
inline const std::vector<const char*>& printed_first_extrapolants() {
    static const std::vector<const char*> v = {
        "11.3406567704", "11.5776386705", "11.6882413518", "11.7509034718",
        "11.7912648657", "11.8195095305", "11.8404722516", "11.8565514577",
        "11.8695546582", "11.8800730055", "11.8888785336", "11.8963479526",
        "11.9027717144", "11.9083609386", "11.9132728866", "11.9176271918",
    };
    return v;
}

/// First entries of the deeper extrapolant columns (levels measured on the
/// difference sequence): level 2 and level 3.
inline const char* printed_level2_first() { return "11.8146205706"; }
inline const char* printed_level3_first() { return "12.0042728584"; }
inline const char* printed_level4_first() { return "11.9912792745"; }

} // namespace qes::testing
