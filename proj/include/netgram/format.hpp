#pragma once

#include <cmath>
#include <cstdio>
#include <string>

namespace netgram {

// Deterministic float rendering for CSV and adjacency files: 12 significant
// digits, infinities as the literal "inf".  -0 normalizes to 0.
inline std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) v = 0.0;
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

} // namespace netgram
