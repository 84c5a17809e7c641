#pragma once

#include <string>

namespace afx {

// Three-valued verdict; Unknown must be propagated conservatively.
enum class Tri { Yes, No, Unknown };

inline std::string to_string(Tri t) {
    switch (t) {
        case Tri::Yes: return "yes";
        case Tri::No: return "no";
        default: return "unknown";
    }
}

inline Tri tri_and(Tri a, Tri b) {
    if (a == Tri::No || b == Tri::No) return Tri::No;
    if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
    return Tri::Yes;
}

inline Tri tri_not(Tri a) {
    if (a == Tri::Yes) return Tri::No;
    if (a == Tri::No) return Tri::Yes;
    return Tri::Unknown;
}

inline Tri tri_of(bool b) { return b ? Tri::Yes : Tri::No; }

}  // namespace afx
