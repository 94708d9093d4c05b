#pragma once

// Words over the alphabet {e_1..e_N, Omega, Omega^{-1}}. A word acts on a
// module state as g_1 (g_2 (... g_k v)) with the rightmost letter first.

#include <stdexcept>
#include <vector>

namespace eptl {

constexpr int GEN_OMEGA = -1;
constexpr int GEN_OMEGA_INV = -2;

using GeneratorWord = std::vector<int>;

inline GeneratorWord word_e(int j) { return {j}; }
inline GeneratorWord word_omega(int power) {
    GeneratorWord w;
    for (int i = 0; i < std::abs(power); ++i) w.push_back(power > 0 ? GEN_OMEGA : GEN_OMEGA_INV);
    return w;
}
inline GeneratorWord operator+(GeneratorWord a, const GeneratorWord &b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}
inline void check_word(const GeneratorWord &w, int N) {
    for (int g : w)
        if (g != GEN_OMEGA && g != GEN_OMEGA_INV && (g < 1 || g > N))
            throw std::invalid_argument("generator index out of range");
}

} // namespace eptl
