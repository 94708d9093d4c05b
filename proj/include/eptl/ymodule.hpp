#pragma once

// Two-marked-point link states for the modules Y_{k,l,x,y,[z,w]} and
// X_{k,l,x,y,z}. A state is a system of disjoint curves; each curve carries
// its reduced word of signed crossings with the dashed lines a-c and b-c.
// Letters: +1/-1 cross a-c with the point a on the walker's right/left,
// +2/-2 the same for b-c. Canonical form: words freely reduced, defect roots
// unwound (x, y weights; z-combined weights for X at depth zero), defect
// pairs resolved, and windings normalized through the Omega^N relation with
// weight z^{2(k-l)} per full turn (minimal total crossing count, ties broken
// lexicographically).

#include "eptl/link_state1.hpp"
#include "eptl/matrix.hpp"
#include "eptl/tl_element.hpp"
#include "eptl/genword.hpp"
#include "eptl/central.hpp"

#include <map>
#include <optional>

namespace eptl {

constexpr int PA = -2; // marked point a (right)
constexpr int PB = -1; // marked point b (left)

using CWord = std::vector<int8_t>;

inline CWord cw_invrev(const CWord &w) {
    CWord r(w.rbegin(), w.rend());
    for (auto &c : r) c = (int8_t)-c;
    return r;
}
inline void cw_reduce(CWord &w) {
    CWord r;
    for (int8_t c : w) {
        if (!r.empty() && r.back() == -c)
            r.pop_back();
        else
            r.push_back(c);
    }
    w = std::move(r);
}
inline CWord cw_concat(const CWord &a, const CWord &b) {
    CWord r = a;
    r.insert(r.end(), b.begin(), b.end());
    cw_reduce(r);
    return r;
}

// corridor pass words: travelling west (clockwise) below the points crosses
// a-c then b-c with both points on the walker's right; east is the inverse
inline CWord corridor_west() { return {+1, +2}; }
inline CWord corridor_east() { return {-2, -1}; }

struct YCurve {
    int e1 = 0, e2 = 0; // PA, PB or node 1..N
    CWord w;            // read from e1 to e2

    void orient() {
        if (e2 < e1) {
            std::swap(e1, e2);
            w = cw_invrev(w);
        }
    }
    friend bool operator<(const YCurve &a, const YCurve &b) {
        if (a.e1 != b.e1) return a.e1 < b.e1;
        if (a.e2 != b.e2) return a.e2 < b.e2;
        return a.w < b.w;
    }
    friend bool operator==(const YCurve &a, const YCurve &b) {
        return a.e1 == b.e1 && a.e2 == b.e2 && a.w == b.w;
    }
};

struct YState {
    int N = 0;
    std::vector<YCurve> curves;

    void sort_canonical() {
        for (auto &c : curves) c.orient();
        std::sort(curves.begin(), curves.end());
    }
    friend bool operator<(const YState &a, const YState &b) { return a.curves < b.curves; }
    friend bool operator==(const YState &a, const YState &b) {
        return a.N == b.N && a.curves == b.curves;
    }
    size_t norm() const {
        size_t n = 0;
        for (auto &c : curves) n += c.w.size();
        return n;
    }
    int count_end(int e) const {
        int n = 0;
        for (auto &c : curves) n += (c.e1 == e) + (c.e2 == e);
        return n;
    }
    // separating arcs (through lines) cross exactly one line oddly
    static bool is_through(const YCurve &c) {
        if (c.e1 < 0 || c.e2 < 0) return false;
        int na = 0, nb = 0;
        for (int8_t l : c.w) (std::abs(l) == 1 ? na : nb)++;
        return (na % 2) != (nb % 2);
    }
    int depth() const {
        int p = 0;
        for (auto &c : curves) p += is_through(c);
        return p;
    }
    int defect_count() const { return count_end(PA) + count_end(PB); }
    int m2() const { return defect_count() + 2 * depth(); } // effective defects

    std::string str() const {
        auto end_str = [](int e) {
            if (e == PA) return std::string("a");
            if (e == PB) return std::string("b");
            return std::to_string(e);
        };
        std::string s = "{";
        for (auto &c : curves) {
            s += end_str(c.e1) + "-" + end_str(c.e2);
            if (!c.w.empty()) {
                s += "[";
                for (int8_t l : c.w) {
                    s += (l > 0 ? "+" : "-");
                    s += (std::abs(l) == 1 ? "A" : "B");
                }
                s += "]";
            }
            s += " ";
        }
        s += "}";
        return s;
    }
};

struct YWeight {
    bool zero = false;
    int xp = 0, yp = 0, zp = 0;
    int nb = 0, naa = 0, nbb = 0, nab = 0; // beta, alpha_a, alpha_b, alpha_ab
    void fold(const YWeight &o) {
        zero |= o.zero;
        xp += o.xp;
        yp += o.yp;
        zp += o.zp;
        nb += o.nb;
        naa += o.naa;
        nbb += o.nbb;
        nab += o.nab;
    }
};

struct YCfg {
    int N = 0;
    int twok = 0, twol = 0; // 2k, 2l
    bool zunital = false;   // z^{2(k-l)} = 1 declared (automatic for k = l)
    bool xmode = false;     // X_{k,l,x,y,z} rules instead of Y rules
    int zdelta() const { return twok - twol; } // z-exponent of one full drag
    bool unital() const { return zunital || twok == twol; }
};

class YStateOps {
public:
    YCfg cfg;
    explicit YStateOps(YCfg c) : cfg(std::move(c)) {}

    // classify and weigh a closed loop
    void weigh_loop(CWord w, YWeight &acc) const {
        cw_reduce(w);
        while (w.size() >= 2 && w.front() == -w.back()) {
            w.erase(w.begin());
            w.pop_back();
            cw_reduce(w);
        }
        int na = 0, nb = 0;
        for (int8_t l : w) (std::abs(l) == 1 ? na : nb)++;
        if (na % 2 == 1 && nb % 2 == 1)
            acc.nab++;
        else if (na % 2 == 1)
            acc.naa++;
        else if (nb % 2 == 1)
            acc.nbb++;
        else
            acc.nb++;
        if (w.size() > 2)
            throw std::runtime_error("weigh_loop: long reduced loop word");
    }

    // strip root twists of a defect word read from `punct`
    bool strip_defect_root(int punct, CWord &w, int depth, YWeight &acc) const {
        bool changed = false;
        while (!w.empty()) {
            int8_t l = w.front();
            int abs = std::abs(l), sgn = l > 0 ? 1 : -1;
            if (punct == PA && abs == 1) {
                acc.xp += sgn;
            } else if (punct == PB && abs == 2) {
                acc.yp += sgn;
            } else if (cfg.xmode && depth == 0 && punct == PA && abs == 2) {
                acc.zp += sgn; // slide b across the a-defect: (z/x)^{sgn}
                acc.xp -= sgn;
            } else if (cfg.xmode && depth == 0 && punct == PB && abs == 1) {
                acc.zp -= sgn; // slide a across the b-defect: (zy)^{-sgn}
                acc.yp -= sgn;
            } else {
                break;
            }
            w.erase(w.begin());
            changed = true;
        }
        return changed;
    }

    // replace one eastward corridor factor [B- A-] by the westward [A+ B+];
    // the windings differ by a full turn, weight z^{2(k-l)}
    bool corridor_east_to_west(CWord &w, YWeight &acc) const {
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i] == -2 && w[i + 1] == -1) {
                w[i] = +1;
                w[i + 1] = +2;
                if (!cfg.unital()) acc.zp += cfg.zdelta();
                cw_reduce(w);
                return true;
            }
        }
        return false;
    }
    // the reverse replacement, only accepted when it strictly shortens
    bool corridor_west_to_east(CWord &w, YWeight &acc) const {
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i] == +1 && w[i + 1] == +2) {
                CWord trial = w;
                trial[i] = -2;
                trial[i + 1] = -1;
                cw_reduce(trial);
                if (trial.size() < w.size()) {
                    w = std::move(trial);
                    if (!cfg.unital()) acc.zp -= cfg.zdelta();
                    return true;
                }
            }
        }
        return false;
    }

    // resolve a puncture-puncture curve into a pure weight
    void resolve_pp(YCurve c, int depth, int other_defects, YWeight &acc) const {
        bool aa = (c.e1 == PA && c.e2 == PA), bb = (c.e1 == PB && c.e2 == PB);
        if (aa || bb) {
            if (cfg.xmode) {
                acc.zero = true;
                return;
            }
            // encircling the other point has odd crossings with its line
            int na = 0, nb = 0;
            for (int8_t l : c.w) (std::abs(l) == 1 ? na : nb)++;
            bool encircles = aa ? (nb % 2 == 1) : (na % 2 == 1);
            if (!encircles) {
                acc.zero = true;
                return;
            }
        }
        for (int guard = 0;; ++guard) {
            if (guard > 64) throw std::runtime_error("resolve_pp: no fixpoint");
            cw_reduce(c.w);
            if (c.w.empty()) break;
            if ((aa || bb) && c.w.size() == 1) {
                c.w.clear(); // unit-weight removal of the encircling pair
                break;
            }
            bool ch = strip_defect_root(c.e1, c.w, depth, acc);
            {
                CWord rev = cw_invrev(c.w);
                if (strip_defect_root(c.e2, rev, depth, acc)) {
                    c.w = cw_invrev(rev);
                    ch = true;
                }
            }
            if (ch) continue;
            if (corridor_east_to_west(c.w, acc)) continue;
            if (corridor_west_to_east(c.w, acc)) continue;
            throw std::runtime_error("resolve_pp: stuck word");
        }
        // type-(iv) gate: removing the last defects with z^{2(k-l)} != 1
        if (other_defects == 0 && !cfg.unital() && !cfg.xmode) acc.zero = true;
    }

    // one full rotation of the boundary (the diagram of Omega^{+-N})
    static YState dragged(const YState &s, int dir) {
        YState r = s;
        CWord app = dir > 0 ? corridor_west() : corridor_east();
        CWord pre = cw_invrev(app);
        for (auto &c : r.curves) {
            if (c.e1 > 0) c.w = cw_concat(pre, c.w);
            if (c.e2 > 0) c.w = cw_concat(c.w, app);
        }
        return r;
    }

    // strips + pp resolution until stable (no drag)
    void inner_canon(YState &s, YWeight &acc) const {
        for (int guard = 0;; ++guard) {
            if (guard > 64) throw std::runtime_error("inner_canon: no fixpoint");
            bool changed = false;
            int depth = s.depth();
            for (size_t i = 0; i < s.curves.size(); ++i) {
                YCurve &c = s.curves[i];
                size_t before = c.w.size();
                cw_reduce(c.w);
                bool p1 = c.e1 < 0, p2 = c.e2 < 0;
                if (p1 && p2) {
                    YCurve pc = c;
                    s.curves.erase(s.curves.begin() + i);
                    int other = 0;
                    for (auto &cc : s.curves) other += (cc.e1 < 0) + (cc.e2 < 0);
                    resolve_pp(pc, s.depth(), other, acc);
                    if (acc.zero) return;
                    --i;
                    changed = true;
                    continue;
                }
                if (p1 && !p2) {
                    if (strip_defect_root(c.e1, c.w, depth, acc)) changed = true;
                } else if (!p1 && p2) {
                    CWord rev = cw_invrev(c.w);
                    if (strip_defect_root(c.e2, rev, depth, acc)) {
                        c.w = cw_invrev(rev);
                        changed = true;
                    }
                }
                if (c.w.size() != before) changed = true;
            }
            if (!changed) break;
        }
        s.sort_canonical();
    }

    void canonicalize(YState &s, YWeight &acc) const {
        inner_canon(s, acc);
        if (acc.zero) return;
        for (int guard = 0;; ++guard) {
            if (guard > 12) throw std::runtime_error("canonicalize: drag runaway");
            YState up = dragged(s, +1), down = dragged(s, -1);
            YWeight wu, wd;
            inner_canon(up, wu);
            inner_canon(down, wd);
            size_t n0 = s.norm();
            bool move_up = !wu.zero && (up.norm() < n0 || (up.norm() == n0 && up < s));
            bool move_down = !wd.zero && (down.norm() < n0 || (down.norm() == n0 && down < s));
            if (move_up && move_down) {
                if (down.norm() < up.norm() || (down.norm() == up.norm() && down < up))
                    move_up = false;
                else
                    move_down = false;
            }
            // Omega^N v = z^{2(k-l)} v identifies drag_cw(v) with z^{2(k-l)} v:
            // passing to the cw-dragged representative multiplies by z^{-2(k-l)},
            // to the ccw-dragged one by z^{+2(k-l)}
            if (move_up) {
                s = up;
                acc.fold(wu);
                if (!cfg.unital()) acc.zp -= cfg.zdelta();
            } else if (move_down) {
                s = down;
                acc.fold(wd);
                if (!cfg.unital()) acc.zp += cfg.zdelta();
            } else {
                break;
            }
        }
        s.sort_canonical();
    }

    // ---- surgical primitives ----

    struct EndRef {
        int idx;
        bool at_e2;
    };
    static EndRef find_end(const YState &s, int node) {
        for (int i = 0; i < (int)s.curves.size(); ++i) {
            if (s.curves[i].e1 == node) return {i, false};
            if (s.curves[i].e2 == node) return {i, true};
        }
        throw std::runtime_error("find_end: node not attached");
    }
    static CWord word_from(const YCurve &c, bool from_e2) {
        return from_e2 ? cw_invrev(c.w) : c.w;
    }

    // join the curves at nodes n1, n2 through a cap with word `cap` (read
    // n1 -> n2); removes both curve ends, no canonicalization
    void join_nodes(YState &s, int n1, int n2, const CWord &cap, YWeight &acc) const {
        EndRef r1 = find_end(s, n1), r2 = find_end(s, n2);
        if (r1.idx == r2.idx) {
            CWord loop = cw_concat(cap, word_from(s.curves[r1.idx], r2.at_e2));
            weigh_loop(loop, acc);
            s.curves.erase(s.curves.begin() + r1.idx);
            return;
        }
        const YCurve &c1 = s.curves[r1.idx];
        const YCurve &c2 = s.curves[r2.idx];
        int o1 = r1.at_e2 ? c1.e1 : c1.e2;
        int o2 = r2.at_e2 ? c2.e1 : c2.e2;
        YCurve nc;
        nc.e1 = o1;
        nc.e2 = o2;
        nc.w = cw_concat(cw_concat(word_from(c1, !r1.at_e2), cap), word_from(c2, r2.at_e2));
        int i1 = std::max(r1.idx, r2.idx), i2 = std::min(r1.idx, r2.idx);
        s.curves.erase(s.curves.begin() + i1);
        s.curves.erase(s.curves.begin() + i2);
        s.curves.push_back(nc);
    }

    // ---- generator actions (mutate the state, return the weight) ----

    YWeight act_e(YState &s, int j) const {
        int N = cfg.N;
        YWeight acc;
        int n1 = j, n2 = (j == N) ? 1 : j + 1;
        CWord cap = (j == N) ? corridor_east() : CWord{};
        join_nodes(s, n1, n2, cap, acc);
        YCurve cap_arc;
        if (j < N) {
            cap_arc.e1 = j;
            cap_arc.e2 = j + 1;
        } else {
            cap_arc.e1 = 1;
            cap_arc.e2 = N;
            cap_arc.w = corridor_west(); // read 1 -> N below the points
        }
        s.curves.push_back(cap_arc);
        canonicalize(s, acc);
        return acc;
    }

    YWeight act_omega(YState &s, int dir) const {
        int N = cfg.N;
        YWeight acc;
        for (auto &c : s.curves) {
            for (int pass = 0; pass < 2; ++pass) {
                int &e = pass == 0 ? c.e1 : c.e2;
                if (e < 0) continue;
                int ne = e + (dir > 0 ? -1 : +1);
                bool wrapped = false;
                if (ne < 1) {
                    ne = N;
                    wrapped = true;
                } else if (ne > N) {
                    ne = 1;
                    wrapped = true;
                }
                if (wrapped) {
                    CWord ext = dir > 0 ? corridor_west() : corridor_east();
                    if (pass == 0)
                        c.w = cw_concat(cw_invrev(ext), c.w);
                    else
                        c.w = cw_concat(c.w, ext);
                }
                e = ne;
            }
        }
        canonicalize(s, acc);
        return acc;
    }

    YWeight act_word(YState &s, const GeneratorWord &word) const {
        YWeight acc;
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            YWeight w;
            if (*it == GEN_OMEGA)
                w = act_omega(s, +1);
            else if (*it == GEN_OMEGA_INV)
                w = act_omega(s, -1);
            else
                w = act_e(s, *it);
            acc.fold(w);
            if (acc.zero) return acc;
        }
        return acc;
    }

    // c_j: cap nodes j, j+1 and drop them; N decreases by 2. j = N is written
    // c_0 in the texts (cap across the dashed line).
    YWeight act_c(YState &s, int j) const {
        int N = cfg.N;
        YWeight acc;
        int n1 = j, n2 = (j == N) ? 1 : j + 1;
        CWord cap = (j == N) ? corridor_east() : CWord{};
        join_nodes(s, n1, n2, cap, acc);
        for (auto &c : s.curves)
            for (int pass = 0; pass < 2; ++pass) {
                int &e = pass == 0 ? c.e1 : c.e2;
                if (e < 0) continue;
                if (j < N) {
                    if (e > j + 1) e -= 2;
                } else {
                    e -= 1;
                }
            }
        s.N = N - 2;
        YCfg small = cfg;
        small.N = N - 2;
        YStateOps(small).canonicalize(s, acc);
        return acc;
    }

    // c_j^dagger: insert an arc on two new nodes at position j (j = 0: the
    // arc straddles the dashed line)
    static YState insert_arc(const YState &s, int j) {
        YState r = s;
        int N = s.N;
        if (j >= 1 && j <= N + 1) {
            for (auto &c : r.curves)
                for (int pass = 0; pass < 2; ++pass) {
                    int &e = pass == 0 ? c.e1 : c.e2;
                    if (e >= j) e += 2;
                }
            r.curves.push_back({j, j + 1, {}});
        } else if (j == 0) {
            for (auto &c : r.curves)
                for (int pass = 0; pass < 2; ++pass) {
                    int &e = pass == 0 ? c.e1 : c.e2;
                    if (e >= 1) e += 1;
                }
            r.curves.push_back({1, N + 2, corridor_west()});
        } else {
            throw std::invalid_argument("insert_arc: bad position");
        }
        r.N = N + 2;
        r.sort_canonical();
        return r;
    }

    // apply a rectangular TL pairing on nodes offset+1 .. offset+n
    YWeight apply_pairing(YState &s, const PlanarPairing &d, int offset) const {
        int n = d.strands();
        YWeight acc;
        std::vector<std::pair<int, int>> caps;
        for (int c = 1; c <= n; ++c) {
            int q = d.p[PlanarPairing::bot(c, n)];
            if (q < n && q > c - 1) caps.push_back({c, q + 1});
        }
        std::sort(caps.begin(), caps.end(),
                  [](auto &a, auto &b) { return a.second - a.first < b.second - b.first; });
        for (auto &[c1, c2] : caps) {
            join_nodes(s, offset + c1, offset + c2, {}, acc);
            if (acc.zero) return acc;
        }
        std::map<int, int> relabel;
        for (int c = 1; c <= n; ++c) {
            int q = d.p[PlanarPairing::bot(c, n)];
            if (q >= n) relabel[offset + c] = offset + (2 * n - q);
        }
        for (auto &c : s.curves)
            for (int pass = 0; pass < 2; ++pass) {
                int &e = pass == 0 ? c.e1 : c.e2;
                if (e < 0) continue;
                auto it = relabel.find(e);
                if (it != relabel.end()) e = it->second;
            }
        for (int c = 1; c <= n; ++c) {
            int q = d.p[PlanarPairing::top(c, n)];
            if (q >= n) {
                int c2 = 2 * n - q;
                if (c2 > c) s.curves.push_back({offset + c, offset + c2, {}});
            }
        }
        canonicalize(s, acc);
        return acc;
    }

    // apply an annular diagram from the braid-row expansion
    YWeight apply_diagram(const AnnularDiagram &d, YState &s) const {
        int N = cfg.N;
        YWeight acc;
        auto node_and_cap = [&](long z1, long z2) {
            // cap word read from node_of(z1) to node_of(z2) with the corridor
            // passes dictated by the gap count
            int m1 = ls1::node_of(N, z1), m2 = ls1::node_of(N, z2);
            long g = ls1::gaps_between(N, z1, z2);
            CWord cap;
            for (long i = 0; i < g; ++i) cap = cw_concat(cap, corridor_east());
            for (long i = 0; i < -g; ++i) cap = cw_concat(cap, corridor_west());
            return std::tuple<int, int, CWord>(m1, m2, cap);
        };
        for (auto &[z1, z2] : d.inner_caps) {
            auto [n1, n2, cap] = node_and_cap(z1, z2);
            join_nodes(s, n1, n2, cap, acc);
        }
        // pass-throughs: relabel with corridor words
        std::vector<YCurve> moved;
        std::map<int, std::pair<int, CWord>> P; // old node -> (new node, word toward end)
        for (auto &[n, z] : d.pass) {
            long g = ls1::gaps_between(N, n, z);
            CWord ext;
            for (long i = 0; i < g; ++i) ext = cw_concat(ext, corridor_east());
            for (long i = 0; i < -g; ++i) ext = cw_concat(ext, corridor_west());
            P[n] = {ls1::node_of(N, z), ext};
        }
        for (auto &c : s.curves) {
            if (c.e1 > 0) {
                auto &[nn, ext] = P.at(c.e1);
                c.w = cw_concat(cw_invrev(ext), c.w);
                c.e1 = nn;
            }
            if (c.e2 > 0) {
                auto &[nn, ext] = P.at(c.e2);
                c.w = cw_concat(c.w, ext);
                c.e2 = nn;
            }
        }
        for (auto &[z1, z2] : d.outer_caps) {
            auto [n1, n2, cap] = node_and_cap(z1, z2);
            YCurve arc;
            arc.e1 = n1;
            arc.e2 = n2;
            arc.w = cap;
            s.curves.push_back(arc);
        }
        canonicalize(s, acc);
        return acc;
    }
};

// ---- reference states ----

// maximal-depth state u_{k,l}(N): 2k defects of a on nodes 1..2k, p through
// lines (2k+j, N+1-j), 2l defects of b
inline YState u_state(const YCfg &cfg) {
    int N = cfg.N, twok = cfg.twok, twol = cfg.twol;
    int p = (N - twok - twol) / 2;
    if (p < 0 || (N - twok - twol) % 2) throw InvalidSector("u_state: invalid sector");
    YState s;
    s.N = N;
    for (int i = 1; i <= twok; ++i) s.curves.push_back({PA, i, {}});
    for (int j = 1; j <= p; ++j) s.curves.push_back({twok + j, N + 1 - j, {(int8_t)-2}});
    for (int i = 1; i <= twol; ++i) s.curves.push_back({PB, twok + p + i, {}});
    s.sort_canonical();
    return s;
}

// glue u in B_k(N_a) and v in B_l(N_b) into a two-point state
inline YState glue_states(const LinkState1 &u, const LinkState1 &v) {
    YState s;
    s.N = u.N + v.N;
    int Na = u.N;
    for (int d : u.defects) s.curves.push_back({PA, d, {}});
    for (auto [a, b] : u.arcs) {
        if (b <= u.N)
            s.curves.push_back({a, b, {}});
        else // crossing arc {i,j} passes behind a: word read i -> j is A+
            s.curves.push_back({b - u.N, a, {(int8_t)+1}});
    }
    for (int d : v.defects) s.curves.push_back({PB, Na + d, {}});
    for (auto [a, b] : v.arcs) {
        if (b <= v.N)
            s.curves.push_back({Na + a, Na + b, {}});
        else // crossing arc behind b: word read i -> j is B-
            s.curves.push_back({Na + (b - v.N), Na + a, {(int8_t)-2}});
    }
    s.sort_canonical();
    return s;
}

} // namespace eptl
