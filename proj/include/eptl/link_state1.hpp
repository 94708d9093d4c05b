#pragma once

// One-marked-point link states. Encoding: cut the disc along the dashed line;
// arcs are chords (u,v) with 1 <= u <= N, u < v < u+N, where v > N marks an
// arc crossing the dashed line (it connects node u to node v-N the long way
// around the marked point). Defects are stored winding-free; windings are
// absorbed as powers of z at action time.

#include "eptl/scalar.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

namespace eptl {

struct InvalidSector : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LinkState1 {
    int N = 0;
    std::vector<std::pair<int, int>> arcs; // sorted
    std::vector<int> defects;              // sorted

    void sort_canonical() {
        std::sort(arcs.begin(), arcs.end());
        std::sort(defects.begin(), defects.end());
    }
    int crossing_number() const {
        int r = 0;
        for (auto &[u, v] : arcs) r += (v > N);
        return r;
    }
    friend bool operator<(const LinkState1 &a, const LinkState1 &b) {
        if (a.arcs != b.arcs) return a.arcs < b.arcs;
        return a.defects < b.defects;
    }
    friend bool operator==(const LinkState1 &a, const LinkState1 &b) {
        return a.N == b.N && a.arcs == b.arcs && a.defects == b.defects;
    }

    std::string str() const {
        std::string s = "{";
        for (auto &[u, v] : arcs) {
            s += "(" + std::to_string(u) + ",";
            s += (v > N) ? std::to_string(v - N) + "x" : std::to_string(v);
            s += ")";
        }
        for (int d : defects) s += "|" + std::to_string(d);
        return s + "}";
    }
};

namespace ls1 {

// chords (with periodic copies) must not cross each other nor defect rays
inline bool planar(const LinkState1 &s) {
    std::vector<std::pair<long, long>> ch;
    for (auto &[u, v] : s.arcs)
        for (long m = -1; m <= 1; ++m) ch.push_back({u + m * (long)s.N, v + m * (long)s.N});
    for (size_t i = 0; i < ch.size(); ++i)
        for (size_t j = i + 1; j < ch.size(); ++j) {
            auto [a, b] = ch[i];
            auto [c, d] = ch[j];
            if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) return false;
        }
    for (int def : s.defects)
        for (long m = -1; m <= 1; ++m) {
            long p = def + m * (long)s.N;
            for (auto &[a, b] : ch)
                if (a < p && p < b) return false;
        }
    return true;
}

inline void enumerate_rec(int N, int defects_left, std::vector<int> &free_nodes, LinkState1 &cur,
                          std::vector<LinkState1> &out) {
    if (free_nodes.empty()) {
        if (defects_left != 0) return;
        LinkState1 s = cur;
        s.sort_canonical();
        out.push_back(s);
        return;
    }
    if ((int)free_nodes.size() < defects_left) return;
    int u = free_nodes.front();
    // defect
    if (defects_left > 0) {
        cur.defects.push_back(u);
        if (planar(cur)) {
            std::vector<int> rest(free_nodes.begin() + 1, free_nodes.end());
            enumerate_rec(N, defects_left - 1, rest, cur, out);
        }
        cur.defects.pop_back();
    }
    // arcs to any other free node, direct or crossing
    for (size_t i = 1; i < free_nodes.size(); ++i) {
        int v = free_nodes[i];
        for (int mode = 0; mode < 2; ++mode) {
            std::pair<int, int> arc = mode == 0 ? std::make_pair(u, v) : std::make_pair(v, u + N);
            cur.arcs.push_back(arc);
            if (planar(cur)) {
                std::vector<int> rest;
                for (size_t k = 1; k < free_nodes.size(); ++k)
                    if ((int)k != (int)i) rest.push_back(free_nodes[k]);
                enumerate_rec(N, defects_left, rest, cur, out);
            }
            cur.arcs.pop_back();
        }
    }
}

// deterministic (lexicographic) enumeration of B_k(N)
inline std::vector<LinkState1> enumerate_basis(int N, int twok) {
    if (twok < 0 || twok > N || (N - twok) % 2 != 0)
        throw InvalidSector("enumerate_basis: invalid (N, 2k)");
    std::vector<int> free_nodes(N);
    for (int i = 0; i < N; ++i) free_nodes[i] = i + 1;
    LinkState1 cur;
    cur.N = N;
    std::vector<LinkState1> out;
    enumerate_rec(N, twok, free_nodes, cur, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// weight z^zpow * beta^nbeta * alpha^nalpha, or zero
struct Weight {
    bool zero = false;
    int zpow = 0, nbeta = 0, nalpha = 0;
};

struct Content {
    bool defect = false;
    long partner = 0; // absolute Z position, valid when !defect
};

inline long copy_of(int N, long pos) { return (pos > 0) ? (pos - 1) / N : -(((-pos) / N) + 1); }
inline int node_of(int N, long pos) { return int(pos - copy_of(N, pos) * N); }

inline Content content_at(const LinkState1 &s, long pos) {
    int N = s.N;
    long m = copy_of(N, pos);
    int node = node_of(N, pos);
    for (int d : s.defects)
        if (d == node) return {true, 0};
    for (auto &[u, v] : s.arcs) {
        if (u == node) return {false, v + m * (long)N};
        int vn = v > N ? v - N : v;
        if (vn == node) {
            // node vn in copy m sits on the chord (u+(m')N, v+(m')N) with
            // v+(m')N = pos, i.e. m' = m - (v>N)
            long mp = m - (v > N ? 1 : 0);
            return {false, u + mp * (long)N};
        }
    }
    throw std::runtime_error("content_at: node not found");
}

inline long gaps_between(int N, long from, long to) {
    auto fl = [&](long p) { return (p > 0) ? (p - 1) / N : -(((-p) / N) + 1); };
    return fl(to) - fl(from);
}

inline void erase_node_curve(LinkState1 &s, int node) {
    for (size_t i = 0; i < s.arcs.size(); ++i) {
        auto [u, v] = s.arcs[i];
        int vn = v > s.N ? v - s.N : v;
        if (u == node || vn == node) {
            s.arcs.erase(s.arcs.begin() + i);
            return;
        }
    }
    for (size_t i = 0; i < s.defects.size(); ++i)
        if (s.defects[i] == node) {
            s.defects.erase(s.defects.begin() + i);
            return;
        }
}

inline void add_arc_z(LinkState1 &s, long p1, long p2) {
    int N = s.N;
    if (p1 > p2) std::swap(p1, p2);
    long m = (p1 > 0) ? (p1 - 1) / N : -(((-p1) / N) + 1);
    p1 -= m * N;
    p2 -= m * N;
    if (p2 - p1 >= N) throw std::runtime_error("add_arc_z: arc spans full circle");
    s.arcs.push_back({int(p1), int(p2)});
}

// relabel all remaining nodes through an injective cyclic map node -> Z
inline Weight relabel_nodes(LinkState1 &s, const std::map<int, long> &P) {
    Weight w;
    int N = s.N;
    LinkState1 r;
    r.N = N;
    std::vector<std::pair<long, long>> newarcs;
    for (auto [u, v] : s.arcs) {
        int n2 = v > N ? v - N : v;
        long c2 = v > N ? 1 : 0;
        long q1 = P.at(u), q2 = P.at(n2) + c2 * N;
        newarcs.push_back({q1, q2});
    }
    for (auto [q1, q2] : newarcs) add_arc_z(r, q1, q2);
    for (int d : s.defects) {
        long q = P.at(d);
        w.zpow += -int(gaps_between(N, d, q));
        r.defects.push_back(node_of(N, q));
    }
    r.sort_canonical();
    s = r;
    return w;
}

// join the curves ending at Z positions p1, p2 through a cap drawn directly
// between those positions (e_N's cap passes the dashed line: p2 = N+1)
inline Weight join_at(LinkState1 &s, long p1, long p2) {
    Weight w;
    Content c1 = content_at(s, p1), c2 = content_at(s, p2);
    int N = s.N;
    if (c1.defect && c2.defect) {
        w.zero = true;
        return w;
    }
    if (c1.defect || c2.defect) {
        long pd = c1.defect ? p1 : p2;
        long t = c1.defect ? c2.partner : c1.partner;
        // defect travels pd -> cap -> arc -> t; gaps telescope in Z
        w.zpow = -int(gaps_between(N, pd, t));
        erase_node_curve(s, node_of(N, p1));
        erase_node_curve(s, node_of(N, p2));
        s.defects.push_back(node_of(N, t));
        s.sort_canonical();
        return w;
    }
    long t1 = c1.partner, t2 = c2.partner;
    if (node_of(N, t1) == node_of(N, p2)) {
        // both capped ends belong to one curve: a closed loop forms; it is
        // non-contractible (weight alpha) iff it crosses the dash oddly
        long cross = std::abs(gaps_between(N, p1, p2)) + std::abs(gaps_between(N, p2, t2));
        erase_node_curve(s, node_of(N, p1));
        if (cross % 2)
            w.nalpha = 1;
        else
            w.nbeta = 1;
        return w;
    }
    erase_node_curve(s, node_of(N, p1));
    erase_node_curve(s, node_of(N, p2));
    add_arc_z(s, t1, t2);
    s.sort_canonical();
    return w;
}

} // namespace ls1

} // namespace eptl
