#pragma once

// Central elements: braid transfer matrices F and Fbar built from the row of
// N crossing tiles (2^N Kauffman resolutions, or a column-by-column merge),
// Omega^N, centrality checks, exact spectra against the predicted factors,
// and the spectral projectors Pi_{m,n}, Q_{m,n}, Q_0.

#include "eptl/matrix.hpp"
#include "eptl/scalar.hpp"

#include <functional>
#include <map>
#include <vector>

namespace eptl {

// Annular (N,N)-diagram described in cut coordinates: Z positions carry the
// corridor offsets picked up by paths crossing the dashed-line gap.
struct AnnularDiagram {
    int N = 0;
    std::vector<std::pair<long, long>> inner_caps; // join these state positions
    std::vector<std::pair<int, long>> pass;        // node -> new Z position
    std::vector<std::pair<long, long>> outer_caps; // new arcs at Z positions
    int vpow = 0;                                  // power of v = q^{1/2}

    friend bool operator<(const AnnularDiagram &a, const AnnularDiagram &b) {
        if (a.inner_caps != b.inner_caps) return a.inner_caps < b.inner_caps;
        if (a.pass != b.pass) return a.pass < b.pass;
        return a.outer_caps < b.outer_caps;
    }
};

// Trace one Kauffman resolution of the braid row. bits[j]=0 is the
// "a"-smoothing (S_j W_j)(N_j E_j), bits[j]=1 the "b"-smoothing
// (S_j E_j)(N_j W_j); W_j = seg_{j-1}, E_j = seg_j, seg_N crosses the gap.
inline AnnularDiagram trace_resolution(int N, const std::vector<int> &bits) {
    AnnularDiagram d;
    d.N = N;
    for (int b : bits) d.vpow += b ? -1 : +1;
    // endpoint encoding: 0..N-1 = S_{j+1}, N..2N-1 = N_{j+1}
    std::vector<bool> used(2 * N, false);
    auto column_of_seg_side = [&](int seg, bool west_side) {
        // seg j lies between column j and column j+1 (mod N)
        return west_side ? (seg % N) + 1 : seg; // west side -> col j+1, east -> col j
    };
    (void)column_of_seg_side;
    for (int start = 0; start < 2 * N; ++start) {
        if (used[start]) continue;
        // walk from this endpoint through the lane
        int col = start % N + 1;
        bool is_S = start < N;
        long off = 0;
        // first hop: endpoint -> seg
        int seg;
        bool heading_east; // moving from col j toward seg j (east) or seg j-1 (west)
        int bit = bits[col - 1];
        if (is_S)
            heading_east = bit == 1; // a: S-W (west), b: S-E (east)
        else
            heading_east = bit == 0; // a: N-E, b: N-W
        seg = heading_east ? col : (col - 1 == 0 ? N : col - 1);
        if (!heading_east && seg == N) off -= N; // crossed the gap westward
        while (true) {
            // arrive at the far column of this seg
            int ncol = heading_east ? (seg % N) + 1 : seg;
            if (heading_east && seg == N) off += N;
            int nbit = bits[ncol - 1];
            // entering column ncol from the west (if heading east) or east
            bool from_west = heading_east;
            // a: (S W)(N E);  b: (S E)(N W)
            bool exit_S;
            if (from_west)
                exit_S = (nbit == 0); // arrived on W: a joins W-S, b joins W-N
            else
                exit_S = (nbit == 1); // arrived on E: a joins E-N, b joins E-S
            int endpoint = exit_S ? (ncol - 1) : (N + ncol - 1);
            if (!used[endpoint]) {
                // terminate here
                used[start] = used[endpoint] = true;
                bool s1 = is_S, s2 = exit_S;
                long z1 = (start % N) + 1, z2 = ncol + off;
                if (s1 && s2)
                    d.inner_caps.push_back({z1, z2});
                else if (!s1 && !s2)
                    d.outer_caps.push_back({z1, z2});
                else if (s1 && !s2)
                    d.pass.push_back({int(z1), z2});
                else
                    d.pass.push_back({int(ncol), (start % N) + 1 - off});
                break;
            }
            throw std::runtime_error("trace_resolution: re-entered endpoint");
        }
    }
    std::sort(d.inner_caps.begin(), d.inner_caps.end(),
              [](auto &a, auto &b) { return std::labs(a.second - a.first) < std::labs(b.second - b.first); });
    std::sort(d.pass.begin(), d.pass.end());
    std::sort(d.outer_caps.begin(), d.outer_caps.end(),
              [](auto &a, auto &b) { return std::labs(a.second - a.first) < std::labs(b.second - b.first); });
    return d;
}

// All 2^N resolutions of the braid row (bar = true swaps the tile weights,
// giving Fbar).
inline std::vector<AnnularDiagram> braid_resolutions(int N, bool bar) {
    std::vector<AnnularDiagram> out;
    out.reserve(1u << N);
    for (unsigned mask = 0; mask < (1u << N); ++mask) {
        std::vector<int> bits(N);
        for (int j = 0; j < N; ++j) bits[j] = (mask >> j) & 1;
        AnnularDiagram d = trace_resolution(N, bits);
        if (bar) d.vpow = -d.vpow;
        out.push_back(std::move(d));
    }
    return out;
}

// Column-merged alternative: resolutions whose partial trace structures agree
// are combined before completion. Returns (diagram, multiplicity per vpow).
inline std::map<AnnularDiagram, std::map<int, long>> braid_diagrams_dp(int N, bool bar) {
    // profile: partially processed trace. We process columns left to right,
    // keeping, for each seg cut open at the current frontier, the pending
    // attachment. Representation below keeps it simple: the pending data is
    // (attachment of the west corridor stub, attachment of the cursor seg),
    // where an attachment is an endpoint id or -1 for the raw stub, plus the
    // set of finished connections.
    struct Profile {
        std::vector<std::pair<int, int>> done; // endpoint pairs (encoded)
        int west = -1, cursor = -1;            // endpoint ids or -1 = stub
        int vpow = 0;
        bool operator<(const Profile &o) const {
            if (done != o.done) return done < o.done;
            if (west != o.west) return west < o.west;
            if (cursor != o.cursor) return cursor < o.cursor;
            return vpow < o.vpow;
        }
    };
    std::map<Profile, long> cur;
    cur[{{}, -1, -1, 0}] = 1;
    for (int col = 1; col <= N; ++col) {
        std::map<Profile, long> nxt;
        for (auto &[p, mult] : cur) {
            for (int bit = 0; bit < 2; ++bit) {
                Profile q = p;
                q.vpow += bit ? -1 : +1;
                int S = col - 1, Nn = N + col - 1;
                // west attachment of this column = q.cursor for col>1, stub for col 1
                int westatt = (col == 1) ? -2 : q.cursor; // -2 marks corridor stub
                int Satt, Natt;
                if (bit == 0) { // a: S-W, N-E
                    Satt = westatt;
                    Natt = Nn; // N side feeds the new cursor
                    if (Satt == -2)
                        q.west = S;
                    else if (Satt >= 0)
                        q.done.push_back({std::min(Satt, S), std::max(Satt, S)});
                    q.cursor = Natt;
                } else { // b: S-E, N-W
                    Natt = westatt;
                    if (Natt == -2)
                        q.west = Nn;
                    else if (Natt >= 0)
                        q.done.push_back({std::min(Natt, Nn), std::max(Natt, Nn)});
                    q.cursor = S;
                }
                std::sort(q.done.begin(), q.done.end());
                nxt[q] += mult;
            }
        }
        cur = std::move(nxt);
    }
    std::map<AnnularDiagram, std::map<int, long>> out;
    for (auto &[p, mult] : cur) {
        // close the corridor: cursor joins the west stub across the gap
        std::vector<std::pair<int, int>> conns = p.done;
        if (p.west >= 0 && p.cursor >= 0)
            conns.push_back({std::min(p.west, p.cursor), std::max(p.west, p.cursor)});
        else
            throw std::runtime_error("braid_diagrams_dp: open lane");
        // rebuild an AnnularDiagram; corridor offsets must match the raw
        // trace, so re-derive them by locating which connection closes the gap
        AnnularDiagram d;
        d.N = N;
        d.vpow = bar ? -p.vpow : p.vpow;
        int wa = p.west, cu = p.cursor;
        bool gap_once = false;
        for (auto &[x, y] : conns) {
            bool through_gap =
                !gap_once && ((x == wa && y == cu) || (x == cu && y == wa));
            if (through_gap) gap_once = true;
            bool xs = x < N, ys = y < N;
            long zx = (x % N) + 1, zy = (y % N) + 1;
            // the west-stub endpoint is reached by travelling east through the
            // corridor from the cursor side: shift it up one period
            if (through_gap) {
                if (x == wa)
                    zx += N;
                else
                    zy += N;
            }
            if (xs && ys)
                d.inner_caps.push_back({zx, zy});
            else if (!xs && !ys)
                d.outer_caps.push_back({zx, zy});
            else if (xs)
                d.pass.push_back({int((x % N) + 1), zy + ((x % N) + 1) - zx});
            else
                d.pass.push_back({int((y % N) + 1), zx + ((y % N) + 1) - zy});
        }
        std::sort(d.inner_caps.begin(), d.inner_caps.end(),
                  [](auto &a, auto &b) { return std::labs(a.second - a.first) < std::labs(b.second - b.first); });
        std::sort(d.pass.begin(), d.pass.end());
        std::sort(d.outer_caps.begin(), d.outer_caps.end(),
                  [](auto &a, auto &b) { return std::labs(a.second - a.first) < std::labs(b.second - b.first); });
        out[d][d.vpow] += mult;
    }
    return out;
}

// Build the matrix of F (or Fbar) on any module exposing
//   int dim();
//   void apply_diagram(const AnnularDiagram&, int col, std::vector<std::pair<T,int>>&)
// and a v-power evaluator.
template <class T, class Module>
Matrix<T> braid_matrix(const Module &mod, int N, bool bar, const std::function<T(int)> &vpow_eval) {
    Matrix<T> m(mod.dim(), mod.dim());
    auto diags = braid_resolutions(N, bar);
    for (const auto &d : diags) {
        T w = vpow_eval(d.vpow);
        for (int col = 0; col < mod.dim(); ++col) {
            std::vector<std::pair<T, int>> img;
            mod.apply_diagram(d, col, img);
            for (auto &[c, row] : img) m(row, col) += w * c;
        }
    }
    return m;
}

template <class T, class Module>
Matrix<T> braid_matrix_dp(const Module &mod, int N, bool bar, const std::function<T(int)> &vpow_eval) {
    Matrix<T> m(mod.dim(), mod.dim());
    auto diags = braid_diagrams_dp(N, bar);
    for (const auto &[d, vps] : diags) {
        for (auto &[vp, mult] : vps) {
            AnnularDiagram dd = d;
            dd.vpow = vp;
            T w = vpow_eval(vp) * T((int)mult);
            for (int col = 0; col < mod.dim(); ++col) {
                std::vector<std::pair<T, int>> img;
                mod.apply_diagram(dd, col, img);
                for (auto &[c, row] : img) m(row, col) += w * c;
            }
        }
    }
    return m;
}

// predicted product prod_{n=0}^{2m-1} (L - f_{m,n}) with f_{m,n} =
// q^m w_n + q^{-m} w_n^{-1}, w_n the 2m-th roots of Z2 = z^{2(k-l)}.
// Evaluates in the base field through Newton power sums.
template <class T> std::vector<T> predicted_f_product(int m2, const T &qm, const T &Z2) {
    // roots r1, r2 of r^2 - (L/q^m) r + q^{-2m}; product over the 2m w-roots:
    //   prod (L - f) = - q^{2m^2} (q^{-4m^2} - Z2 * S_{2m}(L) + Z2^2) / Z2
    // with S_t = r1^t + r2^t as polynomials in L.
    int tmax = m2;
    T qminv = T(1) / qm;
    std::vector<std::vector<T>> S(tmax + 1);
    S[0] = {T(2)};
    S[1] = {T(0), qminv}; // L / q^m
    for (int t = 2; t <= tmax; ++t) {
        // S_t = (L/q^m) S_{t-1} - q^{-2m} S_{t-2}
        std::vector<T> r(t + 1, T(0));
        for (size_t d = 0; d < S[t - 1].size(); ++d) r[d + 1] += qminv * S[t - 1][d];
        for (size_t d = 0; d < S[t - 2].size(); ++d) r[d] -= qminv * qminv * S[t - 2][d];
        S[t] = std::move(r);
    }
    T qm2(1);
    for (int i = 0; i < m2; ++i) qm2 = qm2 * qm; // q^{2m^2} = (q^m)^{2m}
    std::vector<T> res(m2 + 1, T(0));
    T c0 = T(1);
    for (int i = 0; i < m2; ++i) c0 = c0 * qminv * qminv; // q^{-4m^2}... careful: (q^{-2m})^{2m}
    res[0] = c0 + Z2 * Z2;
    for (size_t d = 0; d < S[tmax].size(); ++d) res[d] -= Z2 * S[tmax][d];
    for (auto &c : res) c = -(qm2 / Z2) * c;
    return res;
}

// univariate gcd over a field (for eigenvalue-collision detection)
template <class T> std::vector<T> upoly_trim(std::vector<T> a) {
    while (!a.empty() && is_zero_value(a.back())) a.pop_back();
    return a;
}
template <class T> std::vector<T> upoly_rem(std::vector<T> a, const std::vector<T> &b) {
    while (a.size() >= b.size() && !a.empty()) {
        T f = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        a = upoly_trim(std::move(a));
    }
    return a;
}
template <class T> std::vector<T> upoly_gcd(std::vector<T> a, std::vector<T> b) {
    a = upoly_trim(std::move(a));
    b = upoly_trim(std::move(b));
    while (!b.empty()) {
        auto r = upoly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        T inv = T(1) / a.back();
        for (auto &c : a) c = c * inv;
    }
    return a;
}

} // namespace eptl
