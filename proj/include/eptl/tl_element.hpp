#pragma once

// Planar Temperley-Lieb diagrams on a rectangle and their exact linear
// combinations; Jones-Wenzl projectors with the [n]/[n+1] recursion.

#include "eptl/scalar.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace eptl {

// Non-crossing perfect matching of 2n points. Circular indexing: bottom row
// left to right is 0..n-1, top row right to left is n..2n-1 (so top column c,
// 1-based from the left, has index 2n-c).
struct PlanarPairing {
    std::vector<int> p; // partner of each point

    int points() const { return (int)p.size(); }
    int strands() const { return (int)p.size() / 2; }

    static int bot(int col, int n) { return col - 1; }       // col 1..n
    static int top(int col, int n) { return 2 * n - col; }   // col 1..n

    static PlanarPairing id(int n) {
        PlanarPairing d;
        d.p.resize(2 * n);
        for (int c = 1; c <= n; ++c) {
            d.p[bot(c, n)] = top(c, n);
            d.p[top(c, n)] = bot(c, n);
        }
        return d;
    }
    static PlanarPairing e(int j, int n) {
        PlanarPairing d = id(n);
        d.link(bot(j, n), bot(j + 1, n));
        d.link(top(j, n), top(j + 1, n));
        return d;
    }
    void link(int i, int j) {
        p[i] = j;
        p[j] = i;
    }
    bool non_crossing() const {
        int m = points();
        for (int i1 = 0; i1 < m; ++i1) {
            int j1 = p[i1];
            if (j1 < i1) continue;
            for (int i2 = i1 + 1; i2 < j1; ++i2) {
                int j2 = p[i2];
                if (j2 < i2) continue;
                if (j2 > j1) return false; // i1 < i2 < j1 < j2
            }
        }
        return true;
    }
    friend bool operator<(const PlanarPairing &a, const PlanarPairing &b) { return a.p < b.p; }
    friend bool operator==(const PlanarPairing &a, const PlanarPairing &b) { return a.p == b.p; }
};

// all non-crossing perfect matchings of m circular points
inline void enumerate_pairings_rec(std::vector<int> &p, int m, std::vector<PlanarPairing> &out) {
    int first = -1;
    for (int i = 0; i < m; ++i)
        if (p[i] < 0) {
            first = i;
            break;
        }
    if (first < 0) {
        PlanarPairing d;
        d.p = p;
        out.push_back(d);
        return;
    }
    for (int j = first + 1; j < m; ++j) {
        if (p[j] >= 0) continue;
        // pairing (first, j) must enclose an even number of free points
        int inside = 0;
        bool ok = true;
        for (int k = first + 1; k < j; ++k) {
            if (p[k] < 0)
                ++inside;
            else if (p[k] < first || p[k] > j)
                ok = false;
        }
        if (!ok || inside % 2) continue;
        p[first] = j;
        p[j] = first;
        enumerate_pairings_rec(p, m, out);
        p[first] = p[j] = -1;
    }
}
inline std::vector<PlanarPairing> all_pairings(int n) {
    std::vector<int> p(2 * n, -1);
    std::vector<PlanarPairing> out;
    enumerate_pairings_rec(p, 2 * n, out);
    return out;
}

// diagram product: a stacked above b (so (a*b) acting on a state applies b
// first); closed loops give beta each
inline std::pair<PlanarPairing, int> compose_pairings(const PlanarPairing &a, const PlanarPairing &b) {
    int n = a.strands();
    assert(b.strands() == n);
    // combined point set: 0..2n-1 exterior (bottom of b via 0..n-1, top of a
    // via n..2n-1); interior: a-bottom col c glued to b-top col c
    auto trace = [&](int side, int idx, int &oside, int &oidx) {
        // side 0 = in diagram b, 1 = in diagram a; idx = point index
        // walk until exiting at an exterior point
        while (true) {
            if (side == 0) {
                int q = b.p[idx];
                if (q < n) { // bottom of b: exterior
                    oside = 0;
                    oidx = q;
                    return;
                }
                // top of b col c -> a bottom col c
                int c = 2 * n - q;
                side = 1;
                idx = PlanarPairing::bot(c, n);
            } else {
                int q = a.p[idx];
                if (q >= n) { // top of a: exterior
                    oside = 1;
                    oidx = q;
                    return;
                }
                int c = q + 1; // a bottom col c -> b top col c
                side = 0;
                idx = PlanarPairing::top(c, n);
            }
        }
    };
    PlanarPairing r;
    r.p.assign(2 * n, -1);
    for (int i = 0; i < 2 * n; ++i) {
        if (r.p[i] >= 0) continue;
        int side, idx;
        if (i < n) {
            side = 0;
            idx = i;
        } else {
            side = 1;
            idx = i;
        }
        int os, oi;
        // step inward once, then trace
        if (side == 0) {
            trace(0, idx, os, oi);
        } else {
            trace(1, idx, os, oi);
        }
        int j = (os == 0) ? oi : oi;
        r.link(i, j);
    }
    // count loops: interior cycles not reaching the exterior
    int loops = 0;
    std::vector<bool> seen(n, false); // track a-bottom columns visited by exterior paths
    {
        // redo traces marking interior visits
        std::vector<bool> mark(n, false);
        auto trace_mark = [&](int side, int idx) {
            while (true) {
                if (side == 0) {
                    int q = b.p[idx];
                    if (q < n) return;
                    int c = 2 * n - q;
                    mark[c - 1] = true;
                    side = 1;
                    idx = PlanarPairing::bot(c, n);
                } else {
                    int q = a.p[idx];
                    if (q >= n) return;
                    int c = q + 1;
                    mark[c - 1] = true;
                    side = 0;
                    idx = PlanarPairing::top(c, n);
                }
            }
        };
        for (int i = 0; i < n; ++i) trace_mark(0, i);
        for (int i = n; i < 2 * n; ++i) trace_mark(1, i);
        std::vector<bool> loopseen(n, false);
        for (int c0 = 0; c0 < n; ++c0) {
            if (mark[c0] || loopseen[c0]) continue;
            // interior loop through a-bottom column c0+1
            ++loops;
            int side = 1, idx = PlanarPairing::bot(c0 + 1, n);
            while (true) {
                if (side == 1) {
                    int q = a.p[idx];
                    int c = q + 1;
                    if (loopseen[c - 1]) break;
                    loopseen[c - 1] = true;
                    side = 0;
                    idx = PlanarPairing::top(c, n);
                } else {
                    int q = b.p[idx];
                    int c = 2 * n - q;
                    if (loopseen[c - 1]) break;
                    loopseen[c - 1] = true;
                    side = 1;
                    idx = PlanarPairing::bot(c, n);
                }
            }
        }
    }
    (void)seen;
    return {r, loops};
}

struct StrandMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Formal Scalar-linear combination of planar pairings.
class TLElement {
public:
    int n = 0;
    std::map<PlanarPairing, Scalar> terms;

    TLElement() = default;
    explicit TLElement(int strands) : n(strands) {}

    static TLElement id(int n) {
        TLElement r(n);
        r.terms[PlanarPairing::id(n)] = Scalar(1);
        return r;
    }
    static TLElement e(int j, int n) {
        TLElement r(n);
        r.terms[PlanarPairing::e(j, n)] = Scalar(1);
        return r;
    }
    void add(const PlanarPairing &d, const Scalar &c) {
        if (c.is_zero()) return;
        auto it = terms.find(d);
        if (it == terms.end()) {
            terms.emplace(d, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    friend TLElement operator+(const TLElement &a, const TLElement &b) {
        TLElement r = a;
        for (auto &[d, c] : b.terms) r.add(d, c);
        return r;
    }
    friend TLElement operator-(const TLElement &a, const TLElement &b) {
        TLElement r = a;
        for (auto &[d, c] : b.terms) r.add(d, -c);
        return r;
    }
    friend TLElement operator*(const Scalar &c, const TLElement &a) {
        TLElement r(a.n);
        for (auto &[d, s] : a.terms) r.add(d, c * s);
        return r;
    }
    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const TLElement &a, const TLElement &b) {
        return a.n == b.n && a.terms == b.terms;
    }
};

// bilinear planar composition, beta per closed loop
inline TLElement compose(const TLElement &a, const TLElement &b) {
    if (a.n != b.n) throw StrandMismatch("compose: strand counts differ");
    Scalar beta = beta_scalar();
    TLElement r(a.n);
    for (auto &[da, ca] : a.terms)
        for (auto &[db, cb] : b.terms) {
            auto [d, loops] = compose_pairings(da, db);
            r.add(d, ca * cb * beta.pow(loops));
        }
    return r;
}

// juxtaposition: a on columns 1..a.n, b on columns a.n+1..a.n+b.n
inline PlanarPairing juxtapose_pairings(const PlanarPairing &a, const PlanarPairing &b) {
    int n1 = a.strands(), n2 = b.strands(), n = n1 + n2;
    auto mapa = [&](int i) { // a-point -> combined index
        return i < n1 ? i : 2 * n - (2 * n1 - i);
    };
    auto mapb = [&](int i) { return i < n2 ? n1 + i : n1 + 2 * n2 - (2 * n2 - i); };
    // top of b col c (index 2n2-c) -> combined top col n1+c = index 2n-(n1+c)
    auto mapb2 = [&](int i) {
        if (i < n2) return n1 + i;
        int c = 2 * n2 - i;
        return 2 * n - (n1 + c);
    };
    (void)mapb;
    PlanarPairing r;
    r.p.assign(2 * n, -1);
    for (int i = 0; i < 2 * n1; ++i) {
        int ci = mapa(i), cj = mapa(a.p[i]);
        r.p[ci] = cj;
    }
    for (int i = 0; i < 2 * n2; ++i) {
        int ci = mapb2(i), cj = mapb2(b.p[i]);
        r.p[ci] = cj;
    }
    return r;
}
inline TLElement juxtapose(const TLElement &a, const TLElement &b) {
    TLElement r(a.n + b.n);
    for (auto &[da, ca] : a.terms)
        for (auto &[db, cb] : b.terms) r.add(juxtapose_pairings(da, db), ca * cb);
    return r;
}
inline TLElement tensor_id_left(int m, const TLElement &c) { return juxtapose(TLElement::id(m), c); }
inline TLElement tensor_id_right(const TLElement &c, int m) { return juxtapose(c, TLElement::id(m)); }

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline int tl_strand_cap = 12;

// Jones-Wenzl projector P_n, cached.
inline const TLElement &jones_wenzl(int n) {
    if (n < 1) throw std::invalid_argument("jones_wenzl: n >= 1");
    if (n > tl_strand_cap) throw CapExceeded("jones_wenzl: strand cap exceeded");
    static std::map<int, TLElement> cache;
    static std::recursive_mutex mtx;
    std::lock_guard<std::recursive_mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n == 1) return cache.emplace(1, TLElement::id(1)).first->second;
    const TLElement &pn = jones_wenzl(n - 1);
    TLElement plift = tensor_id_right(pn, 1);
    TLElement pep = compose(plift, compose(TLElement::e(n - 1, n), plift));
    TLElement res = plift + (qint(n - 1) / qint(n)) * pep;
    return cache.emplace(n, std::move(res)).first->second;
}

// independent oracle: same recursion, no cache, no shared code path with the
// cached version's lifting order
inline TLElement jones_wenzl_naive(int n) {
    if (n == 1) return TLElement::id(1);
    TLElement prev = tensor_id_right(jones_wenzl_naive(n - 1), 1);
    TLElement mid = compose(compose(prev, TLElement::e(n - 1, n)), prev);
    return prev + (qint(n - 1) / qint(n)) * mid;
}

// reflections for the symmetry checks
inline PlanarPairing reflect_lr(const PlanarPairing &d) {
    int n = d.strands();
    auto mirror = [&](int i) {
        if (i < n) return n - 1 - i;
        int c = 2 * n - i;
        return 2 * n - (n + 1 - c);
    };
    PlanarPairing r;
    r.p.assign(2 * n, -1);
    for (int i = 0; i < 2 * n; ++i) r.p[mirror(i)] = mirror(d.p[i]);
    return r;
}
inline PlanarPairing flip_ud(const PlanarPairing &d) {
    int n = d.strands();
    auto fl = [&](int i) {
        if (i < n) return PlanarPairing::top(i + 1, n);
        return PlanarPairing::bot(2 * n - i, n);
    };
    PlanarPairing r;
    r.p.assign(2 * n, -1);
    for (int i = 0; i < 2 * n; ++i) r.p[fl(i)] = fl(d.p[i]);
    return r;
}

struct JWReport {
    bool idempotent = false;
    bool kills_e = false;      // P_n e_j = e_j P_n = 0, j < n
    bool hook = false;         // e_n P_n e_n = -[n+1]/[n] P_{n-1} e_n
    bool rec_a = false, rec_b = false, rec_c = false, rec_d = false;
    bool mirror = false, flip = false;
    bool all() const {
        return idempotent && kills_e && hook && rec_a && rec_b && rec_c && rec_d && mirror && flip;
    }
};

inline JWReport jw_verify(int n) {
    JWReport rep;
    const TLElement &pn = jones_wenzl(n);
    rep.idempotent = (compose(pn, pn) == pn);
    rep.kills_e = true;
    for (int j = 1; j < n; ++j) {
        if (!compose(pn, TLElement::e(j, n)).is_zero()) rep.kills_e = false;
        if (!compose(TLElement::e(j, n), pn).is_zero()) rep.kills_e = false;
    }
    {
        // in TL_{n+1}
        TLElement p_lift = tensor_id_right(pn, 1);
        TLElement en = TLElement::e(n, n + 1);
        TLElement lhs = compose(en, compose(p_lift, en));
        TLElement pm1 = tensor_id_right(jones_wenzl(n - 1), 2);
        TLElement rhs = (-(qint(n + 1) / qint(n))) * compose(pm1, en);
        rep.hook = (lhs == rhs);
    }
    // the four recursions, all expressed in TL_n
    {
        TLElement idn = TLElement::id(n);
        TLElement p1 = tensor_id_left(1, jones_wenzl(n - 1));
        TLElement p2 = tensor_id_right(jones_wenzl(n - 1), 1);
        TLElement sa = idn, sb = idn, sc = idn, sd = idn;
        for (int j = 1; j <= n - 1; ++j) {
            TLElement w1 = TLElement::e(1, n); // e_1 e_2 ... e_j
            for (int i = 2; i <= j; ++i) w1 = compose(w1, TLElement::e(i, n));
            sa = sa + (qint(n - j) / qint(n)) * w1;
            TLElement w2 = TLElement::e(n - 1, n); // e_{n-1} e_{n-2} ... e_j
            for (int i = n - 2; i >= j; --i) w2 = compose(w2, TLElement::e(i, n));
            sb = sb + (qint(j) / qint(n)) * w2;
            TLElement w3 = TLElement::e(j, n); // e_j e_{j-1} ... e_1
            for (int i = j - 1; i >= 1; --i) w3 = compose(w3, TLElement::e(i, n));
            sc = sc + (qint(n - j) / qint(n)) * w3;
            TLElement w4 = TLElement::e(j, n); // e_j e_{j+1} ... e_{n-1}
            for (int i = j + 1; i <= n - 1; ++i) w4 = compose(w4, TLElement::e(i, n));
            sd = sd + (qint(j) / qint(n)) * w4;
        }
        rep.rec_a = (compose(p1, sa) == pn);
        rep.rec_b = (compose(p2, sb) == pn);
        rep.rec_c = (compose(sc, p1) == pn);
        rep.rec_d = (compose(sd, p2) == pn);
    }
    {
        TLElement refl(n), flip(n);
        for (auto &[d, c] : pn.terms) {
            refl.add(reflect_lr(d), c);
            flip.add(flip_ud(d), c);
        }
        rep.mirror = (refl == pn);
        rep.flip = (flip == pn);
    }
    return rep;
}

} // namespace eptl
