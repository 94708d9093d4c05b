#pragma once

// Standard modules W_{k,z}(N): action matrices for the generators, Gram form,
// radical bases through the insertion algorithm, and quotient modules with
// the crossing-number rewrite.

#include "eptl/link_state1.hpp"
#include "eptl/matrix.hpp"
#include "eptl/tl_element.hpp"
#include "eptl/genword.hpp"

#include <map>

namespace eptl {

// ---- elementary moves on one-point states ----
namespace ls1 {

// e_j, 1 <= j <= N (j = N caps across the dashed line)
inline Weight act_e(LinkState1 &s, int j) {
    int N = s.N;
    long p1 = j, p2 = j + 1; // for j = N this is position N+1 = node 1 shifted
    Weight w = join_at(s, p1, p2);
    if (w.zero) return w;
    if (j < N)
        s.arcs.push_back({j, j + 1});
    else
        s.arcs.push_back({N, N + 1});
    s.sort_canonical();
    return w;
}

// dir=+1: Omega (content j -> j-1); dir=-1: Omega^{-1}
inline Weight act_omega(LinkState1 &s, int dir) {
    int N = s.N;
    Weight w;
    LinkState1 r;
    r.N = N;
    int d = dir > 0 ? -1 : +1;
    for (auto [u, v] : s.arcs) {
        u += d;
        v += d;
        if (u < 1) {
            u += N;
            v += N;
        }
        if (u > N) {
            u -= N;
            v -= N;
        }
        r.arcs.push_back({u, v});
    }
    for (int def : s.defects) {
        int nd = def + d;
        if (nd < 1) {
            nd += N;
            w.zpow += 1; // clockwise across the dash
        }
        if (nd > N) {
            nd -= N;
            w.zpow -= 1;
        }
        r.defects.push_back(nd);
    }
    r.sort_canonical();
    s = r;
    return w;
}

// apply a rectangular TL pairing to nodes offset+1 .. offset+n of the state
inline Weight apply_pairing(LinkState1 &s, const PlanarPairing &d, int offset) {
    int n = d.strands();
    Weight w;
    // bottom caps, innermost first
    std::vector<std::pair<int, int>> caps;
    for (int c = 1; c <= n; ++c) {
        int q = d.p[PlanarPairing::bot(c, n)];
        if (q < n && q > c - 1) caps.push_back({c, q + 1});
    }
    std::sort(caps.begin(), caps.end(),
              [](auto &a, auto &b) { return a.second - a.first < b.second - b.first; });
    for (auto &[c1, c2] : caps) {
        Weight jw = join_at(s, offset + c1, offset + c2);
        if (jw.zero) return jw;
        w.zpow += jw.zpow;
        w.nbeta += jw.nbeta;
        w.nalpha += jw.nalpha;
    }
    // pass-throughs: relabel bottom col -> top col
    std::map<int, int> relabel;
    for (int c = 1; c <= n; ++c) {
        int q = d.p[PlanarPairing::bot(c, n)];
        if (q >= n) relabel[offset + c] = offset + (2 * n - q);
    }
    bool moves = false;
    for (auto &[a, b] : relabel)
        if (a != b) moves = true;
    if (moves) {
        LinkState1 r;
        r.N = s.N;
        auto map_node = [&](int node) {
            auto it = relabel.find(node);
            return it == relabel.end() ? node : it->second;
        };
        for (auto [u, v] : s.arcs) {
            bool crossing = v > s.N;
            int n1 = u, n2 = crossing ? v - s.N : v;
            int m1 = map_node(n1), m2 = map_node(n2);
            if (!crossing) {
                if (m1 > m2) std::swap(m1, m2);
                r.arcs.push_back({m1, m2});
            } else {
                if (m1 < m2) std::swap(m1, m2); // store (larger, smaller+N)
                r.arcs.push_back({m1, m2 + s.N});
            }
        }
        for (int def : s.defects) r.defects.push_back(map_node(def));
        r.sort_canonical();
        s = r;
    }
    // top arcs
    for (int c = 1; c <= n; ++c) {
        int q = d.p[PlanarPairing::top(c, n)];
        if (q >= n) {
            int c2 = 2 * n - q;
            if (c2 > c) s.arcs.push_back({offset + c, offset + c2});
        }
    }
    s.sort_canonical();
    return w;
}

// the state v_k(N): all arcs crossing the dash, defects in the middle
inline LinkState1 v_state(int N, int twok) {
    LinkState1 s;
    s.N = N;
    int narcs = (N - twok) / 2;
    for (int j = 1; j <= narcs; ++j) s.arcs.push_back({N + 1 - j, j + N});
    for (int i = 0; i < twok; ++i) s.defects.push_back(narcs + 1 + i);
    s.sort_canonical();
    return s;
}

} // namespace ls1

// evaluated weights
template <class T> struct WCtx {
    T beta, alpha, z;
    std::function<T(const Scalar &)> ev; // evaluates q-coefficients (JW etc.)
    T weight(const ls1::Weight &w) const {
        if (w.zero) return T(0);
        T r(1);
        for (int i = 0; i < w.nbeta; ++i) r = r * beta;
        for (int i = 0; i < w.nalpha; ++i) r = r * alpha;
        int zp = w.zpow;
        T zf = zp > 0 ? z : T(1) / z;
        for (int i = 0; i < std::abs(zp); ++i) r = r * zf;
        return r;
    }
};

inline WCtx<Scalar> symbolic_wctx() {
    return {beta_scalar(), loop_weight(VZ), Scalar::var(VZ), [](const Scalar &s) { return s; }};
}
// z specialized to a Scalar expression (e.g. eps * q^{sigma l})
inline WCtx<Scalar> symbolic_wctx_z(const Scalar &z) {
    return {beta_scalar(), z + z.inv(), z, [](const Scalar &s) { return s; }};
}
template <class T> WCtx<T> eval_wctx(const ParamSpec<T> &ps) {
    return {ps(beta_scalar()), ps(loop_weight(VZ)), ps(Scalar::var(VZ)),
            [ps](const Scalar &s) { return ps(s); }};
}

// one term of a formal linear combination
template <class T> using LinComb1 = std::vector<std::pair<T, LinkState1>>;

template <class T> class WModule {
public:
    int N, twok;
    WCtx<T> ctx;
    std::vector<LinkState1> basis;
    std::map<LinkState1, int> index;

    WModule(int N_, int twok_, WCtx<T> c) : N(N_), twok(twok_), ctx(std::move(c)) {
        basis = ls1::enumerate_basis(N, twok);
        for (int i = 0; i < (int)basis.size(); ++i) index[basis[i]] = i;
    }
    int dim() const { return (int)basis.size(); }

    // matrix of a single generator; +j = e_j, GEN_OMEGA / GEN_OMEGA_INV
    Matrix<T> gen_matrix(int g) const {
        Matrix<T> m(dim(), dim());
        for (int col = 0; col < dim(); ++col) {
            LinkState1 s = basis[col];
            ls1::Weight w;
            if (g == GEN_OMEGA)
                w = ls1::act_omega(s, +1);
            else if (g == GEN_OMEGA_INV)
                w = ls1::act_omega(s, -1);
            else
                w = ls1::act_e(s, g);
            if (w.zero) continue;
            auto it = index.find(s);
            if (it == index.end()) throw std::runtime_error("WModule: action left basis");
            m(it->second, col) += ctx.weight(w);
        }
        return m;
    }
    Matrix<T> word_matrix(const GeneratorWord &word) const {
        Matrix<T> m = Matrix<T>::identity(dim());
        // word w = g1 g2 ... gk acts as g1 . (g2 . ( ... v)): rightmost first
        for (auto it = word.rbegin(); it != word.rend(); ++it) m = gen_matrix(*it) * m;
        return m;
    }

    // Gram form: reflect u, glue onto v, weigh loops and defect windings
    T gram(const LinkState1 &u, const LinkState1 &v) const {
        LinkState1 ru = reflect(u);
        int n = N;
        std::vector<int> vis(n + 1, 0);
        T weight(1);
        auto zpow = [&](long p) {
            T zf = p > 0 ? ctx.z : T(1) / ctx.z;
            T r(1);
            for (long i = 0; i < std::labs(p); ++i) r = r * zf;
            return r;
        };
        // paths starting at the defects of v, alternating ru / v curves
        for (int dv : v.defects) {
            long pos = dv;
            bool on_u = true;
            vis[dv] = 1;
            while (true) {
                const LinkState1 &side = on_u ? ru : v;
                ls1::Content c = ls1::content_at(side, pos);
                if (c.defect) {
                    if (!on_u) return T(0); // v-defect paired with v-defect
                    weight = weight * zpow(-ls1::gaps_between(n, dv, pos));
                    break;
                }
                pos = c.partner;
                vis[ls1::node_of(n, pos)] = 1;
                on_u = !on_u;
            }
        }
        for (int du : ru.defects)
            if (!vis[du]) return T(0); // would pair ru-defect with ru-defect
        // closed loops on the remaining nodes
        for (int start = 1; start <= n; ++start) {
            if (vis[start]) continue;
            long pos = start;
            bool on_v = true;
            while (true) {
                vis[ls1::node_of(n, pos)] = 1;
                const LinkState1 &side = on_v ? v : ru;
                ls1::Content c = ls1::content_at(side, pos);
                pos = c.partner;
                on_v = !on_v;
                if (ls1::node_of(n, pos) == start && on_v) break;
            }
            long wind = ls1::gaps_between(n, start, pos);
            weight = weight * (wind != 0 ? ctx.alpha : ctx.beta);
        }
        return weight;
    }
    Matrix<T> gram_matrix() const {
        Matrix<T> g(dim(), dim());
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < dim(); ++j) g(i, j) = gram(basis[i], basis[j]);
        return g;
    }

    // apply an annular diagram (from the braid-row expansion) to basis[col]
    template <class AD>
    void apply_diagram(const AD &d, int col, std::vector<std::pair<T, int>> &out) const {
        LinkState1 s = basis[col];
        ls1::Weight acc;
        auto fold = [&](const ls1::Weight &w) {
            acc.zero |= w.zero;
            acc.zpow += w.zpow;
            acc.nbeta += w.nbeta;
            acc.nalpha += w.nalpha;
        };
        for (auto &[p1, p2] : d.inner_caps) {
            fold(ls1::join_at(s, p1, p2));
            if (acc.zero) return;
        }
        std::map<int, long> P(d.pass.begin(), d.pass.end());
        fold(ls1::relabel_nodes(s, P));
        for (auto &[q1, q2] : d.outer_caps) ls1::add_arc_z(s, q1, q2);
        s.sort_canonical();
        auto it = index.find(s);
        if (it == index.end()) throw std::runtime_error("apply_diagram: left basis");
        out.push_back({ctx.weight(acc), it->second});
    }

    static LinkState1 reflect(const LinkState1 &s) {
        LinkState1 r;
        r.N = s.N;
        int N = s.N;
        for (auto [u, v] : s.arcs) {
            if (v <= N) {
                r.arcs.push_back({N + 1 - v, N + 1 - u});
            } else {
                int i = v - N, j = u; // nodes i < j, crossing
                int i2 = N + 1 - j, j2 = N + 1 - i;
                r.arcs.push_back({j2, i2 + N});
            }
        }
        for (int d : s.defects) r.defects.push_back(N + 1 - d);
        r.sort_canonical();
        return r;
    }
};

// ---- radical and quotient ----

namespace ls1 {

// drop all curves entirely supported on `slots`, then graft the pattern's
// curves (a state on 2L nodes) onto those slots in order
inline LinkState1 replace_slots(const LinkState1 &host, const std::vector<int> &slots,
                                const LinkState1 &pat) {
    int N = host.N, L2 = (int)slots.size();
    auto in_slots = [&](int node) {
        return std::binary_search(slots.begin(), slots.end(), node);
    };
    LinkState1 r;
    r.N = N;
    for (auto [u, v] : host.arcs) {
        int n2 = v > N ? v - N : v;
        if (in_slots(u) && in_slots(n2)) continue;
        if (in_slots(u) || in_slots(n2)) throw std::runtime_error("replace_slots: arc leaves slots");
        r.arcs.push_back({u, v});
    }
    for (int d : host.defects)
        if (!in_slots(d)) r.defects.push_back(d);
    for (auto [u, v] : pat.arcs) {
        if (v <= L2) {
            r.arcs.push_back({slots[u - 1], slots[v - 1]});
        } else {
            int i = v - L2, j = u; // crossing arc {i,j}
            r.arcs.push_back({slots[j - 1], slots[i - 1] + N});
        }
    }
    for (int d : pat.defects) r.defects.push_back(slots[d - 1]);
    r.sort_canonical();
    return r;
}

} // namespace ls1

// expand a TL element acting on a one-point state
template <class T>
LinComb1<T> apply_tl(const TLElement &el, const LinkState1 &s, int offset, const WCtx<T> &ctx) {
    LinComb1<T> out;
    for (auto &[d, c] : el.terms) {
        LinkState1 t = s;
        ls1::Weight w = ls1::apply_pairing(t, d, offset);
        if (w.zero) continue;
        T coeff = ctx.ev(c) * ctx.weight(w);
        if (is_zero_value(coeff)) continue;
        out.push_back({coeff, t});
    }
    return out;
}

// basis of the radical R_{k, eps q^{sigma l}}(N) inside W, as coordinate
// vectors: one per state of B_l(N), obtained by replacing its 2l defects by
// w_k(2l) = P_{2l} v_k(2l)
template <class T>
std::vector<std::vector<T>> radical_vectors(const WModule<T> &W, int ell2) {
    int twok = W.twok;
    if (!(twok < ell2 && ell2 <= W.N && (ell2 - twok) % 2 == 0))
        throw InvalidSector("radical_vectors: need k < l <= N/2, l-k integer");
    LinkState1 vk = ls1::v_state(ell2, twok);
    auto pattern = apply_tl(jones_wenzl(ell2), vk, 0, W.ctx);
    auto hosts = ls1::enumerate_basis(W.N, ell2);
    std::vector<std::vector<T>> out;
    for (auto &h : hosts) {
        std::vector<T> vec(W.dim(), T(0));
        for (auto &[c, pat] : pattern) {
            LinkState1 s = ls1::replace_slots(h, h.defects, pat);
            auto it = W.index.find(s);
            if (it == W.index.end()) throw std::runtime_error("radical: state not in basis");
            vec[it->second] += c;
        }
        out.push_back(std::move(vec));
    }
    return out;
}

// Quotient module Q_{k, eps q^{sigma l}}(N): basis = states with r < l - k,
// action rewritten through v_k(2l) == (id - P_{2l}) v_k(2l).
template <class T> class WQuotientModule {
public:
    int N, twok, ell2, rq;
    WCtx<T> ctx;
    std::vector<LinkState1> basis;
    std::map<LinkState1, int> index;
    LinComb1<T> tmpl; // terms of (id - P_{2l}) v_k(2l), all with r < rq

    WQuotientModule(const WModule<T> &W, int ell2_) : N(W.N), twok(W.twok), ell2(ell2_), ctx(W.ctx) {
        rq = (ell2 - twok) / 2;
        if (rq <= 0) throw InvalidSector("quotient: need l > k");
        for (auto &s : W.basis)
            if (s.crossing_number() < rq) basis.push_back(s);
        for (int i = 0; i < (int)basis.size(); ++i) index[basis[i]] = i;
        LinkState1 vk = ls1::v_state(ell2, twok);
        tmpl.push_back({T(1), vk});
        for (auto &[c, st] : apply_tl(jones_wenzl(ell2), vk, 0, ctx)) tmpl.push_back({-c, st});
        // combine duplicate states
        LinComb1<T> comb;
        for (auto &[c, st] : tmpl) {
            bool found = false;
            for (auto &[c2, st2] : comb)
                if (st2 == st) {
                    c2 += c;
                    found = true;
                }
            if (!found) comb.push_back({c, st});
        }
        tmpl.clear();
        for (auto &[c, st] : comb)
            if (!is_zero_value(c)) {
                if (st.crossing_number() >= rq)
                    throw std::runtime_error("quotient template has high crossing term");
                tmpl.push_back({c, st});
            }
    }
    int dim() const { return (int)basis.size(); }

    void rewrite(const T &coeff, const LinkState1 &s, std::vector<T> &acc) const {
        if (s.crossing_number() < rq) {
            auto it = index.find(s);
            if (it == index.end()) throw std::runtime_error("quotient rewrite: missing state");
            acc[it->second] += coeff;
            return;
        }
        // innermost rq crossing arcs: the ones with the largest u
        std::vector<std::pair<int, int>> crossers;
        for (auto &a : s.arcs)
            if (a.second > N) crossers.push_back(a);
        std::sort(crossers.begin(), crossers.end(),
                  [](auto &a, auto &b) { return a.first > b.first; });
        crossers.resize(rq);
        std::vector<int> slots;
        for (auto &[u, v] : crossers) {
            slots.push_back(u);
            slots.push_back(v - N);
        }
        for (int d : s.defects) slots.push_back(d);
        std::sort(slots.begin(), slots.end());
        LinkState1 stripped = s; // replace_slots removes the slot curves
        for (auto &[c, pat] : tmpl) {
            LinkState1 t = ls1::replace_slots(stripped, slots, pat);
            rewrite(coeff * c, t, acc);
        }
    }

    Matrix<T> gen_matrix(int g) const {
        Matrix<T> m(dim(), dim());
        for (int col = 0; col < dim(); ++col) {
            LinkState1 s = basis[col];
            ls1::Weight w;
            if (g == GEN_OMEGA)
                w = ls1::act_omega(s, +1);
            else if (g == GEN_OMEGA_INV)
                w = ls1::act_omega(s, -1);
            else
                w = ls1::act_e(s, g);
            if (w.zero) continue;
            std::vector<T> acc(dim(), T(0));
            rewrite(ctx.weight(w), s, acc);
            for (int row = 0; row < dim(); ++row)
                if (!is_zero_value(acc[row])) m(row, col) += acc[row];
        }
        return m;
    }
};

} // namespace eptl
