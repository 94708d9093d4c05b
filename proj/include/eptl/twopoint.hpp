#pragma once

// Module-level machinery over the two-point states: basis discovery, exact
// generator matrices, filtration slices, gluing, generated submodules.

#include "eptl/ymodule.hpp"
#include "eptl/wmodule.hpp"

#include <deque>
#include <functional>

namespace eptl {

template <class T> struct YCtx {
    T beta, alpha_a, alpha_b, alpha_ab, x, y, z;
    std::function<T(const Scalar &)> ev;

    T weight(const YWeight &w) const {
        if (w.zero) return T(0);
        T r(1);
        auto mul_pow = [&](const T &base, int p) {
            T b = p > 0 ? base : T(1) / base;
            for (int i = 0; i < std::abs(p); ++i) r = r * b;
        };
        for (int i = 0; i < w.nb; ++i) r = r * beta;
        for (int i = 0; i < w.naa; ++i) r = r * alpha_a;
        for (int i = 0; i < w.nbb; ++i) r = r * alpha_b;
        for (int i = 0; i < w.nab; ++i) r = r * alpha_ab;
        mul_pow(x, w.xp);
        mul_pow(y, w.yp);
        mul_pow(z, w.zp);
        return r;
    }
};

// symbolic context; xmode uses alpha_ab = z + 1/z, otherwise w + 1/w
inline YCtx<Scalar> symbolic_yctx(bool xmode = false) {
    return {beta_scalar(),
            loop_weight(VX),
            loop_weight(VY),
            xmode ? loop_weight(VZ) : loop_weight(VW),
            Scalar::var(VX),
            Scalar::var(VY),
            Scalar::var(VZ),
            [](const Scalar &s) { return s; }};
}
inline YCtx<Scalar> symbolic_yctx_vals(const Scalar &x, const Scalar &y, const Scalar &z,
                                       const Scalar &w, bool xmode = false) {
    return {beta_scalar(), x + x.inv(), y + y.inv(), xmode ? z + z.inv() : w + w.inv(),
            x,             y,           z,           [](const Scalar &s) { return s; }};
}
template <class T> YCtx<T> eval_yctx(const ParamSpec<T> &ps, bool xmode = false) {
    return {ps(beta_scalar()),
            ps(loop_weight(VX)),
            ps(loop_weight(VY)),
            ps(xmode ? loop_weight(VZ) : loop_weight(VW)),
            ps(Scalar::var(VX)),
            ps(Scalar::var(VY)),
            ps(Scalar::var(VZ)),
            [ps](const Scalar &s) { return ps(s); }};
}

struct LevelOutOfRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class T> class YModule {
public:
    YCfg cfg;
    YCtx<T> ctx;
    YStateOps ops;
    std::vector<YState> basis;
    std::map<YState, int> index;

    YModule(YCfg c, YCtx<T> cx) : cfg(c), ctx(std::move(cx)), ops(cfg) { discover(); }

    int dim() const { return (int)basis.size(); }

    void discover() {
        YState seed = u_state(cfg);
        std::map<YState, bool> seen;
        std::deque<YState> queue;
        seen[seed] = true;
        queue.push_back(seed);
        while (!queue.empty()) {
            YState s = queue.front();
            queue.pop_front();
            for (int g = -2; g <= cfg.N; ++g) {
                if (g == 0) continue;
                YState t = s;
                YWeight w;
                if (g == GEN_OMEGA)
                    w = ops.act_omega(t, +1);
                else if (g == GEN_OMEGA_INV)
                    w = ops.act_omega(t, -1);
                else
                    w = ops.act_e(t, g);
                if (w.zero) continue;
                if (!seen.count(t)) {
                    seen[t] = true;
                    queue.push_back(t);
                }
            }
        }
        for (auto &[s, _] : seen) basis.push_back(s);
        std::sort(basis.begin(), basis.end(), [](const YState &a, const YState &b) {
            if (a.m2() != b.m2()) return a.m2() < b.m2();
            return a < b;
        });
        for (int i = 0; i < dim(); ++i) index[basis[i]] = i;
    }

    Matrix<T> gen_matrix(int g) const {
        Matrix<T> m(dim(), dim());
        for (int col = 0; col < dim(); ++col) {
            YState s = basis[col];
            YWeight w;
            if (g == GEN_OMEGA)
                w = ops.act_omega(s, +1);
            else if (g == GEN_OMEGA_INV)
                w = ops.act_omega(s, -1);
            else
                w = ops.act_e(s, g);
            if (w.zero) continue;
            auto it = index.find(s);
            if (it == index.end()) throw std::runtime_error("YModule: action left basis");
            m(it->second, col) += ctx.weight(w);
        }
        return m;
    }
    Matrix<T> word_matrix(const GeneratorWord &word) const {
        Matrix<T> m = Matrix<T>::identity(dim());
        for (auto it = word.rbegin(); it != word.rend(); ++it) m = gen_matrix(*it) * m;
        return m;
    }

    template <class AD>
    void apply_diagram(const AD &d, int col, std::vector<std::pair<T, int>> &out) const {
        YState s = basis[col];
        YWeight w = ops.apply_diagram(d, s);
        if (w.zero) return;
        auto it = index.find(s);
        if (it == index.end()) throw std::runtime_error("YModule: diagram left basis");
        out.push_back({ctx.weight(w), it->second});
    }

    // act on a coordinate vector
    std::vector<T> act_vec(int g, const std::vector<T> &v) const {
        std::vector<T> r(dim(), T(0));
        for (int col = 0; col < dim(); ++col) {
            if (is_zero_value(v[col])) continue;
            YState s = basis[col];
            YWeight w;
            if (g == GEN_OMEGA)
                w = ops.act_omega(s, +1);
            else if (g == GEN_OMEGA_INV)
                w = ops.act_omega(s, -1);
            else
                w = ops.act_e(s, g);
            if (w.zero) continue;
            r[index.at(s)] += ctx.weight(w) * v[col];
        }
        return r;
    }

    // filtration slice: indices of basis states with m2 == level (quotient
    // M^{(level)}) or m2 <= level (submodule)
    std::vector<int> level_indices(int m2) const {
        std::vector<int> out;
        for (int i = 0; i < dim(); ++i)
            if (basis[i].m2() == m2) out.push_back(i);
        return out;
    }
    std::vector<int> sub_indices(int m2max) const {
        std::vector<int> out;
        for (int i = 0; i < dim(); ++i)
            if (basis[i].m2() <= m2max) out.push_back(i);
        return out;
    }
    // induced matrix on the quotient M^{(m2)} = Y^{(m2)}/Y^{(m2-2)}
    Matrix<T> quotient_gen_matrix(int g, int m2) const {
        auto idx = level_indices(m2);
        std::map<int, int> pos;
        for (int i = 0; i < (int)idx.size(); ++i) pos[idx[i]] = i;
        Matrix<T> m((int)idx.size(), (int)idx.size());
        for (int c = 0; c < (int)idx.size(); ++c) {
            YState s = basis[idx[c]];
            YWeight w;
            if (g == GEN_OMEGA)
                w = ops.act_omega(s, +1);
            else if (g == GEN_OMEGA_INV)
                w = ops.act_omega(s, -1);
            else
                w = ops.act_e(s, g);
            if (w.zero) continue;
            if (s.m2() > m2) throw std::runtime_error("level increased under action");
            if (s.m2() < m2) continue;
            m(pos.at(index.at(s)), c) += ctx.weight(w);
        }
        return m;
    }
    Matrix<T> quotient_word_matrix(const GeneratorWord &word, int m2) const {
        auto idx = level_indices(m2);
        Matrix<T> m = Matrix<T>::identity((int)idx.size());
        for (auto it = word.rbegin(); it != word.rend(); ++it) m = quotient_gen_matrix(*it, m2) * m;
        return m;
    }
    // braid matrix on the quotient slice (uses the full diagrams)
    Matrix<T> quotient_braid_matrix(bool bar) const; // defined where needed

    // glue a pair of one-point states into coordinates
    std::vector<T> glue_vec(const LinkState1 &u, const LinkState1 &v) const {
        YState s = glue_states(u, v);
        YWeight w;
        ops.canonicalize(s, w);
        std::vector<T> r(dim(), T(0));
        if (w.zero) return r;
        r[index.at(s)] = ctx.weight(w);
        return r;
    }

    // closure of seed vectors under the generators, by iterated action
    Span<T> generated_submodule(const std::vector<std::vector<T>> &seeds) const {
        Span<T> span(dim());
        std::deque<std::vector<T>> queue;
        for (auto &s : seeds)
            if (span.add(s)) queue.push_back(s);
        while (!queue.empty()) {
            auto v = queue.front();
            queue.pop_front();
            for (int g : generator_list()) {
                auto img = act_vec(g, v);
                if (span.add(img)) queue.push_back(img);
            }
        }
        return span;
    }
    std::vector<int> generator_list() const {
        std::vector<int> gs;
        for (int j = 1; j <= cfg.N; ++j) gs.push_back(j);
        gs.push_back(GEN_OMEGA);
        gs.push_back(GEN_OMEGA_INV);
        return gs;
    }
};

// dimension formulas (eq:Y.dimensions and the X formula)
inline long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}
inline long dim_B(int N, int twok) {
    if ((N - twok) % 2 || twok < 0 || twok > N) return 0;
    return binom(N, (N - twok) / 2);
}
inline long dim_Y_formula(int N, bool zunital_or_kl_equal) {
    if (N % 2 == 0) {
        long s = zunital_or_kl_equal ? dim_B(N, 0) : 0;
        for (int m2 = 2; m2 <= N; m2 += 2) s += m2 * dim_B(N, m2);
        return s;
    }
    long s = 0;
    for (int m2 = 1; m2 <= N; m2 += 2) s += m2 * dim_B(N, m2);
    return s;
}
inline long dim_X_formula(int N, int twok, int twol) {
    int d2 = std::abs(twok - twol);
    long s = dim_B(N, d2);
    for (int m2 = d2 + 2; m2 <= N; m2 += 2) s += m2 * dim_B(N, m2);
    return s;
}

} // namespace eptl
