#include "gwa/smith.hpp"

namespace gwa {

namespace {

struct XGcd {
    Polynomial g, s, t;  // s*a + t*b = g, g monic
};

XGcd xgcd(const Polynomial& a, const Polynomial& b) {
    Polynomial r0 = a, r1 = b;
    Polynomial s0(1L), s1, t0, t1(1L);
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divmod(r1);
        Polynomial s2 = s0 - q * s1;
        Polynomial t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (r0.is_zero()) return {Polynomial(), Polynomial(), Polynomial()};
    FieldElement inv = r0.leading().inverse();
    return {r0 * inv, s0 * inv, t0 * inv};
}

struct ColumnView {
    TPolyMatrix* m;
    int rows() const { return m->rows; }
    Polynomial& at(int r, int c) { return m->at(r, c); }
};

// Unimodular column reduction of M, mirrored on the tracker (same column
// count).  Retired pivot columns are returned with their pivot rows.
std::vector<std::pair<int, int>> column_reduce(TPolyMatrix& m, TPolyMatrix* tracker) {
    std::vector<bool> retired(static_cast<size_t>(m.cols), false);
    std::vector<std::pair<int, int>> pivots;  // (row, col)
    auto combine = [&](int r, int cp, int cc) {
        // Replace columns cp, cc by a Bezout pair so that entry (r, cc) dies.
        XGcd x = xgcd(m.at(r, cp), m.at(r, cc));
        Polynomial u = m.at(r, cp).exact_div(x.g);
        Polynomial v = m.at(r, cc).exact_div(x.g);
        auto apply = [&](TPolyMatrix& mat) {
            for (int i = 0; i < mat.rows; ++i) {
                Polynomial a = mat.at(i, cp), b = mat.at(i, cc);
                mat.at(i, cp) = x.s * a + x.t * b;
                mat.at(i, cc) = u * b - v * a;
            }
        };
        apply(m);
        if (tracker) apply(*tracker);
    };
    for (int r = 0; r < m.rows; ++r) {
        int pivot = -1;
        for (int c = 0; c < m.cols; ++c) {
            if (retired[static_cast<size_t>(c)] || m.at(r, c).is_zero()) continue;
            if (pivot < 0) {
                pivot = c;
            } else {
                combine(r, pivot, c);
            }
        }
        if (pivot >= 0) {
            retired[static_cast<size_t>(pivot)] = true;
            pivots.push_back({r, pivot});
        }
    }
    return pivots;
}

// Columns of m that vanish identically.
std::vector<int> zero_columns(const TPolyMatrix& m) {
    std::vector<int> out;
    for (int c = 0; c < m.cols; ++c) {
        bool zero = true;
        for (int r = 0; r < m.rows && zero; ++r) zero = m.at(r, c).is_zero();
        if (zero) out.push_back(c);
    }
    return out;
}

TPolyMatrix identity_matrix(int n) {
    TPolyMatrix id;
    id.rows = id.cols = n;
    id.entries.assign(static_cast<size_t>(n) * n, Polynomial());
    for (int i = 0; i < n; ++i) id.at(i, i) = Polynomial(1L);
    return id;
}

// Basis of ker over k[t] as columns of an m.rows x k matrix.
TPolyMatrix kernel_basis(TPolyMatrix m) {
    int cols = m.cols;
    TPolyMatrix tracker = identity_matrix(cols);
    column_reduce(m, &tracker);
    std::vector<int> zc = zero_columns(m);
    TPolyMatrix k;
    k.rows = cols;
    k.cols = static_cast<int>(zc.size());
    k.entries.assign(static_cast<size_t>(k.rows) * k.cols, Polynomial());
    for (int j = 0; j < k.cols; ++j)
        for (int i = 0; i < k.rows; ++i) k.at(i, j) = tracker.at(i, zc[static_cast<size_t>(j)]);
    return k;
}

// Solve K X = B for X with K of full column rank; every division is exact
// because the unique fraction-field solution lies in k[t].
TPolyMatrix solve_in_basis(TPolyMatrix k, TPolyMatrix b) {
    auto pivots = column_reduce(k, nullptr);  // k becomes column-echelon up to order
    // After reduction the retired columns have echelon pivots; X is recovered
    // against the reduced K', which presents the same column span.
    TPolyMatrix x;
    x.rows = k.cols;
    x.cols = b.cols;
    x.entries.assign(static_cast<size_t>(x.rows) * x.cols, Polynomial());
    for (const auto& [pr, pc] : pivots) {
        for (int j = 0; j < b.cols; ++j) {
            Polynomial coef = b.at(pr, j).exact_div(k.at(pr, pc));
            x.at(pc, j) = coef;
            if (coef.is_zero()) continue;
            for (int i = 0; i < b.rows; ++i) b.at(i, j) -= coef * k.at(i, pc);
        }
    }
    for (int j = 0; j < b.cols; ++j)
        for (int i = 0; i < b.rows; ++i)
            if (!b.at(i, j).is_zero()) throw MathError("image vector outside the kernel");
    return x;
}

}  // namespace

std::vector<Polynomial> invariant_factors(TPolyMatrix m) {
    std::vector<Polynomial> factors;
    int top = 0;
    auto nonzero_min = [&](int from) -> std::pair<int, int> {
        int br = -1, bc = -1, bd = 0;
        for (int r = from; r < m.rows; ++r)
            for (int c = from; c < m.cols; ++c) {
                if (m.at(r, c).is_zero()) continue;
                int d = *m.at(r, c).degree();
                if (br < 0 || d < bd) { br = r; bc = c; bd = d; }
            }
        return {br, bc};
    };
    auto swap_rows = [&](int a, int b) {
        if (a == b) return;
        for (int c = 0; c < m.cols; ++c) std::swap(m.at(a, c), m.at(b, c));
    };
    auto swap_cols = [&](int a, int b) {
        if (a == b) return;
        for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, a), m.at(r, b));
    };
    while (true) {
        auto [pr, pc] = nonzero_min(top);
        if (pr < 0) break;
        swap_rows(top, pr);
        swap_cols(top, pc);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int r = top + 1; r < m.rows; ++r) {
                if (m.at(r, top).is_zero()) continue;
                auto [q, rem] = m.at(r, top).divmod(m.at(top, top));
                for (int c = top; c < m.cols; ++c) m.at(r, c) -= q * m.at(top, c);
                if (!rem.is_zero()) { swap_rows(top, r); clean = false; }
            }
            for (int c = top + 1; c < m.cols; ++c) {
                if (m.at(top, c).is_zero()) continue;
                auto [q, rem] = m.at(top, c).divmod(m.at(top, top));
                for (int r = top; r < m.rows; ++r) m.at(r, c) -= q * m.at(r, top);
                if (!rem.is_zero()) { swap_cols(top, c); clean = false; }
            }
        }
        // Pivot must divide the remaining block for the divisibility chain.
        bool fixed = false;
        for (int r = top + 1; r < m.rows && !fixed; ++r)
            for (int c = top + 1; c < m.cols && !fixed; ++c) {
                if (m.at(r, c).is_zero()) continue;
                if (!m.at(r, c).divmod(m.at(top, top)).second.is_zero()) {
                    for (int cc = top; cc < m.cols; ++cc) m.at(top, cc) += m.at(r, cc);
                    fixed = true;
                }
            }
        if (fixed) continue;
        factors.push_back(m.at(top, top).monic());
        ++top;
        if (top >= m.rows || top >= m.cols) break;
    }
    return factors;
}

TPolyMatrix t_matrix(const ComplexHandle& handle, int n) {
    const int e = handle.actx().ring.e;
    if (e <= 0) throw MathError("k[t]-matrices need q of finite order");
    std::vector<ChainKey> dom = chain_components(n);
    int out_deg = handle.out_degree(n);
    std::vector<ChainKey> cod = out_deg >= 0 ? chain_components(out_deg) : std::vector<ChainKey>{};

    TPolyMatrix m;
    m.rows = static_cast<int>(cod.size()) * e;
    m.cols = static_cast<int>(dom.size()) * e;
    m.entries.assign(static_cast<size_t>(m.rows) * m.cols, Polynomial());
    if (out_deg < 0) return m;

    for (size_t ci = 0; ci < dom.size(); ++ci) {
        for (int l = 0; l < e; ++l) {
            ChainVector z(handle.dir(), handle.weight(), n);
            z.add(dom[ci], Polynomial::h_power(l));
            ChainVector w = handle.apply(z);
            int col = static_cast<int>(ci) * e + l;
            for (const auto& [key, poly] : w.comps()) {
                auto it = std::find(cod.begin(), cod.end(), key);
                if (it == cod.end()) throw MathError("unexpected target component");
                int row0 = static_cast<int>(it - cod.begin()) * e;
                // split p(h) = sum_{l'} h^{l'} p_{l'}(h^e)
                auto dp = poly.degree();
                std::vector<std::vector<FieldElement>> parts(static_cast<size_t>(e));
                for (int d = 0; d <= (dp ? *dp : -1); ++d) {
                    FieldElement c = poly.coeff(d);
                    if (c.is_zero()) continue;
                    auto& dst = parts[static_cast<size_t>(d % e)];
                    size_t idx = static_cast<size_t>(d / e);
                    if (dst.size() <= idx) dst.resize(idx + 1);
                    dst[idx] = c;
                }
                for (int lp = 0; lp < e; ++lp) {
                    Polynomial val(std::vector<FieldElement>(parts[static_cast<size_t>(lp)]));
                    if (!val.is_zero()) m.at(row0 + lp, col) += val;
                }
            }
        }
    }
    return m;
}

SModuleInvariants smodule_invariants(const AlgebraContext& actx, Direction dir, int weight, int n) {
    if (actx.ring.e <= 0) throw MathError("S-module invariants need q of finite order");
    ComplexHandle handle(actx, dir, weight);
    TPolyMatrix m_out = t_matrix(handle, n);
    TPolyMatrix kernel = kernel_basis(m_out);

    int src = dir == Direction::homology ? n + 1 : n - 1;
    SModuleInvariants inv;
    if (src < 0) {
        inv.free_rank = kernel.cols;
        return inv;
    }
    TPolyMatrix m_in = t_matrix(handle, src);
    TPolyMatrix coords = solve_in_basis(kernel, m_in);
    std::vector<Polynomial> factors = invariant_factors(std::move(coords));
    inv.free_rank = kernel.cols - static_cast<long>(factors.size());
    for (const Polynomial& f : factors) {
        int d = *f.degree();
        if (d > 0) inv.torsion_dims.push_back(d);
    }
    return inv;
}

}  // namespace gwa
