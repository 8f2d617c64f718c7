#include "gwa/engine.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "gwa/smith.hpp"

namespace gwa {

TruncatedBasis TruncatedBasis::make(int n, int D) {
    TruncatedBasis b;
    b.comps = chain_components(n);
    b.D = D;
    return b;
}

SparseMatrix assemble(const ComplexHandle& handle, int n, int D_dom, int D_cod) {
    if (D_cod < D_dom + handle.actx().N)
        throw MathError("codomain window must exceed the domain window by deg a");
    TruncatedBasis dom = TruncatedBasis::make(n, D_dom);
    TruncatedBasis cod = TruncatedBasis::make(handle.out_degree(n), D_cod);
    SparseMatrix m(cod.size(), dom.size());
    for (size_t ci = 0; ci < dom.comps.size(); ++ci) {
        for (int j = 0; j <= D_dom; ++j) {
            ChainVector z(handle.dir(), handle.weight(), n);
            z.add(dom.comps[ci], Polynomial::h_power(j));
            ChainVector w = handle.apply(z);
            for (const auto& [key, poly] : w.comps()) {
                auto it = std::find(cod.comps.begin(), cod.comps.end(), key);
                if (it == cod.comps.end()) throw MathError("unexpected target component");
                int comp_idx = static_cast<int>(it - cod.comps.begin());
                auto dp = poly.degree();
                if (dp && *dp > D_cod) throw MathError("codomain margin violated");
                for (int jj = 0; jj <= (dp ? *dp : -1); ++jj)
                    m.add(cod.index(comp_idx, jj), dom.index(static_cast<int>(ci), j),
                          poly.coeff(jj));
            }
        }
    }
    return m;
}

namespace {

// Degree whose differential produces the boundaries inside degree n.
int boundary_source_degree(const ComplexHandle& handle, int n) {
    return handle.dir() == Direction::homology ? n + 1 : n - 1;
}

}  // namespace

long homology_dim(const ComplexHandle& handle, int n, int D) {
    const int N = handle.actx().N;
    if (D < 2 * N) throw MathError("window too small; need D >= 2 deg a");

    // Cycles with coordinates <= D (kernel of the outgoing differential;
    // the codomain margin keeps the kernel honest).
    TruncatedBasis dom = TruncatedBasis::make(n, D);
    long cycles;
    int out_deg = handle.out_degree(n);
    if (out_deg < 0) {
        cycles = dom.size();
    } else {
        SparseMatrix m_out = assemble(handle, n, D, D + N);
        cycles = dom.size() - m_out.rank();
    }

    // Boundaries generated one margin wider, intersected with the window.
    int src = boundary_source_degree(handle, n);
    long boundaries = 0;
    if (src >= 0) {
        SparseMatrix m_in = assemble(handle, src, D + N, D + 2 * N);
        TruncatedBasis cod = TruncatedBasis::make(n, D + 2 * N);
        std::vector<bool> outside(static_cast<size_t>(cod.size()), false);
        for (size_t ci = 0; ci < cod.comps.size(); ++ci)
            for (int j = D + 1; j <= D + 2 * N; ++j)
                outside[static_cast<size_t>(cod.index(static_cast<int>(ci), j))] = true;
        boundaries = m_in.rank() - m_in.rank_of_rows(outside);
    }
    return cycles - boundaries;
}

DimProfile dim_profile(const ComplexHandle& handle, int n, const std::vector<int>& D_list) {
    if (D_list.empty()) throw MathError("empty truncation list");
    DimProfile prof;
    for (int D : D_list) prof.samples[D] = homology_dim(handle, n, D);

    const int e = handle.actx().ring.e;
    const int step_unit = e > 0 ? e : 4;
    std::vector<std::pair<int, long>> pts(prof.samples.begin(), prof.samples.end());
    if (pts.size() < 3) return prof;

    std::vector<Rat> slopes;
    bool spacing_ok = true;
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        int dD = pts[i + 1].first - pts[i].first;
        if (dD <= 0 || dD % step_unit != 0) spacing_ok = false;
        slopes.push_back(Rat(pts[i + 1].second - pts[i].second) * step_unit / dD);
    }
    if (!spacing_ok) return prof;
    size_t k = slopes.size();
    if (slopes[k - 1] == slopes[k - 2]) {
        prof.slope_per_e = slopes[k - 1];
        prof.stabilized = true;
        if (e == 0 && prof.slope_per_e != 0) prof.stabilized = false;
        long D_last = pts.back().first;
        long v_last = pts.back().second;
        if (e > 0) {
            // Baseline: a shift-0 free summand contributes floor(D/e) + 1.
            Rat c = Rat(v_last) - prof.slope_per_e * (D_last / e + 1);
            if (c.get_den() == 1)
                prof.constant = static_cast<long>(c.get_num().get_si());
            else
                prof.stabilized = false;
        } else {
            prof.constant = v_last;
        }
    }
    return prof;
}

long SModuleInvariants::torsion_total() const {
    long t = 0;
    for (long d : torsion_dims) t += d;
    return t;
}

std::map<TableKey, TableCell> hochschild_table(const AlgebraContext& actx, int r_min, int r_max,
                                               int p_max, const std::vector<int>& D_list,
                                               const std::vector<Direction>& dirs, int jobs,
                                               bool with_snf) {
    std::vector<TableKey> keys;
    for (Direction dir : dirs)
        for (int r = r_min; r <= r_max; ++r)
            for (int p = 0; p <= p_max; ++p) keys.push_back({r, p, dir});

    std::vector<TableCell> cells(keys.size());
    std::atomic<size_t> next{0};
    int n_threads = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
    if (n_threads < 1) n_threads = 1;

    std::exception_ptr err;
    std::mutex err_mutex;
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= keys.size()) return;
            try {
                const TableKey& key = keys[i];
                ComplexHandle handle(actx, key.dir, key.r);
                TableCell cell;
                cell.insufficient_truncation = std::abs(key.r) > D_list.front();
                cell.profile = dim_profile(handle, key.p, D_list);
                if (with_snf && actx.ring.e > 0)
                    cell.snf = smodule_invariants(actx, key.dir, key.r, key.p);
                cells[i] = std::move(cell);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!err) err = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);

    std::map<TableKey, TableCell> out;
    for (size_t i = 0; i < keys.size(); ++i) out.emplace(keys[i], std::move(cells[i]));
    return out;
}

}  // namespace gwa
