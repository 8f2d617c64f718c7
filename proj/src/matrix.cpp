#include "gwa/matrix.hpp"

#include <algorithm>

namespace gwa {

void SparseMatrix::add(int r, int c, const FieldElement& v) {
    if (v.is_zero()) return;
    auto& row = data_[static_cast<size_t>(r)];
    auto it = row.find(c);
    if (it == row.end()) {
        row.emplace(c, v);
    } else {
        it->second += v;
        if (it->second.is_zero()) row.erase(it);
    }
}

int SparseMatrix::eliminate(std::vector<std::map<int, FieldElement>> work) {
    int rank = 0;
    std::vector<bool> used(work.size(), false);
    for (;;) {
        // Pivot: among unused nonempty rows, prefer few entries, then small height.
        int best = -1;
        long best_nnz = 0, best_h = 0;
        for (size_t r = 0; r < work.size(); ++r) {
            if (used[r] || work[r].empty()) continue;
            long nnz = static_cast<long>(work[r].size());
            long h = work[r].begin()->second.height();
            if (best < 0 || nnz < best_nnz || (nnz == best_nnz && h < best_h)) {
                best = static_cast<int>(r);
                best_nnz = nnz;
                best_h = h;
            }
        }
        if (best < 0) break;
        used[static_cast<size_t>(best)] = true;
        ++rank;
        const auto piv_row = work[static_cast<size_t>(best)];
        int piv_col = piv_row.begin()->first;
        FieldElement piv_inv = piv_row.begin()->second.inverse();
        for (size_t r = 0; r < work.size(); ++r) {
            if (used[r] || work[r].empty()) continue;
            auto it = work[r].find(piv_col);
            if (it == work[r].end()) continue;
            FieldElement factor = it->second * piv_inv;
            for (const auto& [c, v] : piv_row) {
                auto jt = work[r].find(c);
                if (jt == work[r].end()) {
                    FieldElement nv = -(factor * v);
                    if (!nv.is_zero()) work[r].emplace(c, nv);
                } else {
                    jt->second -= factor * v;
                    if (jt->second.is_zero()) work[r].erase(jt);
                }
            }
        }
    }
    return rank;
}

int SparseMatrix::rank() const { return eliminate(data_); }

int SparseMatrix::rank_of_rows(const std::vector<bool>& keep) const {
    std::vector<std::map<int, FieldElement>> work;
    for (size_t r = 0; r < data_.size(); ++r)
        if (keep[r]) work.push_back(data_[r]);
    return eliminate(std::move(work));
}

}  // namespace gwa
