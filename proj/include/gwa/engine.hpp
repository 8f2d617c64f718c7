#pragma once

#include <optional>

#include "gwa/complexes.hpp"
#include "gwa/matrix.hpp"

namespace gwa {

/// Truncated coordinate basis of the weight-r chains of total degree n:
/// one basis chain per (component, h-degree j <= D).
struct TruncatedBasis {
    std::vector<ChainKey> comps;
    int D = 0;

    static TruncatedBasis make(int n, int D);
    int size() const { return static_cast<int>(comps.size()) * (D + 1); }
    int index(int comp_idx, int j) const { return comp_idx * (D + 1) + j; }
};

/// Matrix of the total differential out of degree n, from coordinates of
/// degree <= D_dom into coordinates of degree <= D_cod.  Throws if any image
/// coordinate exceeds D_cod (the margin must absorb every degree shift).
SparseMatrix assemble(const ComplexHandle& handle, int n, int D_dom, int D_cod);

/// Truncated homology dimension at degree n, window D: cycles with
/// coordinates <= D modulo boundaries landing inside the window (boundaries
/// are generated from inputs one margin wider, margin = deg a).
long homology_dim(const ComplexHandle& handle, int n, int D);

/// Windowed dimension samples with fitted growth data.  The slope is per e
/// coordinate degrees (per 4 when e = 0, where it must vanish).
struct DimProfile {
    std::map<int, long> samples;
    Rat slope_per_e = 0;
    long constant = 0;
    bool stabilized = false;
};

DimProfile dim_profile(const ComplexHandle& handle, int n, const std::vector<int>& D_list);

struct TableKey {
    int r = 0;
    int p = 0;
    Direction dir = Direction::homology;
    auto operator<=>(const TableKey&) const = default;
};

struct SModuleInvariants {
    long free_rank = 0;
    std::vector<long> torsion_dims;
    long torsion_total() const;
};

struct TableCell {
    DimProfile profile;
    std::optional<SModuleInvariants> snf;
    bool insufficient_truncation = false;
};

/// Batch driver over the (r, p, direction) grid; cells are independent jobs
/// run on `jobs` threads.  Computes the SNF oracle for every cell when e > 0.
std::map<TableKey, TableCell> hochschild_table(const AlgebraContext& actx, int r_min, int r_max,
                                               int p_max, const std::vector<int>& D_list,
                                               const std::vector<Direction>& dirs, int jobs,
                                               bool with_snf = true);

}  // namespace gwa
