#pragma once

#include "gwa/engine.hpp"

namespace gwa {

/// Exact S-module invariants of the weight-r (co)homology at degree n in the
/// root-of-unity case, with S = k[h^e] = k[t].  The weight-r complex is a
/// complex of finitely generated free k[t]-modules (each coordinate
/// polynomial splits into e residue classes), so kernels, images and the
/// homology presentation are computed exactly by Smith normal form; no
/// truncation is involved.
SModuleInvariants smodule_invariants(const AlgebraContext& actx, Direction dir, int weight, int n);

/// Internal building block, exposed for tests: the differential out of
/// degree n as a k[t]-matrix in the residue basis (component, h-residue).
struct TPolyMatrix {
    int rows = 0, cols = 0;
    std::vector<Polynomial> entries;  // row-major polynomials in t

    Polynomial& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }
    const Polynomial& at(int r, int c) const { return entries[static_cast<size_t>(r) * cols + c]; }
};

TPolyMatrix t_matrix(const ComplexHandle& handle, int n);

/// Monic invariant factors of a k[t]-matrix (Smith normal form diagonal).
std::vector<Polynomial> invariant_factors(TPolyMatrix m);

}  // namespace gwa
