#pragma once

#include "gwa/chains.hpp"

namespace gwa {

/// Alternative q-bracket readings; the identity suite pins q_left,
/// [u,v]_q = uv - q vu.  q_right is kept so the convention experiment can be
/// run mechanically.
struct Conventions {
    BracketMode qbracket = BracketMode::q_left;
};

/// One summand of a differential applied to a single component u (x) w.
struct DiffTerm {
    WedgeMonomial w;
    AlgebraElement u;
};
using DiffTerms = std::vector<DiffTerm>;

/// The four differential-formula families of the weight-graded Hochschild
/// complexes, evaluated on one component through algebra arithmetic.
DiffTerms hom_d(const AlgebraContext& actx, const AlgebraElement& u, WedgeMonomial w,
                const Conventions& cv = {});
DiffTerms hom_delta(const AlgebraContext& actx, const AlgebraElement& u, WedgeMonomial w);
DiffTerms coh_d(const AlgebraContext& actx, const AlgebraElement& u, WedgeMonomial w,
                const Conventions& cv = {});
DiffTerms coh_delta(const AlgebraContext& actx, const AlgebraElement& u, WedgeMonomial w);

/// Weight-r total complex (homology: degree drops; cohomology: degree rises).
/// Row bookkeeping: d stays in its row; the column differential moves one row
/// toward the augmentation on the chain side and one row away on the cochain
/// side.
class ComplexHandle {
public:
    ComplexHandle(AlgebraContext actx, Direction dir, int weight, Conventions cv = {})
        : actx_(std::move(actx)), dir_(dir), weight_(weight), cv_(cv) {}

    const AlgebraContext& actx() const { return actx_; }
    Direction dir() const { return dir_; }
    int weight() const { return weight_; }

    int out_degree(int n) const { return dir_ == Direction::homology ? n - 1 : n + 1; }

    ChainVector apply(const ChainVector& z) const;        // D = d + delta
    ChainVector apply_d(const ChainVector& z) const;      // row part
    ChainVector apply_delta(const ChainVector& z) const;  // column part

private:
    AlgebraContext actx_;
    Direction dir_;
    int weight_;
    Conventions cv_;

    ChainVector apply_parts(const ChainVector& z, bool with_d, bool with_delta) const;
};

struct ValidationReport {
    long checks = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// d^2 = 0, delta^2 = 0, d delta + delta d = 0 at the formula level plus
/// D^2 = 0 and weight preservation on coordinate basis chains.
ValidationReport validate_identities(const AlgebraContext& actx, Direction dir, int h_deg_bound,
                                     int degree_bound, int weight_bound,
                                     const Conventions& cv = {});

/// The bimodule complexes: rows of the resolution double complex over a given
/// pair of side algebras, the vertical differential over (A, A), and the
/// contraction of the graded Smith complex over (Bbar, Bbar).
class BimoduleComplex {
public:
    BimoduleComplex(AlgebraContext actx, AlgTag left, AlgTag right);

    BimoduleChain zero() const { return BimoduleChain(left_, right_); }
    BimoduleChain basis(WedgeMonomial w, Mono left = {}, Mono right = {}) const;

    /// Row differential; the Y^X formula carries the l-integral except over
    /// the graded algebra, whose bracket vanishes.
    BimoduleChain d(const BimoduleChain& z) const;
    /// Vertical differential of the resolution double complex; (A, A) only.
    BimoduleChain delta(const BimoduleChain& z) const;
    /// Left-linear contraction of the graded Smith complex; (Bbar, Bbar) only.
    BimoduleChain contraction(const BimoduleChain& z) const;
    /// Multiplication map on wedge-degree-0 chains: u|v -> uv (pi(u) v for
    /// mixed (B, A) chains).
    AlgebraElement mu(const BimoduleChain& z) const;

    const AlgebraContext& actx() const { return actx_; }

private:
    AlgebraContext actx_;
    AlgTag left_, right_;

    BimoduleChain d_basis(WedgeMonomial w) const;
    BimoduleChain delta_basis(WedgeMonomial w) const;
};

/// d^2, the (A,A) anticommutation, the graded contraction identities and the
/// section-4.1-style checks, on monomials with exponents <= exp_bound.
ValidationReport validate_bimodule_identities(const AlgebraContext& actx, int exp_bound);

/// The comparison maps between the two resolutions of A as a left B-module,
/// checked on basis monomials with exponents <= exp_bound.
ValidationReport validate_comparison_maps(const AlgebraContext& actx, int exp_bound);

/// Explicit first-page representative cycles for the supported (side, p, r)
/// cases; each returned chain is an exact cycle of the column differential.
std::vector<ChainVector> first_page_representatives(const AlgebraContext& actx, Direction side,
                                                    int p, int r);

}  // namespace gwa
