#pragma once

#include <optional>

#include "gwa/algebra.hpp"

namespace gwa {

/// The numerical invariants driving the closed-form answers.
struct Invariants {
    int N = 0;  // deg a
    int M = 0;  // deg (a : a')
    int e = 0;
    Polynomial c;         // (a : a')
    Polynomial a_over_c;  // a / c
    // Root-of-unity data; only meaningful when e > 0.
    int eta_a = 0, eta_c = 0, eta_ac = 0;
    Polynomial N_a, N_c, N_ac;
};

/// Requires a monic of degree >= 2 and, when predictions are wanted at all,
/// a(0) != 0 (inputs with a(0) = 0 are rejected for closed forms).
Invariants compute_invariants(const AlgebraContext& actx);

enum class WeightClass { regular, singular };

/// singular iff e | r (with e = 0 this means r = 0).
WeightClass classify_weight(long r, int e);

/// Predicted homology value: a finite-dimensional part, free S-summands of
/// rank one each (with the h-degree shift of their representatives when the
/// computation pins one), and k[h]/(c)-type torsion factors.
struct DimensionSpec {
    long finite_dim = 0;
    struct Summand {
        std::optional<int> shift;  // representative degrees shift + e Z
    };
    std::vector<Summand> s_summands;
    std::vector<long> torsion;

    long free_rank() const { return static_cast<long>(s_summands.size()); }
    long torsion_total() const;
    std::string display() const;  // e.g. "2 + 1*S + k[h]/c(2)"
};

DimensionSpec predict_homology(const Invariants& inv, int p, long r);
DimensionSpec predict_cohomology(const Invariants& inv, int p, long r);

enum class GlDim { finite_2, infinite };
GlDim gldim(const AlgebraContext& actx);

struct DimInterval {
    long lo = 0, hi = 0;
    bool contains(long v) const { return lo <= v && v <= hi; }
};

/// Dimension of the predicted value truncated to coordinate degrees <= D.
/// Summands without a pinned shift contribute an interval of width one.
DimInterval truncated_dim(const DimensionSpec& spec, int e, int D);

}  // namespace gwa
