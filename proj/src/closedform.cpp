#include "gwa/closedform.hpp"

#include <sstream>

#include "gwa/ring.hpp"

namespace gwa {

Invariants compute_invariants(const AlgebraContext& actx) {
    const Polynomial& a = actx.a;
    if (!a.degree() || *a.degree() < 2) throw HypothesisError("a must have degree >= 2");
    if (a.leading() != FieldElement(1L)) throw HypothesisError("a must be monic for closed forms");
    if (a.coeff(0).is_zero())
        throw HypothesisError("closed forms unavailable: a(0) = 0");
    Invariants inv;
    inv.N = actx.N;
    inv.e = actx.ring.e;
    inv.c = poly_gcd(a, a.derivative());
    inv.M = *inv.c.degree();
    inv.a_over_c = a.exact_div(inv.c);
    if (inv.e > 0) {
        inv.N_a = n_operator(a, actx.ring);
        inv.N_c = n_operator(inv.c, actx.ring);
        inv.N_ac = n_operator(inv.a_over_c, actx.ring);
        inv.eta_a = eta(a, actx.ring);
        inv.eta_c = eta(inv.c, actx.ring);
        inv.eta_ac = eta(inv.a_over_c, actx.ring);
    }
    return inv;
}

WeightClass classify_weight(long r, int e) {
    if (e == 0) return r == 0 ? WeightClass::singular : WeightClass::regular;
    return r % e == 0 ? WeightClass::singular : WeightClass::regular;
}

long DimensionSpec::torsion_total() const {
    long t = 0;
    for (long d : torsion) t += d;
    return t;
}

std::string DimensionSpec::display() const {
    std::ostringstream os;
    os << finite_dim;
    for (const auto& s : s_summands) {
        os << " + S";
        if (s.shift) os << "[" << *s.shift << "]";
    }
    for (long t : torsion) os << " + T(" << t << ")";
    return os.str();
}

namespace {

DimensionSpec finite(long d) {
    DimensionSpec s;
    s.finite_dim = d;
    return s;
}

void add_summand(DimensionSpec& s, std::optional<int> shift) {
    s.s_summands.push_back({shift});
}

void add_torsion(DimensionSpec& s, long dim) {
    if (dim > 0) s.torsion.push_back(dim);
}

}  // namespace

DimensionSpec predict_homology(const Invariants& inv, int p, long r) {
    if (p < 0) throw MathError("negative homological degree");
    if (inv.e == 0) {
        if (r == 0) return finite(p == 0 ? inv.N : inv.M);
        return finite(p <= 1 ? 1 : 0);
    }
    WeightClass wc = classify_weight(r, inv.e);
    DimensionSpec s;
    if (r == 0) {
        switch (p) {
            case 0:
                // coker psi_{a,0} = h^0 S + k^{eta(a)}: the invariant part of
                // k[h] survives every commutator, so a free rank sits on top
                // of the finite defect.
                s.finite_dim = inv.eta_a;
                add_summand(s, 0);
                return s;
            case 1:
                s.finite_dim = inv.eta_c;
                add_summand(s, std::nullopt);
                add_summand(s, std::nullopt);
                return s;
            case 2:
                add_summand(s, std::nullopt);
                add_torsion(s, inv.M);
                return s;
            default:
                add_torsion(s, inv.M);
                return s;
        }
    }
    if (wc == WeightClass::singular) {
        switch (p) {
            case 0: add_summand(s, 0); return s;
            case 1:
                add_summand(s, 0);
                add_summand(s, inv.e - 1);
                return s;
            case 2: add_summand(s, inv.e - 1); return s;
            default: return s;
        }
    }
    // regular nonzero weights carry k[h]/(h) in degrees 0 and 1
    return finite(p <= 1 ? 1 : 0);
}

DimensionSpec predict_cohomology(const Invariants& inv, int p, long r) {
    if (p < 0) throw MathError("negative homological degree");
    if (inv.e == 0) {
        if (r != 0) return finite(0);
        if (p <= 1) return finite(1);
        if (p == 2) return finite(inv.N);
        return finite(inv.M);
    }
    WeightClass wc = classify_weight(r, inv.e);
    DimensionSpec s;
    if (r == 0) {
        switch (p) {
            case 0: add_summand(s, 0); return s;
            case 1:
                add_summand(s, 0);
                add_summand(s, std::nullopt);
                return s;
            case 2:
                s.finite_dim = inv.eta_ac;
                add_summand(s, std::nullopt);
                add_torsion(s, inv.M);
                return s;
            default:
                add_torsion(s, inv.M);
                return s;
        }
    }
    if (wc == WeightClass::singular) {
        switch (p) {
            case 0: add_summand(s, 0); return s;
            case 1:
                add_summand(s, std::nullopt);
                add_summand(s, std::nullopt);
                return s;
            case 2: add_summand(s, std::nullopt); return s;
            default: return s;
        }
    }
    return finite(0);
}

GlDim gldim(const AlgebraContext& actx) {
    Polynomial c = poly_gcd(actx.a, actx.a.derivative());
    return *c.degree() == 0 ? GlDim::finite_2 : GlDim::infinite;
}

DimInterval truncated_dim(const DimensionSpec& spec, int e, int D) {
    DimInterval iv;
    long base = spec.finite_dim;
    for (long t : spec.torsion) base += std::min(t, static_cast<long>(D) + 1);
    iv.lo = iv.hi = base;
    auto count = [&](int shift) -> long {
        if (shift > D) return 0;
        return (D - shift) / e + 1;
    };
    for (const auto& s : spec.s_summands) {
        if (e == 0) throw MathError("free S-summands need e > 0");
        if (s.shift) {
            iv.lo += count(*s.shift);
            iv.hi += count(*s.shift);
        } else {
            iv.lo += count(e - 1);
            iv.hi += count(0);
        }
    }
    return iv;
}

}  // namespace gwa
