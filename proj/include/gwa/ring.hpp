#pragma once

#include <memory>
#include <string>

#include "gwa/polynomial.hpp"
#include "gwa/qspec.hpp"

namespace gwa {

/// k[h] together with the automorphism sigma(h) = q h.  The scalar q is kept
/// as a field element so that derived contexts (q^{-1} for the Phi transport)
/// are expressible even when q is an irrational root of unity.
struct RingContext {
    QSpec spec;
    int e = 0;  // order of q as a root of unity, 0 if infinite order
    std::shared_ptr<const CycloField> fld;  // null when the ground field is Q
    FieldElement q;

    static RingContext make(const QSpec& spec);
    /// Context for the same field with q replaced by q^{-1}.
    RingContext inverted() const;

    FieldElement q_power(long n) const { return q.pow(n); }
};

/// The q-integer (n)_lambda = 1 + lambda + ... + lambda^{n-1}; (0) = 0.
FieldElement q_integer(long n, const FieldElement& lambda);

/// sigma^power applied coefficientwise: h^i picks up q^{i*power}.
Polynomial apply_sigma(const Polynomial& p, const RingContext& ctx, long power = 1);

/// N(f) = lcm(f, sigma f, ..., sigma^{e-1} f), monic.  Needs e > 0, f(0) != 0.
Polynomial n_operator(const Polynomial& f, const RingContext& ctx);

/// N(f)/f, an exact quotient.
Polynomial f_bar(const Polynomial& f, const RingContext& ctx);

/// eta(f) = deg f - deg N(f)/e; a nonnegative integer for valid input.
int eta(const Polynomial& f, const RingContext& ctx);

/// Membership in h^l k[h^e]: nonzero coefficients only at indices >= l that
/// are congruent to l mod e.
bool is_in_S(const Polynomial& p, const RingContext& ctx, int l = 0);

/// dim of the image of {h^{l+je} : l+je <= D} in k[h]/(f), by exact rank.
int pi_hlS_dim(const Polynomial& f, const RingContext& ctx, int l, int D);

/// dim coker of psi_{f,l}: p -> (sigma - q^l)(f p), restricted to domain
/// degree <= D and codomain degree <= D + deg f.
int coker_psi_dim(const Polynomial& f, const RingContext& ctx, int l, int D);

}  // namespace gwa
