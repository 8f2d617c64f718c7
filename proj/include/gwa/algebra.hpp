#pragma once

#include <compare>
#include <map>
#include <string>

#include "gwa/ring.hpp"

namespace gwa {

enum class AlgTag { A, B, Bbar };

/// Basis monomial y^i h^j x^k (tag A, with i*k == 0) or Y^i H^j X^k (B, swB).
struct Mono {
    int i = 0, j = 0, k = 0;
    auto operator<=>(const Mono&) const = default;
    int weight() const { return i - k; }
};

/// The Bavula algebra data: the defining polynomial a and the ring context.
/// l = sigma(a) - a is the bracket polynomial of the associated Smith algebra.
/// a need not be monic for arithmetic; closed-form predictions require it.
struct AlgebraContext {
    Polynomial a;
    RingContext ring;
    Polynomial l;
    int N = 0;  // deg a

    static AlgebraContext make(const Polynomial& a, const QSpec& q);
    static AlgebraContext make(const Polynomial& a, RingContext ring);
    /// Context of A(sigma(a), q^{-1}), the codomain of the Phi isomorphism.
    AlgebraContext phi_target() const;
    /// Same algebra with a rescaled monic; isomorphic via x -> lc(a) x.
    AlgebraContext monicized() const;
};

/// Normal-form element of A, B or Bbar: a finite FieldElement-combination of
/// basis monomials.
class AlgebraElement {
public:
    explicit AlgebraElement(AlgTag tag = AlgTag::A) : tag_(tag) {}
    static AlgebraElement monomial(AlgTag tag, Mono m, const FieldElement& c = FieldElement(1L));
    static AlgebraElement one(AlgTag tag) { return monomial(tag, {}); }
    /// p(h) viewed inside the algebra (p(H) for B/Bbar).
    static AlgebraElement from_poly(AlgTag tag, const Polynomial& p);

    AlgTag tag() const { return tag_; }
    const std::map<Mono, FieldElement>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    AlgebraElement operator-() const;
    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator*(const FieldElement& s) const;
    AlgebraElement& operator+=(const AlgebraElement& o) { return *this = *this + o; }
    AlgebraElement& operator-=(const AlgebraElement& o) { return *this = *this - o; }
    bool operator==(const AlgebraElement& o) const;
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

    void add_term(Mono m, const FieldElement& c);

    std::string to_string() const;

private:
    AlgTag tag_;
    std::map<Mono, FieldElement> terms_;
};

/// Normal-form product; both operands must carry the same tag.
AlgebraElement multiply(const AlgebraElement& u, const AlgebraElement& v, const AlgebraContext& actx);

enum class BracketMode { plain, q_left, q_right };

/// plain: uv - vu.  q_left: uv - q vu (the convention the identity suite
/// pins).  q_right: q uv - vu, kept for the convention experiment.
AlgebraElement commutator(const AlgebraElement& u, const AlgebraElement& v, BracketMode mode,
                          const AlgebraContext& actx);

/// Omega = YX - a(H), the central element of B.
AlgebraElement omega(const AlgebraContext& actx);

/// Canonical projection B -> A = B/(Omega): Y,H,X -> y,h,x.
AlgebraElement project_pi(const AlgebraElement& u, const AlgebraContext& actx);

/// Phi: A(a,q) -> A(sigma(a), q^{-1}) with y <-> x, h fixed.  Evaluate the
/// result against actx.phi_target().
AlgebraElement phi_iso(const AlgebraElement& u, const AlgebraContext& actx);

/// Weight of a homogeneous element; throws on mixed weights.
int weight_of(const AlgebraElement& u);
std::map<int, AlgebraElement> weight_decompose(const AlgebraElement& u);

/// The weight-r component with coordinate polynomial p: y^r p(h) for r >= 0,
/// p(h) x^{-r} for r < 0.  Tags B/Bbar use the same Y-or-X convention.
AlgebraElement weight_component(AlgTag tag, int r, const Polynomial& p);
/// Inverse of weight_component; throws if u is not of that pure shape.
Polynomial component_poly(const AlgebraElement& u, int r);

}  // namespace gwa
