#include "gwa/ring.hpp"

#include "gwa/matrix.hpp"

namespace gwa {

RingContext RingContext::make(const QSpec& spec) {
    RingContext ctx;
    ctx.spec = spec;
    ctx.e = spec.order();
    if (spec.kind == QSpec::Kind::RootOfUnity && spec.e >= 3) {
        ctx.fld = CycloField::get(spec.e);
        ctx.q = FieldElement::zeta(ctx.fld);
    } else {
        ctx.q = FieldElement(spec.value);
    }
    return ctx;
}

RingContext RingContext::inverted() const {
    RingContext ctx = *this;
    ctx.q = q.inverse();
    if (spec.kind == QSpec::Kind::Rational) ctx.spec = QSpec::rational(Rat(1) / spec.value);
    return ctx;
}

FieldElement q_integer(long n, const FieldElement& lambda) {
    if (n < 0) throw MathError("q-integer needs n >= 0");
    FieldElement acc, power(1L);
    for (long i = 0; i < n; ++i) {
        acc += power;
        power *= lambda;
    }
    return acc;
}

Polynomial apply_sigma(const Polynomial& p, const RingContext& ctx, long power) {
    std::vector<FieldElement> v(p.coeffs());
    for (size_t i = 0; i < v.size(); ++i)
        v[i] *= ctx.q_power(static_cast<long>(i) * power);
    return Polynomial(std::move(v));
}

namespace {

void require_n_operator_input(const Polynomial& f, const RingContext& ctx) {
    if (ctx.e <= 0) throw MathError("N(f) needs q of finite order");
    if (f.is_zero() || f.coeff(0).is_zero()) throw MathError("N(f) needs f(0) != 0");
}

}  // namespace

Polynomial n_operator(const Polynomial& f, const RingContext& ctx) {
    require_n_operator_input(f, ctx);
    std::vector<Polynomial> orbit;
    orbit.reserve(static_cast<size_t>(ctx.e));
    for (int i = 0; i < ctx.e; ++i) orbit.push_back(apply_sigma(f, ctx, i).monic());
    return poly_lcm(orbit);
}

Polynomial f_bar(const Polynomial& f, const RingContext& ctx) {
    return n_operator(f, ctx).exact_div(f).monic();
}

int eta(const Polynomial& f, const RingContext& ctx) {
    Polynomial nf = n_operator(f, ctx);
    int dn = *nf.degree();
    if (dn % ctx.e != 0) throw MathError("deg N(f) not divisible by e");
    int value = *f.degree() - dn / ctx.e;
    if (value < 0) throw MathError("negative eta; broken invariant");
    return value;
}

bool is_in_S(const Polynomial& p, const RingContext& ctx, int l) {
    if (ctx.e <= 0) throw MathError("S membership needs q of finite order");
    const auto& c = p.coeffs();
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        int d = static_cast<int>(i);
        if (d < l || (d - l) % ctx.e != 0) return false;
    }
    return true;
}

int pi_hlS_dim(const Polynomial& f, const RingContext& ctx, int l, int D) {
    require_n_operator_input(f, ctx);
    if (D < *n_operator(f, ctx).degree()) throw MathError("pi_hlS_dim needs D >= deg N(f)");
    int df = *f.degree();
    SparseMatrix m(df, (D - l) / ctx.e + 1);
    int col = 0;
    for (int d = l; d <= D; d += ctx.e, ++col) {
        Polynomial rem = Polynomial::h_power(d).divmod(f).second;
        for (int i = 0; i < df; ++i) m.add(i, col, rem.coeff(i));
    }
    return m.rank();
}

int coker_psi_dim(const Polynomial& f, const RingContext& ctx, int l, int D) {
    require_n_operator_input(f, ctx);
    int df = *f.degree();
    int cod = D + df + 1;
    FieldElement ql = ctx.q_power(l);
    SparseMatrix m(cod, D + 1);
    for (int j = 0; j <= D; ++j) {
        Polynomial image = apply_sigma(f.shifted(j), ctx) - f.shifted(j) * ql;
        for (int i = 0; i < cod; ++i) m.add(i, j, image.coeff(i));
    }
    return cod - m.rank();
}

}  // namespace gwa
