#include "gwa/algebra.hpp"

#include <sstream>

namespace gwa {

AlgebraContext AlgebraContext::make(const Polynomial& a, const QSpec& q) {
    return make(a, RingContext::make(q));
}

AlgebraContext AlgebraContext::make(const Polynomial& a, RingContext ring) {
    if (!a.degree() || *a.degree() < 2) throw MathError("a must have degree >= 2");
    AlgebraContext actx;
    actx.a = a;
    actx.ring = std::move(ring);
    actx.l = apply_sigma(a, actx.ring) - a;
    actx.N = *a.degree();
    return actx;
}

AlgebraContext AlgebraContext::phi_target() const {
    return make(apply_sigma(a, ring), ring.inverted());
}

AlgebraContext AlgebraContext::monicized() const { return make(a.monic(), ring); }

AlgebraElement AlgebraElement::monomial(AlgTag tag, Mono m, const FieldElement& c) {
    AlgebraElement e(tag);
    if (tag == AlgTag::A && m.i > 0 && m.k > 0) throw MathError("A-monomial cannot mix y and x");
    e.add_term(m, c);
    return e;
}

AlgebraElement AlgebraElement::from_poly(AlgTag tag, const Polynomial& p) {
    AlgebraElement e(tag);
    const auto& c = p.coeffs();
    for (size_t j = 0; j < c.size(); ++j)
        if (!c[j].is_zero()) e.add_term({0, static_cast<int>(j), 0}, c[j]);
    return e;
}

void AlgebraElement::add_term(Mono m, const FieldElement& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement r(tag_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    if (tag_ != o.tag_) throw MathError("algebra mismatch");
    AlgebraElement r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const { return *this + (-o); }

AlgebraElement AlgebraElement::operator*(const FieldElement& s) const {
    AlgebraElement r(tag_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
    return r;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    return tag_ == o.tag_ && terms_ == o.terms_;
}

namespace {

AlgebraElement mul_mono(AlgTag tag, Mono m1, Mono m2, const FieldElement& coeff,
                        const AlgebraContext& actx);

// y^i h^j x^k with i,k > 0 reduced into the A-basis via y h^j x = q^{-j} h^j a.
AlgebraElement reduce_A(int i, int j, int k, const FieldElement& coeff, const AlgebraContext& actx) {
    if (i == 0 || k == 0) return AlgebraElement::monomial(AlgTag::A, {i, j, k}, coeff);
    Polynomial p = actx.a.shifted(j) * (coeff * actx.ring.q_power(-j));
    AlgebraElement out(AlgTag::A);
    for (size_t m = 0; m < p.coeffs().size(); ++m) {
        const FieldElement& c = p.coeffs()[m];
        if (c.is_zero()) continue;
        out += reduce_A(i - 1, static_cast<int>(m), k - 1, c, actx);
    }
    return out;
}

AlgebraElement mul_elems(AlgTag tag, const AlgebraElement& u, const AlgebraElement& v,
                         const AlgebraContext& actx) {
    AlgebraElement out(tag);
    for (const auto& [m1, c1] : u.terms())
        for (const auto& [m2, c2] : v.terms()) out += mul_mono(tag, m1, m2, c1 * c2, actx);
    return out;
}

AlgebraElement mul_mono(AlgTag tag, Mono m1, Mono m2, const FieldElement& coeff,
                        const AlgebraContext& actx) {
    if (coeff.is_zero()) return AlgebraElement(tag);
    if (m1.k == 0 || m2.i == 0 || tag == AlgTag::Bbar) {
        // Only q-commutation: h^j y^i = q^{ij} y^i h^j, x^k h^j = q^{kj} h^j x^k;
        // Bbar additionally has [X,Y] = 0.
        FieldElement c = coeff * actx.ring.q_power(static_cast<long>(m1.j) * m2.i +
                                                   static_cast<long>(m1.k) * m2.j);
        Mono m{m1.i + m2.i, m1.j + m2.j, m1.k + m2.k};
        if (tag == AlgTag::A) return reduce_A(m.i, m.j, m.k, c, actx);
        return AlgebraElement::monomial(tag, m, c);
    }
    // Split off one inner x|y resp. X|Y pair.
    AlgebraElement left = AlgebraElement::monomial(tag, {m1.i, m1.j, m1.k - 1}, coeff);
    AlgebraElement right = AlgebraElement::monomial(tag, {m2.i - 1, m2.j, m2.k});
    AlgebraElement mid(tag);
    if (tag == AlgTag::A) {
        // x y = a(q h)
        mid = AlgebraElement::from_poly(tag, apply_sigma(actx.a, actx.ring));
    } else {
        // X Y = Y X + l(H)
        mid = AlgebraElement::monomial(tag, {1, 0, 1}) + AlgebraElement::from_poly(tag, actx.l);
    }
    return mul_elems(tag, mul_elems(tag, left, mid, actx), right, actx);
}

const char* gen_names(AlgTag tag) { return tag == AlgTag::A ? "yhx" : "YHX"; }

}  // namespace

AlgebraElement multiply(const AlgebraElement& u, const AlgebraElement& v, const AlgebraContext& actx) {
    if (u.tag() != v.tag()) throw MathError("algebra mismatch");
    return mul_elems(u.tag(), u, v, actx);
}

AlgebraElement commutator(const AlgebraElement& u, const AlgebraElement& v, BracketMode mode,
                          const AlgebraContext& actx) {
    AlgebraElement uv = multiply(u, v, actx);
    AlgebraElement vu = multiply(v, u, actx);
    switch (mode) {
        case BracketMode::plain: return uv - vu;
        case BracketMode::q_left: return uv - vu * actx.ring.q;
        case BracketMode::q_right: return uv * actx.ring.q - vu;
    }
    throw MathError("bad bracket mode");
}

AlgebraElement omega(const AlgebraContext& actx) {
    return AlgebraElement::monomial(AlgTag::B, {1, 0, 1}) -
           AlgebraElement::from_poly(AlgTag::B, actx.a);
}

AlgebraElement project_pi(const AlgebraElement& u, const AlgebraContext& actx) {
    if (u.tag() != AlgTag::B) throw MathError("pi expects an element of B");
    AlgebraElement out(AlgTag::A);
    for (const auto& [m, c] : u.terms()) out += reduce_A(m.i, m.j, m.k, c, actx);
    return out;
}

AlgebraElement phi_iso(const AlgebraElement& u, const AlgebraContext& actx) {
    if (u.tag() != AlgTag::A) throw MathError("Phi expects an element of A");
    FieldElement qinv = actx.ring.q.inverse();
    AlgebraElement out(AlgTag::A);
    for (const auto& [m, c] : u.terms()) {
        if (m.i > 0) {
            // Phi(y^i h^j) = x^i h^j = q^{-ij} h^j x^i in the target algebra
            out.add_term({0, m.j, m.i}, c * qinv.pow(static_cast<long>(m.i) * m.j));
        } else {
            // Phi(h^j x^k) = h^j y^k = q^{-jk} y^k h^j
            out.add_term({m.k, m.j, 0}, c * qinv.pow(static_cast<long>(m.j) * m.k));
        }
    }
    return out;
}

int weight_of(const AlgebraElement& u) {
    if (u.is_zero()) return 0;
    int w = u.terms().begin()->first.weight();
    for (const auto& [m, c] : u.terms())
        if (m.weight() != w) throw MathError("element is not weight-homogeneous");
    return w;
}

std::map<int, AlgebraElement> weight_decompose(const AlgebraElement& u) {
    std::map<int, AlgebraElement> parts;
    for (const auto& [m, c] : u.terms()) {
        auto [it, inserted] = parts.try_emplace(m.weight(), u.tag());
        it->second.add_term(m, c);
    }
    return parts;
}

AlgebraElement weight_component(AlgTag tag, int r, const Polynomial& p) {
    AlgebraElement out(tag);
    const auto& c = p.coeffs();
    for (size_t j = 0; j < c.size(); ++j) {
        if (c[j].is_zero()) continue;
        Mono m = r >= 0 ? Mono{r, static_cast<int>(j), 0} : Mono{0, static_cast<int>(j), -r};
        out.add_term(m, c[j]);
    }
    return out;
}

Polynomial component_poly(const AlgebraElement& u, int r) {
    std::vector<FieldElement> coeffs;
    for (const auto& [m, c] : u.terms()) {
        bool pure = r >= 0 ? (m.i == r && m.k == 0) : (m.i == 0 && m.k == -r);
        if (!pure)
            throw MathError("element is not a pure weight-" + std::to_string(r) + " component");
        if (coeffs.size() <= static_cast<size_t>(m.j)) coeffs.resize(static_cast<size_t>(m.j) + 1);
        coeffs[static_cast<size_t>(m.j)] = c;
    }
    return Polynomial(std::move(coeffs));
}

std::string AlgebraElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    const char* names = gen_names(tag_);
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string cs = c.to_string();
        bool neg = !cs.empty() && cs[0] == '-' && cs.find(' ') == std::string::npos;
        if (first) {
            if (neg) {
                os << "-";
                cs = cs.substr(1);
            }
        } else {
            os << (neg ? " - " : " + ");
            if (neg) cs = cs.substr(1);
        }
        first = false;
        bool parens = cs.find(' ') != std::string::npos;
        bool trivial_mono = m.i == 0 && m.j == 0 && m.k == 0;
        if (cs != "1" || trivial_mono) {
            os << (parens ? "(" + cs + ")" : cs);
            if (!trivial_mono) os << "*";
        }
        bool started = false;
        auto emit_gen = [&](char g, int e) {
            if (e == 0) return;
            if (started) os << "*";
            os << g;
            if (e > 1) os << "^" << e;
            started = true;
        };
        emit_gen(names[0], m.i);
        emit_gen(names[1], m.j);
        emit_gen(names[2], m.k);
    }
    return os.str();
}

}  // namespace gwa
