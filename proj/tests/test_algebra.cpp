#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gwa/algebra.hpp"

using namespace gwa;

namespace {

Polynomial P(const std::string& s) { return Polynomial::parse(s); }

AlgebraElement gen_y(AlgTag t) { return AlgebraElement::monomial(t, {1, 0, 0}); }
AlgebraElement gen_h(AlgTag t) { return AlgebraElement::monomial(t, {0, 1, 0}); }
AlgebraElement gen_x(AlgTag t) { return AlgebraElement::monomial(t, {0, 0, 1}); }

Mono random_mono(std::mt19937_64& rng, AlgTag tag, int max_exp) {
    std::uniform_int_distribution<int> d(0, max_exp);
    Mono m{d(rng), d(rng), d(rng)};
    if (tag == AlgTag::A && m.i > 0 && m.k > 0) {
        if (rng() & 1) m.i = 0; else m.k = 0;
    }
    return m;
}

}  // namespace

TEST_CASE("defining relations in A") {
    AlgebraContext actx = AlgebraContext::make(P("h^2-1"), QSpec::parse("2"));
    auto y = gen_y(AlgTag::A), h = gen_h(AlgTag::A), x = gen_x(AlgTag::A);
    // x y = a(q h)
    CHECK(multiply(x, y, actx) ==
          AlgebraElement::from_poly(AlgTag::A, apply_sigma(actx.a, actx.ring)));
    // y x = a(h)
    CHECK(multiply(y, x, actx) == AlgebraElement::from_poly(AlgTag::A, actx.a));
    // x h = q h x
    CHECK(multiply(x, h, actx) == multiply(h, x, actx) * actx.ring.q);
    // h y = q y h
    CHECK(multiply(h, y, actx) == multiply(y, h, actx) * actx.ring.q);
    // y h^2 x = (1/4) h^2 (h^2-1)
    AlgebraElement h2 = AlgebraElement::from_poly(AlgTag::A, P("h^2"));
    AlgebraElement lhs = multiply(multiply(y, h2, actx), x, actx);
    CHECK(lhs == AlgebraElement::from_poly(AlgTag::A, P("1/4*h^2*(h^2-1)")));
}

TEST_CASE("defining relations in B and Bbar") {
    AlgebraContext actx = AlgebraContext::make(P("h^2-1"), QSpec::parse("2"));
    for (AlgTag t : {AlgTag::B, AlgTag::Bbar}) {
        auto Y = gen_y(t), H = gen_h(t), X = gen_x(t);
        CHECK(multiply(H, Y, actx) == multiply(Y, H, actx) * actx.ring.q);
        CHECK(multiply(X, H, actx) == multiply(H, X, actx) * actx.ring.q);
        AlgebraElement br = commutator(X, Y, BracketMode::plain, actx);
        if (t == AlgTag::B)
            CHECK(br == AlgebraElement::from_poly(t, actx.l));
        else
            CHECK(br.is_zero());
    }
}

TEST_CASE("commutator modes") {
    AlgebraContext actx = AlgebraContext::make(P("h^2-1"), QSpec::parse("2"));
    auto y = gen_y(AlgTag::A), h = gen_h(AlgTag::A), x = gen_x(AlgTag::A);
    // [h,y] = hy - yh = (q-1) yh
    CHECK(commutator(h, y, BracketMode::plain, actx) ==
          multiply(y, h, actx) * (actx.ring.q - FieldElement(1L)));
    CHECK(commutator(y, y, BracketMode::plain, actx).is_zero());
    // [x,h]_q with the pinned convention: xh - q hx = 0
    CHECK(commutator(x, h, BracketMode::q_left, actx).is_zero());
}

TEST_CASE("Omega is central and equals XY - sigma(a)") {
    for (auto cfg : {std::pair{P("h^2-1"), QSpec::parse("2")},
                     std::pair{P("h^2+1"), QSpec::parse("-1")},
                     std::pair{P("h^3+h+1"), QSpec::parse("zeta:3")}}) {
        AlgebraContext actx = AlgebraContext::make(cfg.first, cfg.second);
        AlgebraElement om = omega(actx);
        for (auto g : {gen_y(AlgTag::B), gen_h(AlgTag::B), gen_x(AlgTag::B)})
            CHECK(commutator(om, g, BracketMode::plain, actx).is_zero());
        AlgebraElement other = multiply(gen_x(AlgTag::B), gen_y(AlgTag::B), actx) -
                               AlgebraElement::from_poly(AlgTag::B, apply_sigma(actx.a, actx.ring));
        CHECK(om == other);
    }
}

TEST_CASE("pi projects B onto A and kills Omega B") {
    AlgebraContext actx = AlgebraContext::make(P("h^2-1"), QSpec::parse("2"));
    CHECK(project_pi(omega(actx), actx).is_zero());
    AlgebraElement YX = AlgebraElement::monomial(AlgTag::B, {1, 0, 1});
    CHECK(project_pi(YX, actx) == AlgebraElement::from_poly(AlgTag::A, actx.a));
    AlgebraElement YH = AlgebraElement::monomial(AlgTag::B, {1, 1, 0});
    CHECK(project_pi(YH, actx) == AlgebraElement::monomial(AlgTag::A, {1, 1, 0}));

    std::mt19937_64 rng(555);
    for (int t = 0; t < 200; ++t) {
        AlgebraElement u = AlgebraElement::monomial(AlgTag::B, random_mono(rng, AlgTag::B, 4));
        AlgebraElement v = AlgebraElement::monomial(AlgTag::B, random_mono(rng, AlgTag::B, 4));
        CHECK(project_pi(multiply(u, v, actx), actx) ==
              multiply(project_pi(u, actx), project_pi(v, actx), actx));
        CHECK(project_pi(multiply(omega(actx), v, actx), actx).is_zero());
    }
}

TEST_CASE("associativity, randomized, all three algebras") {
    std::mt19937_64 rng(1234);
    for (auto cfg : {std::pair{P("h^2-1"), QSpec::parse("2")},
                     std::pair{P("h^3+h+1"), QSpec::parse("zeta:3")}}) {
        AlgebraContext actx = AlgebraContext::make(cfg.first, cfg.second);
        for (AlgTag tag : {AlgTag::A, AlgTag::B, AlgTag::Bbar}) {
            for (int t = 0; t < 180; ++t) {
                AlgebraElement u = AlgebraElement::monomial(tag, random_mono(rng, tag, 5));
                AlgebraElement v = AlgebraElement::monomial(tag, random_mono(rng, tag, 5));
                AlgebraElement w = AlgebraElement::monomial(tag, random_mono(rng, tag, 5));
                CHECK(multiply(multiply(u, v, actx), w, actx) ==
                      multiply(u, multiply(v, w, actx), actx));
            }
        }
    }
}

TEST_CASE("weights: additivity, decomposition, components") {
    AlgebraContext actx = AlgebraContext::make(P("h^2-1"), QSpec::parse("2"));
    std::mt19937_64 rng(77);
    for (int t = 0; t < 300; ++t) {
        AlgebraElement u = AlgebraElement::monomial(AlgTag::A, random_mono(rng, AlgTag::A, 5));
        AlgebraElement v = AlgebraElement::monomial(AlgTag::A, random_mono(rng, AlgTag::A, 5));
        AlgebraElement uv = multiply(u, v, actx);
        if (!uv.is_zero()) CHECK(weight_of(uv) == weight_of(u) + weight_of(v));
    }

    // y^2 h + h x decomposes into weights {2, -1}
    AlgebraElement mix = AlgebraElement::monomial(AlgTag::A, {2, 1, 0}) +
                         AlgebraElement::monomial(AlgTag::A, {0, 1, 1});
    auto parts = weight_decompose(mix);
    CHECK(parts.size() == 2);
    CHECK(parts.at(2) == AlgebraElement::monomial(AlgTag::A, {2, 1, 0}));
    CHECK(parts.at(-1) == AlgebraElement::monomial(AlgTag::A, {0, 1, 1}));
    CHECK(weight_decompose(AlgebraElement(AlgTag::A)).empty());
    AlgebraElement h3 = AlgebraElement::from_poly(AlgTag::A, P("h^3"));
    CHECK(weight_decompose(h3).size() == 1);
    CHECK(weight_decompose(h3).count(0) == 1);

    CHECK(weight_component(AlgTag::A, 2, P("h+1")) ==
          AlgebraElement::monomial(AlgTag::A, {2, 1, 0}) +
              AlgebraElement::monomial(AlgTag::A, {2, 0, 0}));
    CHECK(weight_component(AlgTag::A, -1, P("h")) == AlgebraElement::monomial(AlgTag::A, {0, 1, 1}));
    CHECK(weight_component(AlgTag::A, 0, P("1")) == AlgebraElement::one(AlgTag::A));
    CHECK(component_poly(weight_component(AlgTag::A, -3, P("h^4-2")), -3) == P("h^4-2"));
    CHECK_THROWS_AS(component_poly(mix, 2), MathError);
}

TEST_CASE("Phi is an isomorphism onto A(sigma(a), 1/q) negating weights") {
    for (auto cfg : {std::pair{P("h^2-1"), QSpec::parse("2")},
                     std::pair{P("h^3+h+1"), QSpec::parse("zeta:3")}}) {
        AlgebraContext actx = AlgebraContext::make(cfg.first, cfg.second);
        AlgebraContext target = actx.phi_target();
        std::mt19937_64 rng(31337);
        for (int t = 0; t < 250; ++t) {
            AlgebraElement u = AlgebraElement::monomial(AlgTag::A, random_mono(rng, AlgTag::A, 4));
            AlgebraElement v = AlgebraElement::monomial(AlgTag::A, random_mono(rng, AlgTag::A, 4));
            CHECK(phi_iso(multiply(u, v, actx), actx) ==
                  multiply(phi_iso(u, actx), phi_iso(v, actx), target));
            CHECK(weight_of(phi_iso(u, actx)) == -weight_of(u));
        }
        // Phi(y^2 h) lands in the x-side basis of the target
        AlgebraElement img = phi_iso(AlgebraElement::monomial(AlgTag::A, {2, 1, 0}), actx);
        CHECK(img == AlgebraElement::monomial(AlgTag::A, {0, 1, 2}, target.ring.q_power(2)));
    }
}

TEST_CASE("element text format") {
    AlgebraElement el = AlgebraElement::monomial(AlgTag::A, {2, 1, 0}, FieldElement(3L)) -
                        AlgebraElement::monomial(AlgTag::A, {0, 1, 3}, FieldElement(Rat(1, 2)));
    CHECK(el.to_string() == "-1/2*h*x^3 + 3*y^2*h");
    CHECK(AlgebraElement(AlgTag::A).to_string() == "0");
}

TEST_CASE("algebra mismatch and basis guards") {
    AlgebraContext actx = AlgebraContext::make(P("h^2-1"), QSpec::parse("2"));
    CHECK_THROWS_AS(multiply(gen_y(AlgTag::A), gen_y(AlgTag::B), actx), MathError);
    CHECK_THROWS_AS(AlgebraElement::monomial(AlgTag::A, {1, 0, 1}), MathError);
    std::mt19937_64 rng(9);
    for (int t = 0; t < 200; ++t) {
        AlgebraElement u = AlgebraElement::monomial(AlgTag::A, random_mono(rng, AlgTag::A, 5));
        AlgebraElement v = AlgebraElement::monomial(AlgTag::A, random_mono(rng, AlgTag::A, 5));
        AlgebraElement prod = multiply(u, v, actx);
        for (const auto& [m, c] : prod.terms()) CHECK(m.i * m.k == 0);
    }
}
