#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gwa/field.hpp"
#include "gwa/qspec.hpp"

using namespace gwa;

namespace {

FieldElement q_of(const QSpec& s) {
    if (s.kind == QSpec::Kind::RootOfUnity && s.e >= 3)
        return FieldElement::zeta(CycloField::get(s.e));
    return FieldElement(s.value);
}

FieldElement random_element(std::mt19937_64& rng, const std::shared_ptr<const CycloField>& fld) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    if (!fld) {
        Rat r(num(rng), den(rng));
        r.canonicalize();
        return FieldElement(r);
    }
    std::vector<Rat> c(static_cast<size_t>(fld->degree()));
    for (auto& x : c) {
        x = Rat(num(rng), den(rng));
        x.canonicalize();
    }
    return FieldElement(fld, std::move(c));
}

}  // namespace

TEST_CASE("rational arithmetic") {
    FieldElement half(Rat(1, 2)), third(Rat(1, 3));
    CHECK((half + third) == FieldElement(Rat(5, 6)));
    CHECK((half * third) == FieldElement(Rat(1, 6)));
    CHECK((half - half).is_zero());
    CHECK((half / third) == FieldElement(Rat(3, 2)));
    CHECK_THROWS_AS(half / FieldElement(), MathError);
}

TEST_CASE("cyclotomic relations") {
    auto f2 = CycloField::get(4);
    auto z4 = FieldElement::zeta(f2);
    CHECK((z4 * z4) == FieldElement(-1L));

    // zeta_2 * zeta_2 = 1, with zeta_2 represented as -1 in Q
    FieldElement z2(-1L);
    CHECK((z2 * z2) == FieldElement(1L));

    // Phi_3 relation: zeta^2 + zeta + 1 = 0
    auto f3 = CycloField::get(3);
    auto z3 = FieldElement::zeta(f3);
    CHECK((z3 * z3 + z3 + FieldElement(1L)).is_zero());

    // inverses in Q(zeta_5)
    auto f5 = CycloField::get(5);
    auto z5 = FieldElement::zeta(f5);
    FieldElement u = z5 + FieldElement(2L);
    CHECK((u * u.inverse()) == FieldElement(1L));
}

TEST_CASE("primitivity: q^e = 1 and q^j != 1 for 0 < j < e, e <= 12") {
    for (int e = 2; e <= 12; ++e) {
        FieldElement q = q_of(QSpec::root_of_unity(e));
        CHECK(q.pow(e) == FieldElement(1L));
        for (int j = 1; j < e; ++j) CHECK(q.pow(j) != FieldElement(1L));
    }
}

TEST_CASE("order_of_unity") {
    CHECK(QSpec::parse("2").order() == 0);
    CHECK(QSpec::parse("-1").order() == 2);
    CHECK(QSpec::parse("zeta:5").order() == 5);
    CHECK(QSpec::parse("3/2").order() == 0);
    CHECK(QSpec::parse("-1").kind == QSpec::Kind::RootOfUnity);
    CHECK_THROWS_AS(QSpec::parse("1"), MathError);
    CHECK_THROWS_AS(QSpec::parse("0"), MathError);
    CHECK_THROWS_AS(QSpec::root_of_unity(1), MathError);
}

TEST_CASE("q_power") {
    CHECK(q_of(QSpec::parse("2")).pow(-2) == FieldElement(Rat(1, 4)));
    CHECK(q_of(QSpec::parse("zeta:3")).pow(3) == FieldElement(1L));
    CHECK(q_of(QSpec::parse("-1")).pow(7) == FieldElement(-1L));
}

TEST_CASE("field axioms, randomized") {
    std::mt19937_64 rng(20240611);
    std::vector<std::shared_ptr<const CycloField>> fields = {nullptr, CycloField::get(3),
                                                             CycloField::get(5)};
    for (const auto& fld : fields) {
        for (int trial = 0; trial < 350; ++trial) {
            FieldElement a = random_element(rng, fld);
            FieldElement b = random_element(rng, fld);
            FieldElement c = random_element(rng, fld);
            CHECK(((a + b) + c) == (a + (b + c)));
            CHECK(((a * b) * c) == (a * (b * c)));
            CHECK((a * (b + c)) == (a * b + a * c));
            CHECK((a + b) == (b + a));
            CHECK((a * b) == (b * a));
            if (!a.is_zero()) CHECK((a * a.inverse()) == FieldElement(1L));
        }
    }
}

TEST_CASE("rational-cyclotomic promotion and field mismatch") {
    auto z3 = FieldElement::zeta(CycloField::get(3));
    auto z5 = FieldElement::zeta(CycloField::get(5));
    CHECK((z3 + FieldElement(1L)) * (z3 + FieldElement(1L)) == z3 * z3 + z3 * FieldElement(2L) + FieldElement(1L));
    CHECK_THROWS_AS(z3 + z5, MathError);
}
