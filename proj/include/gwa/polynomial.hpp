#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gwa/field.hpp"

namespace gwa {

/// Dense polynomial in h with exact coefficients.  The zero polynomial has an
/// empty coefficient vector and degree() == nullopt (the paper's -infinity).
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const FieldElement& c);
    Polynomial(long c) : Polynomial(FieldElement(c)) {}
    explicit Polynomial(std::vector<FieldElement> coeffs);

    static Polynomial h_power(int n, const FieldElement& c = FieldElement(1L));
    static Polynomial parse(const std::string& text);

    const std::vector<FieldElement>& coeffs() const { return c_; }
    std::optional<int> degree() const;
    bool is_zero() const { return c_.empty(); }
    FieldElement coeff(int i) const;
    FieldElement leading() const;
    FieldElement eval(const FieldElement& x) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial operator*(const FieldElement& s) const;
    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Quotient and remainder with deg r < deg divisor; exact field arithmetic.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
    /// Exact quotient; throws if the division leaves a remainder.
    Polynomial exact_div(const Polynomial& divisor) const;

    Polynomial derivative() const;
    Polynomial monic() const;
    Polynomial shifted(int k) const;  // multiply by h^k

    std::string to_string() const;

private:
    std::vector<FieldElement> c_;
    void trim_();
};

/// Monic gcd by the Euclidean algorithm; gcd(0,0) is an error.
Polynomial poly_gcd(const Polynomial& p, const Polynomial& t);
/// Monic lcm of a nonempty list of nonzero polynomials.
Polynomial poly_lcm(const std::vector<Polynomial>& ps);

}  // namespace gwa
