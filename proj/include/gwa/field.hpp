#pragma once

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace gwa {

using Int = mpz_class;
using Rat = mpq_class;

struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct HypothesisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Maximum supported order of a root of unity.
inline constexpr int kMaxRootOrder = 64;

/// The cyclotomic field Q(zeta_e) presented as Q[z]/(Phi_e), e >= 3.
/// Orders 1 and 2 live in plain Q and never get a CycloField.
class CycloField {
public:
    explicit CycloField(int e);

    int order() const { return e_; }
    /// deg Phi_e = phi(e); the dimension of the field over Q.
    int degree() const { return static_cast<int>(phi_.size()) - 1; }
    /// Coefficients of Phi_e, low degree first, monic.
    const std::vector<Rat>& modulus() const { return phi_; }

    static std::shared_ptr<const CycloField> get(int e);

private:
    int e_;
    std::vector<Rat> phi_;
};

/// Exact scalar in Q or in Q(zeta_e).  Rational values carry a null field
/// pointer; mixing a rational with a cyclotomic value promotes the rational.
/// Mixing two distinct cyclotomic fields is an error.
class FieldElement {
public:
    FieldElement() : coeffs_{Rat(0)} {}
    FieldElement(long n) : coeffs_{Rat(n)} {}
    FieldElement(const Rat& r) : coeffs_{r} {}
    FieldElement(std::shared_ptr<const CycloField> fld, std::vector<Rat> coeffs);

    static FieldElement zeta(const std::shared_ptr<const CycloField>& fld);
    static FieldElement zeta_power(const std::shared_ptr<const CycloField>& fld, long n);

    bool is_zero() const;
    bool is_rational() const { return !fld_; }
    /// Value as a rational; throws if the element is irrational.
    Rat rational_value() const;
    const std::shared_ptr<const CycloField>& field() const { return fld_; }

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    FieldElement inverse() const;
    FieldElement pow(long n) const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    /// Rough bit size, used for pivot selection in exact elimination.
    long height() const;

    std::string to_string() const;

private:
    std::shared_ptr<const CycloField> fld_;  // null: element of Q
    std::vector<Rat> coeffs_;                // size 1 if rational, else deg Phi_e

    void reduce_();
    static void align_(FieldElement& a, FieldElement& b);
};

}  // namespace gwa
