#include "gwa/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace gwa {

namespace {

// Dense Q[x] helpers for computing Phi_e and for residue arithmetic.
using RVec = std::vector<Rat>;

void trim(RVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

RVec mul(const RVec& a, const RVec& b) {
    if (a.empty() || b.empty()) return {};
    RVec r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// Exact division; remainder must vanish for the Phi_e recursion.
RVec divmod(RVec num, const RVec& den, RVec* rem_out = nullptr) {
    if (den.empty()) throw MathError("polynomial division by zero");
    RVec q;
    if (num.size() >= den.size()) q.assign(num.size() - den.size() + 1, Rat(0));
    while (num.size() >= den.size()) {
        Rat c = num.back() / den.back();
        size_t shift = num.size() - den.size();
        q[shift] = c;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        trim(num);
        if (!num.empty() && num.size() >= den.size() && num.back() == 0) trim(num);
    }
    if (rem_out) *rem_out = num;
    return q;
}

const RVec& phi_poly(int e);

RVec compute_phi(int e) {
    // x^e - 1 divided by the product of Phi_d over proper divisors d of e.
    RVec num(e + 1, Rat(0));
    num[0] = -1;
    num[e] = 1;
    RVec den{Rat(1)};
    for (int d = 1; d < e; ++d) {
        if (e % d != 0) continue;
        den = mul(den, phi_poly(d));
    }
    RVec rem;
    RVec q = divmod(std::move(num), den, &rem);
    if (!rem.empty()) throw MathError("cyclotomic polynomial recursion failed");
    return q;
}

const RVec& phi_poly(int e) {
    // compute_phi re-enters phi_poly for the proper divisors of e
    static std::map<int, RVec> cache;
    static std::recursive_mutex m;
    std::lock_guard<std::recursive_mutex> lock(m);
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    RVec p;
    if (e == 1) {
        p = {Rat(-1), Rat(1)};
    } else {
        p = compute_phi(e);
    }
    return cache.emplace(e, std::move(p)).first->second;
}

}  // namespace

CycloField::CycloField(int e) : e_(e) {
    if (e < 3 || e > kMaxRootOrder)
        throw MathError("cyclotomic order out of supported range: " + std::to_string(e));
    phi_ = phi_poly(e);
}

std::shared_ptr<const CycloField> CycloField::get(int e) {
    static std::map<int, std::shared_ptr<const CycloField>> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    auto fld = std::make_shared<const CycloField>(e);
    cache.emplace(e, fld);
    return fld;
}

FieldElement::FieldElement(std::shared_ptr<const CycloField> fld, std::vector<Rat> coeffs)
    : fld_(std::move(fld)), coeffs_(std::move(coeffs)) {
    if (!fld_) throw MathError("null field in cyclotomic constructor");
    reduce_();
}

FieldElement FieldElement::zeta(const std::shared_ptr<const CycloField>& fld) {
    std::vector<Rat> c(fld->degree(), Rat(0));
    c[1] = 1;
    return FieldElement(fld, std::move(c));
}

FieldElement FieldElement::zeta_power(const std::shared_ptr<const CycloField>& fld, long n) {
    long e = fld->order();
    long m = ((n % e) + e) % e;
    std::vector<Rat> c(static_cast<size_t>(m) + 1, Rat(0));
    c[static_cast<size_t>(m)] = 1;
    return FieldElement(fld, std::move(c));
}

void FieldElement::reduce_() {
    if (!fld_) return;
    const auto& phi = fld_->modulus();
    size_t deg = phi.size() - 1;
    while (coeffs_.size() > deg) {
        Rat c = coeffs_.back();
        size_t shift = coeffs_.size() - 1 - deg;
        if (c != 0)
            for (size_t i = 0; i < deg; ++i) coeffs_[shift + i] -= c * phi[i];
        coeffs_.pop_back();
    }
    coeffs_.resize(deg, Rat(0));
}

void FieldElement::align_(FieldElement& a, FieldElement& b) {
    if (a.fld_ == b.fld_) return;
    if (a.fld_ && b.fld_) {
        if (a.fld_->order() != b.fld_->order()) throw MathError("field mismatch");
        return;  // same order, same canonical field object semantics
    }
    FieldElement& rat = a.fld_ ? b : a;
    FieldElement& cyc = a.fld_ ? a : b;
    Rat v = rat.coeffs_[0];
    rat.fld_ = cyc.fld_;
    rat.coeffs_.assign(static_cast<size_t>(cyc.fld_->degree()), Rat(0));
    rat.coeffs_[0] = v;
}

bool FieldElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c == 0; });
}

Rat FieldElement::rational_value() const {
    if (!fld_) return coeffs_[0];
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) throw MathError("element is not rational");
    return coeffs_[0];
}

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    FieldElement a = *this, b = o;
    align_(a, b);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    return a;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    FieldElement a = *this, b = o;
    align_(a, b);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] -= b.coeffs_[i];
    return a;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    FieldElement a = *this, b = o;
    align_(a, b);
    if (!a.fld_) {
        a.coeffs_[0] *= b.coeffs_[0];
        return a;
    }
    std::vector<Rat> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            if (b.coeffs_[j] != 0) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    FieldElement r;
    r.fld_ = a.fld_;
    r.coeffs_ = std::move(prod);
    r.reduce_();
    return r;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw MathError("division by zero");
    if (!fld_) {
        FieldElement r = *this;
        r.coeffs_[0] = Rat(1) / coeffs_[0];
        return r;
    }
    // Extended Euclid in Q[x] against Phi_e, which is irreducible.
    RVec r0 = fld_->modulus();
    RVec r1(coeffs_.begin(), coeffs_.end());
    trim(r1);
    RVec s0{}, s1{Rat(1)};
    while (!r1.empty() && r1.size() > 1) {
        RVec rem;
        RVec q = divmod(r0, r1, &rem);
        RVec s2 = s0;
        RVec qs = mul(q, s1);
        if (s2.size() < qs.size()) s2.resize(qs.size(), Rat(0));
        for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) throw MathError("non-invertible residue; modulus not irreducible?");
    Rat unit = r1[0];
    for (auto& c : s1) c /= unit;
    s1.resize(static_cast<size_t>(fld_->degree()), Rat(0));
    return FieldElement(fld_, std::move(s1));
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

FieldElement FieldElement::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    FieldElement base = *this, acc(1L);
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

bool FieldElement::operator==(const FieldElement& o) const {
    FieldElement a = *this, b = o;
    align_(a, b);
    return a.coeffs_ == b.coeffs_;
}

long FieldElement::height() const {
    long h = 0;
    for (const auto& c : coeffs_) {
        if (c == 0) continue;
        h += static_cast<long>(mpz_sizeinbase(c.get_num().get_mpz_t(), 2));
        h += static_cast<long>(mpz_sizeinbase(c.get_den().get_mpz_t(), 2));
    }
    return h;
}

std::string FieldElement::to_string() const {
    if (!fld_) return coeffs_[0].get_str();
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        Rat c = coeffs_[i];
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (i == 0 || c != 1) os << c.get_str();
        if (i > 0) {
            if (c != 1) os << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) return "0";
    return os.str();
}

}  // namespace gwa
