#include "gwa/polynomial.hpp"

#include <cctype>
#include <sstream>

namespace gwa {

Polynomial::Polynomial(const FieldElement& c) {
    if (!c.is_zero()) c_.push_back(c);
}

Polynomial::Polynomial(std::vector<FieldElement> coeffs) : c_(std::move(coeffs)) { trim_(); }

Polynomial Polynomial::h_power(int n, const FieldElement& c) {
    if (n < 0) throw MathError("negative h-power");
    if (c.is_zero()) return {};
    std::vector<FieldElement> v(static_cast<size_t>(n) + 1);
    v.back() = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim_() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::optional<int> Polynomial::degree() const {
    if (c_.empty()) return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
}

FieldElement Polynomial::coeff(int i) const {
    if (i < 0 || static_cast<size_t>(i) >= c_.size()) return FieldElement();
    return c_[static_cast<size_t>(i)];
}

FieldElement Polynomial::leading() const {
    if (c_.empty()) throw MathError("leading coefficient of zero polynomial");
    return c_.back();
}

FieldElement Polynomial::eval(const FieldElement& x) const {
    FieldElement acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<FieldElement> v(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < v.size(); ++i) {
        if (i < c_.size()) v[i] += c_[i];
        if (i < o.c_.size()) v[i] += o.c_[i];
    }
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (c_.empty() || o.c_.empty()) return {};
    std::vector<FieldElement> v(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            if (!o.c_[j].is_zero()) v[i + j] += c_[i] * o.c_[j];
    }
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const FieldElement& s) const {
    Polynomial r = *this;
    for (auto& c : r.c_) c = c * s;
    r.trim_();
    return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw MathError("polynomial division by zero");
    Polynomial rem = *this;
    std::vector<FieldElement> q;
    int dd = *divisor.degree();
    if (rem.degree() && *rem.degree() >= dd)
        q.assign(static_cast<size_t>(*rem.degree() - dd) + 1, FieldElement());
    FieldElement lead_inv = divisor.leading().inverse();
    while (rem.degree() && *rem.degree() >= dd) {
        int shift = *rem.degree() - dd;
        FieldElement c = rem.leading() * lead_inv;
        q[static_cast<size_t>(shift)] = c;
        rem -= divisor.shifted(shift) * c;
    }
    return {Polynomial(std::move(q)), rem};
}

Polynomial Polynomial::exact_div(const Polynomial& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw MathError("inexact polynomial division");
    return q;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<FieldElement> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * FieldElement(static_cast<long>(i));
    return Polynomial(std::move(v));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    return *this * leading().inverse();
}

Polynomial Polynomial::shifted(int k) const {
    if (is_zero()) return {};
    if (k < 0) throw MathError("negative shift");
    std::vector<FieldElement> v(c_.size() + static_cast<size_t>(k));
    for (size_t i = 0; i < c_.size(); ++i) v[i + static_cast<size_t>(k)] = c_[i];
    return Polynomial(std::move(v));
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        const FieldElement& c = c_[i];
        if (c.is_zero()) continue;
        std::string cs = c.to_string();
        bool neg = !cs.empty() && cs[0] == '-' && cs.find(' ') == std::string::npos &&
                   cs.find('+') == std::string::npos;
        if (first) {
            if (neg) { os << "-"; cs = cs.substr(1); }
        } else {
            os << (neg ? " - " : " + ");
            if (neg) cs = cs.substr(1);
        }
        first = false;
        bool needs_parens = cs.find(' ') != std::string::npos;
        if (i == 0) {
            os << (needs_parens ? "(" + cs + ")" : cs);
        } else {
            if (cs != "1") os << (needs_parens ? "(" + cs + ")" : cs) << "*";
            os << "h";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Polynomial poly_gcd(const Polynomial& p, const Polynomial& t) {
    if (p.is_zero() && t.is_zero()) throw MathError("gcd(0,0) is undefined");
    Polynomial a = p, b = t;
    while (!b.is_zero()) {
        auto [q, r] = a.divmod(b);
        (void)q;
        a = b;
        b = r;
    }
    return a.monic();
}

Polynomial poly_lcm(const std::vector<Polynomial>& ps) {
    if (ps.empty()) throw MathError("lcm of empty list");
    Polynomial acc(1L);
    for (const auto& p : ps) {
        if (p.is_zero()) throw MathError("lcm with zero entry");
        Polynomial g = poly_gcd(acc, p);
        acc = (acc * p).exact_div(g).monic();
    }
    return acc;
}

namespace {

// Recursive-descent parser for polynomial text over h.  Accepts both plain
// signed monomial lists ("h^4 - 2/3*h + 1") and factored products with
// parentheses ("(h-1)^2*(h+2)").
struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }

    Polynomial expr() {
        Polynomial acc;
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        acc = term();
        if (neg) acc = -acc;
        for (;;) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos;
                Polynomial t = term();
                acc = (c == '+') ? acc + t : acc - t;
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (eat('*')) acc *= factor();
        return acc;
    }

    Polynomial factor() {
        Polynomial base = atom();
        if (eat('^')) {
            long n = integer();
            if (n < 0) throw MathError("negative exponent in polynomial");
            Polynomial r(1L);
            for (long i = 0; i < n; ++i) r *= base;
            return r;
        }
        return base;
    }

    Polynomial atom() {
        char c = peek();
        if (c == '(') {
            ++pos;
            Polynomial inner = expr();
            if (!eat(')')) throw MathError("expected ')' in polynomial");
            return inner;
        }
        if (c == 'h') {
            ++pos;
            return Polynomial::h_power(1);
        }
        return Polynomial(FieldElement(rational()));
    }

    long integer() {
        skip();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw MathError("expected integer in polynomial at '" + s.substr(start) + "'");
        return std::stol(s.substr(start, pos - start));
    }

    Rat rational() {
        skip();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw MathError("unexpected token in polynomial at '" + s.substr(start) + "'");
        std::string num = s.substr(start, pos - start);
        if (eat('/')) {
            size_t dstart = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == dstart) throw MathError("expected denominator in polynomial");
            num += "/" + s.substr(dstart, pos - dstart);
        }
        Rat v;
        if (v.set_str(num, 10) != 0) throw MathError("cannot parse rational: " + num);
        v.canonicalize();
        return v;
    }
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text) {
    Parser p(text);
    Polynomial r = p.expr();
    p.skip();
    if (p.pos != text.size()) throw MathError("trailing junk in polynomial: '" + text.substr(p.pos) + "'");
    return r;
}

}  // namespace gwa
