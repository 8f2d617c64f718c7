#include "gwa/chains.hpp"

#include <sstream>

namespace gwa {

std::string WedgeMonomial::name() const {
    if (mask == 0) return "1";
    std::string s;
    if (has(Y)) s += 'Y';
    if (has(H)) s += 'H';
    if (has(X)) s += 'X';
    return s;
}

std::string ChainKey::to_string() const {
    return "(row " + std::to_string(row) + ", " + w.name() + ")";
}

std::vector<ChainKey> chain_components(int n) {
    std::vector<ChainKey> out;
    for (int t = 0; 2 * t <= n; ++t) {
        int m = n - 2 * t;
        if (m > 3) continue;
        for (unsigned mask = 0; mask < 8; ++mask) {
            WedgeMonomial w{mask};
            if (w.degree() == m) out.push_back({t, w});
        }
    }
    return out;
}

int total_rank(int n) { return static_cast<int>(chain_components(n).size()); }

void ChainVector::add(const ChainKey& key, const Polynomial& p) {
    if (p.is_zero()) return;
    if (2 * key.row + key.w.degree() != degree_)
        throw MathError("chain component " + key.to_string() + " invalid in degree " +
                        std::to_string(degree_));
    auto it = comps_.find(key);
    if (it == comps_.end()) {
        comps_.emplace(key, p);
    } else {
        it->second += p;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

Polynomial ChainVector::coord(const ChainKey& key) const {
    auto it = comps_.find(key);
    return it == comps_.end() ? Polynomial() : it->second;
}

ChainVector ChainVector::operator+(const ChainVector& o) const {
    if (dir_ != o.dir_ || weight_ != o.weight_ || degree_ != o.degree_)
        throw MathError("chain vector shape mismatch");
    ChainVector r = *this;
    for (const auto& [k, p] : o.comps_) r.add(k, p);
    return r;
}

ChainVector ChainVector::operator-(const ChainVector& o) const {
    if (dir_ != o.dir_ || weight_ != o.weight_ || degree_ != o.degree_)
        throw MathError("chain vector shape mismatch");
    ChainVector r = *this;
    for (const auto& [k, p] : o.comps_) r.add(k, -p);
    return r;
}

bool ChainVector::operator==(const ChainVector& o) const {
    return dir_ == o.dir_ && weight_ == o.weight_ && degree_ == o.degree_ && comps_ == o.comps_;
}

std::string ChainVector::to_string() const {
    if (comps_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, p] : comps_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << p.to_string() << ")|" << k.to_string();
    }
    return os.str();
}

void BimoduleChain::add_term(const Key& k, const FieldElement& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void BimoduleChain::add(const AlgebraElement& left, WedgeMonomial w, const AlgebraElement& right) {
    if (left.tag() != lt_ || right.tag() != rt_) throw MathError("bimodule tag mismatch");
    for (const auto& [ml, cl] : left.terms())
        for (const auto& [mr, cr] : right.terms()) add_term({w, ml, mr}, cl * cr);
}

BimoduleChain BimoduleChain::operator+(const BimoduleChain& o) const {
    if (lt_ != o.lt_ || rt_ != o.rt_) throw MathError("bimodule tag mismatch");
    BimoduleChain r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, c);
    return r;
}

BimoduleChain BimoduleChain::operator-(const BimoduleChain& o) const {
    if (lt_ != o.lt_ || rt_ != o.rt_) throw MathError("bimodule tag mismatch");
    BimoduleChain r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
    return r;
}

bool BimoduleChain::operator==(const BimoduleChain& o) const {
    return lt_ == o.lt_ && rt_ == o.rt_ && terms_ == o.terms_;
}

BimoduleChain BimoduleChain::left_mul(const AlgebraElement& b, const AlgebraContext& actx) const {
    if (b.tag() != lt_) throw MathError("bimodule tag mismatch");
    BimoduleChain r(lt_, rt_);
    for (const auto& [k, c] : terms_) {
        AlgebraElement prod = multiply(b, AlgebraElement::monomial(lt_, k.left, c), actx);
        for (const auto& [m, pc] : prod.terms()) r.add_term({k.w, m, k.right}, pc);
    }
    return r;
}

BimoduleChain BimoduleChain::right_mul(const AlgebraElement& b, const AlgebraContext& actx) const {
    if (b.tag() != rt_) throw MathError("bimodule tag mismatch");
    BimoduleChain r(lt_, rt_);
    for (const auto& [k, c] : terms_) {
        AlgebraElement prod = multiply(AlgebraElement::monomial(rt_, k.right, c), b, actx);
        for (const auto& [m, pc] : prod.terms()) r.add_term({k.w, k.left, m}, pc);
    }
    return r;
}

std::string BimoduleChain::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.to_string() << "*[" << AlgebraElement::monomial(lt_, k.left).to_string() << "|"
           << k.w.name() << "|" << AlgebraElement::monomial(rt_, k.right).to_string() << "]";
    }
    return os.str();
}

}  // namespace gwa
