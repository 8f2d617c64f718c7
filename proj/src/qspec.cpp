#include "gwa/qspec.hpp"

namespace gwa {

QSpec QSpec::rational(const Rat& v) {
    if (v == 0 || v == 1) throw MathError("q must avoid 0 and 1");
    if (v == -1) return root_of_unity(2);
    QSpec s;
    s.kind = Kind::Rational;
    s.value = v;
    return s;
}

QSpec QSpec::root_of_unity(int e) {
    if (e < 2 || e > kMaxRootOrder)
        throw MathError("root-of-unity order must lie in [2, " + std::to_string(kMaxRootOrder) + "]");
    QSpec s;
    s.kind = Kind::RootOfUnity;
    s.e = e;
    if (e == 2) s.value = Rat(-1);
    return s;
}

QSpec QSpec::parse(const std::string& text) {
    if (text.rfind("zeta:", 0) == 0) {
        int e = std::stoi(text.substr(5));
        return root_of_unity(e);
    }
    Rat v;
    if (v.set_str(text, 10) != 0) throw MathError("cannot parse q value: " + text);
    v.canonicalize();
    return rational(v);
}

int QSpec::order() const {
    if (kind == Kind::RootOfUnity) return e;
    return 0;  // rational values other than ±1; -1 was canonicalized away
}

std::string QSpec::to_string() const {
    if (kind == Kind::RootOfUnity && e != 2) return "zeta:" + std::to_string(e);
    if (kind == Kind::RootOfUnity) return "-1";
    return value.get_str();
}

}  // namespace gwa
