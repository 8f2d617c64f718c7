#pragma once

#include <string>

#include "gwa/field.hpp"

namespace gwa {

/// Description of the deformation scalar q: an exact rational outside {0,1},
/// or the distinguished primitive e-th root of unity zeta_e (e >= 2).
/// Rational(-1) and RootOfUnity(2) denote the same q and canonicalize to the
/// latter; its field is still plain Q.
struct QSpec {
    enum class Kind { Rational, RootOfUnity };

    Kind kind = Kind::Rational;
    Rat value;  // for Kind::Rational
    int e = 0;  // for Kind::RootOfUnity

    static QSpec rational(const Rat& v);
    static QSpec root_of_unity(int e);
    static QSpec parse(const std::string& text);  // "2", "-1", "3/2", "zeta:5"

    /// Order of q as a root of unity; 0 when q is not one.
    int order() const;
    std::string to_string() const;
};

}  // namespace gwa
