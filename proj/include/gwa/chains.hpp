#pragma once

#include <bit>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "gwa/algebra.hpp"

namespace gwa {

enum class Direction { homology, cohomology };

/// Exterior monomial on {Y, H, X} (chain side) or the dual basis (cochain
/// side), with canonical order Y < H < X.
struct WedgeMonomial {
    unsigned mask = 0;  // bit 0: Y, bit 1: H, bit 2: X

    static constexpr unsigned Y = 1, H = 2, X = 4;

    int degree() const { return std::popcount(mask); }
    bool has(unsigned g) const { return (mask & g) != 0; }
    /// Weight of the monomial inside a weight-graded chain: #Y - #X on the
    /// chain side; the dual basis carries the opposite sign.
    int weight(Direction dir) const {
        int w = (has(Y) ? 1 : 0) - (has(X) ? 1 : 0);
        return dir == Direction::homology ? w : -w;
    }
    auto operator<=>(const WedgeMonomial&) const = default;
    std::string name() const;
};

inline constexpr WedgeMonomial W1{0};
inline constexpr WedgeMonomial WY{WedgeMonomial::Y};
inline constexpr WedgeMonomial WH{WedgeMonomial::H};
inline constexpr WedgeMonomial WX{WedgeMonomial::X};
inline constexpr WedgeMonomial WYH{WedgeMonomial::Y | WedgeMonomial::H};
inline constexpr WedgeMonomial WYX{WedgeMonomial::Y | WedgeMonomial::X};
inline constexpr WedgeMonomial WHX{WedgeMonomial::H | WedgeMonomial::X};
inline constexpr WedgeMonomial WYHX{WedgeMonomial::Y | WedgeMonomial::H | WedgeMonomial::X};

/// Position in the total complex: row t (>= 0) of the double complex and a
/// wedge monomial; the component lives in total degree 2*row + deg(w).
struct ChainKey {
    int row = 0;
    WedgeMonomial w;
    auto operator<=>(const ChainKey&) const = default;
    std::string to_string() const;
};

/// Components of total degree n, ordered.  Counts run 1, 3, 4, 4, 4, ...
std::vector<ChainKey> chain_components(int n);
int total_rank(int n);

/// Weight-graded element of the total complex.  The coordinate polynomial p
/// at (t, w) denotes u (x) w with u the weight-(r - weight(w)) component with
/// coordinates p.
class ChainVector {
public:
    ChainVector(Direction dir, int weight, int degree)
        : dir_(dir), weight_(weight), degree_(degree) {}

    Direction dir() const { return dir_; }
    int weight() const { return weight_; }
    int degree() const { return degree_; }
    const std::map<ChainKey, Polynomial>& comps() const { return comps_; }
    bool is_zero() const { return comps_.empty(); }

    void add(const ChainKey& key, const Polynomial& p);
    Polynomial coord(const ChainKey& key) const;
    ChainVector operator+(const ChainVector& o) const;
    ChainVector operator-(const ChainVector& o) const;
    bool operator==(const ChainVector& o) const;

    std::string to_string() const;

private:
    Direction dir_;
    int weight_, degree_;
    std::map<ChainKey, Polynomial> comps_;
};

/// Formal sum of terms left | w | right with basis monomials on both sides.
/// Coefficients are pushed into the scalar of each term.
class BimoduleChain {
public:
    struct Key {
        WedgeMonomial w;
        Mono left, right;
        auto operator<=>(const Key&) const = default;
    };

    BimoduleChain(AlgTag left_tag, AlgTag right_tag) : lt_(left_tag), rt_(right_tag) {}

    AlgTag left_tag() const { return lt_; }
    AlgTag right_tag() const { return rt_; }
    const std::map<Key, FieldElement>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Key& k, const FieldElement& c);
    /// left (x) w (x) right expanded into monomial terms.
    void add(const AlgebraElement& left, WedgeMonomial w, const AlgebraElement& right);

    BimoduleChain operator+(const BimoduleChain& o) const;
    BimoduleChain operator-(const BimoduleChain& o) const;
    bool operator==(const BimoduleChain& o) const;

    BimoduleChain left_mul(const AlgebraElement& b, const AlgebraContext& actx) const;
    BimoduleChain right_mul(const AlgebraElement& b, const AlgebraContext& actx) const;

    std::string to_string() const;

private:
    AlgTag lt_, rt_;
    std::map<Key, FieldElement> terms_;
};

}  // namespace gwa
