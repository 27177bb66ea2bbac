#ifndef QCLIFFORD_CLIFFORD_HPP
#define QCLIFFORD_CLIFFORD_HPP

#include "qclifford/rational.hpp"

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qclifford {

/// Basis blade e_A = e_{h1} e_{h2} ... e_{hr} with h1 < h2 < ... < hr, stored
/// as a bitmask (bit i set iff e_i is a factor). The empty mask is 1.
struct Blade {
    std::uint64_t mask = 0;

    static constexpr Blade identity() { return {0}; }
    static constexpr Blade generator(unsigned i) { return {std::uint64_t{1} << i}; }

    constexpr unsigned grade() const { return static_cast<unsigned>(std::popcount(mask)); }
    constexpr bool contains(unsigned i) const { return (mask >> i) & 1u; }
    constexpr bool is_identity() const { return mask == 0; }
    /// Highest generator index present, or -1 for the identity.
    constexpr int top_generator() const { return mask ? 63 - std::countl_zero(mask) : -1; }

    friend constexpr bool operator==(Blade, Blade) = default;
    /// Ordered by grade first, then by mask.
    friend constexpr std::strong_ordering operator<=>(Blade a, Blade b) {
        if (auto c = a.grade() <=> b.grade(); c != 0) return c;
        return a.mask <=> b.mask;
    }

    /// "1", "e0", "e12", ... (single-digit generator indices only).
    std::string to_string() const {
        if (mask == 0) return "1";
        std::string s = "e";
        for (unsigned i = 0; i < 64; ++i)
            if (contains(i)) {
                if (i > 9) throw std::invalid_argument("blade text syntax supports generators e0..e9 only");
                s += static_cast<char>('0' + i);
            }
        return s;
    }

    /// Inverse of to_string. Digits must be strictly ascending.
    static Blade parse(std::string_view text) {
        if (text == "1") return identity();
        if (text.size() < 2 || text.front() != 'e') throw std::invalid_argument("malformed blade '" + std::string(text) + "'");
        Blade b;
        int last = -1;
        for (char c : text.substr(1)) {
            if (c < '0' || c > '9') throw std::invalid_argument("malformed blade '" + std::string(text) + "'");
            int d = c - '0';
            if (d <= last) throw std::invalid_argument("blade digits must be strictly ascending in '" + std::string(text) + "'");
            last = d;
            b.mask |= std::uint64_t{1} << d;
        }
        return b;
    }
};

struct SignedBlade {
    int sign;
    Blade blade;
    friend bool operator==(const SignedBlade&, const SignedBlade&) = default;
};

/// Product of two basis blades in Cl(0,m): e_i e_j = -e_j e_i (i != j), e_i^2 = -1.
constexpr SignedBlade blade_mul(Blade a, Blade b) {
    // Transpositions: every generator of a must pass each generator of b with a
    // smaller index.
    unsigned swaps = 0;
    for (std::uint64_t rest = a.mask; rest; rest &= rest - 1) {
        unsigned i = static_cast<unsigned>(std::countr_zero(rest));
        swaps += static_cast<unsigned>(std::popcount(b.mask & ((std::uint64_t{1} << i) - 1)));
    }
    unsigned squares = static_cast<unsigned>(std::popcount(a.mask & b.mask));
    int sign = ((swaps + squares) & 1u) ? -1 : 1;
    return {sign, Blade{a.mask ^ b.mask}};
}

/// Element of Cl(0,n+1): sparse map blade -> coefficient, zeros never stored.
class CliffordElement {
public:
    using Terms = std::map<Blade, Rational>;

    CliffordElement() = default;
    CliffordElement(Rational scalar) { add(Blade::identity(), scalar); }
    CliffordElement(int scalar) : CliffordElement(Rational(scalar)) {}
    CliffordElement(Blade b, Rational coeff = 1) { add(b, coeff); }

    static CliffordElement generator(unsigned i) { return CliffordElement(Blade::generator(i)); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_identity()); }

    Rational coefficient(Blade b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Highest generator index used by any stored blade (-1 if only scalars).
    int top_generator() const {
        int top = -1;
        for (const auto& [b, c] : terms_) top = std::max(top, b.top_generator());
        return top;
    }

    void add(Blade b, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    CliffordElement& operator+=(const CliffordElement& o) {
        for (const auto& [b, c] : o.terms_) add(b, c);
        return *this;
    }
    CliffordElement& operator-=(const CliffordElement& o) {
        for (const auto& [b, c] : o.terms_) add(b, -c);
        return *this;
    }
    CliffordElement& operator*=(const Rational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [b, c] : terms_) c *= s;
        return *this;
    }

    friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
    friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
    friend CliffordElement operator-(CliffordElement a) { return a *= Rational(-1); }
    friend CliffordElement operator*(CliffordElement a, const Rational& s) { return a *= s; }
    friend CliffordElement operator*(const Rational& s, CliffordElement a) { return a *= s; }

    friend CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
        CliffordElement r;
        for (const auto& [ba, ca] : a.terms_)
            for (const auto& [bb, cb] : b.terms_) {
                SignedBlade p = blade_mul(ba, bb);
                r.add(p.blade, p.sign > 0 ? ca * cb : -(ca * cb));
            }
        return r;
    }

    friend bool operator==(const CliffordElement&, const CliffordElement&) = default;

    friend std::ostream& operator<<(std::ostream& os, const CliffordElement& a) {
        if (a.is_zero()) return os << "0";
        bool first = true;
        for (const auto& [b, c] : a.terms_) {
            if (!first) os << (c.sign() < 0 ? " - " : " + ");
            else if (c.sign() < 0) os << "-";
            first = false;
            Rational mag = c.sign() < 0 ? -c : c;
            if (b.is_identity()) os << mag;
            else if (mag == 1) os << b.to_string();
            else os << mag << "*" << b.to_string();
        }
        return os;
    }

private:
    Terms terms_;
};

/// Clifford conjugation: the anti-automorphism with conj(e_i) = -e_i. On a
/// grade-r blade it is the sign (-1)^{r(r+1)/2}.
inline CliffordElement conjugate(const CliffordElement& a) {
    CliffordElement r;
    for (const auto& [b, c] : a.terms()) {
        unsigned g = b.grade();
        bool flip = ((g * (g + 1) / 2) & 1u) != 0;
        r.add(b, flip ? -c : c);
    }
    return r;
}

inline Rational scalar_part(const CliffordElement& a) { return a.coefficient(Blade::identity()); }

/// Squared length |a|_0^2 = 2^{m} * sum_A a_A^2 for m generators. The length
/// itself is the square root of this value.
inline Rational norm0(const CliffordElement& a, unsigned generators) {
    Rational sum = 0;
    for (const auto& [b, c] : a.terms()) sum += c * c;
    return sum * Rational(2).pow(generators);
}

/// conj(e0) = -e0.
inline CliffordElement ebar0() { return CliffordElement(Blade::generator(0), Rational(-1)); }

struct E0Split {
    CliffordElement u;
    CliffordElement v;
};

/// Unique decomposition a = u + conj(e0) v with u, v free of e0.
inline E0Split split_e0(const CliffordElement& a) {
    E0Split s;
    for (const auto& [b, c] : a.terms()) {
        if (b.contains(0))
            // e0 e_B = -conj(e0) e_B
            s.v.add(Blade{b.mask & ~std::uint64_t{1}}, -c);
        else
            s.u.add(b, c);
    }
    return s;
}

} // namespace qclifford

#endif // QCLIFFORD_CLIFFORD_HPP
